#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corelab/genfun.hpp"
#include "corelab/lattice.hpp"
#include "corelab/stats.hpp"

#include <functional>
#include <numeric>
#include <set>

using namespace corelab;

namespace {

std::set<std::string> keys(const std::vector<CorootVector>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(to_string(v));
  return out;
}

// all points with coordinates in (1/step) Z inside [lo_i, hi_i]
void for_each_box_point(const std::vector<BigInt>& lo, const std::vector<BigInt>& hi, std::int64_t step,
                        const std::function<void(const CorootVector&)>& fn) {
  const std::size_t n = lo.size();
  CorootVector x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(x);
      return;
    }
    for (BigInt v = lo[i]; v <= hi[i]; ++v) {
      x(i) = Rational(v, BigInt(step));
      rec(i + 1);
    }
  };
  rec(0);
}

void bounding_box(const std::vector<CorootVector>& vertices, std::int64_t step, std::vector<BigInt>& lo,
                  std::vector<BigInt>& hi) {
  const auto n = vertices.front().size();
  lo.assign(n, BigInt(0));
  hi.assign(n, BigInt(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational mn = vertices[0](i), mx = vertices[0](i);
    for (const auto& v : vertices) {
      mn = std::min(mn, v(i));
      mx = std::max(mx, v(i));
    }
    lo[i] = floor_of(mn * step);
    hi[i] = ceil_of(mx * step);
  }
}

std::set<std::string> brute_alcove(const RootSystem& rs, std::int64_t b, Lattice lattice) {
  const std::int64_t step = lattice == Lattice::coweight ? rs.index_f : 1;
  std::vector<BigInt> lo, hi;
  bounding_box(alcove_vertices(rs, b), step, lo, hi);
  std::set<std::string> out;
  for_each_box_point(lo, hi, step, [&](const CorootVector& x) {
    if (!in_dilated_alcove(rs, b, x)) return;
    if (lattice == Lattice::coroot && !is_integral(x)) return;
    if (lattice == Lattice::coweight) {
      VectorQ p = simple_pairings(rs, x);
      for (Eigen::Index i = 0; i < p.size(); ++i)
        if (!is_integer(p(i))) return;
    }
    out.insert(to_string(x));
  });
  return out;
}

}  // namespace

TEST_CASE("alcove enumeration matches a bounding-box search") {
  for (const auto& t : all_types_up_to_rank(4)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    for (std::int64_t b = 0; b <= 6; ++b) {
      CAPTURE(b);
      auto cw = coweight_points_in_bA(rs, b);
      CHECK(keys(cw.points) == brute_alcove(rs, b, Lattice::coweight));
      CHECK(BigInt(cw.count()) == coweight_count(rs, b));
      CHECK(keys(coroot_points_in_bA(rs, b).points) == brute_alcove(rs, b, Lattice::coroot));
    }
  }
}

TEST_CASE("parallel enumeration is independent of the job count") {
  RootSystem rs = build_root_system(Family::D, 5);
  auto one = coroot_points_in_bA(rs, 9, 1);
  auto four = coroot_points_in_bA(rs, 9, 4);
  CHECK(keys(one.points) == keys(four.points));
  CHECK(one.count() == four.count());
}

TEST_CASE("counts in type A") {
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs = build_root_system(Family::A, n);
    for (std::int64_t b = 0; b <= 10; ++b) {
      CHECK(coweight_count(rs, b) == binomial(n + b, b));
      if (std::gcd<std::int64_t>(b, n + 1) == 1)
        CHECK(BigInt(coroot_points_in_bA(rs, b).count()) * (n + 1 + b) == binomial(n + 1 + b, b));
    }
  }
  CHECK(coweight_count(build_root_system(Family::E, 8), 7) == 39);
  CHECK(coweight_count(build_root_system(Family::D, 4), 3) == 24);
}

TEST_CASE("coroot points in the Sommers region") {
  for (const auto& t : all_types_up_to_rank(4)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    for (std::int64_t b = 1; b <= 9; ++b) {
      if (std::gcd<std::int64_t>(b, rs.coxeter_h) != 1) continue;
      CAPTURE(b);
      std::vector<BigInt> lo, hi;
      bounding_box(sommers_vertices(rs, b), 1, lo, hi);
      std::set<std::string> brute;
      for_each_box_point(lo, hi, 1, [&](const CorootVector& x) {
        if (sommers_contains(rs, b, x)) brute.insert(to_string(x));
      });
      auto pts = core_points_in_sommers(rs, b);
      CHECK(keys(pts.points) == brute);
      CHECK(pts.count() == coroot_points_in_bA(rs, b).count());
    }
  }
}

TEST_CASE("size histogram") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem rs = build_root_system(Family::A, n);
    auto hist = size_histogram(rs, 16);
    IntSeries cores = core_product_series(n + 1, 16);
    for (int k = 0; k <= 16; ++k) CHECK(hist[k] == cores[k]);
  }
  for (const auto& t : all_types_up_to_rank(3)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    const std::int64_t N = 12, R = 7;
    std::vector<BigInt> brute(N + 1, BigInt(0));
    std::vector<BigInt> lo(rs.rank, BigInt(-R)), hi(rs.rank, BigInt(R));
    for_each_box_point(lo, hi, 1, [&](const CorootVector& x) {
      Rational s = size_point(rs, x);
      if (s > N) return;
      for (Eigen::Index i = 0; i < x.size(); ++i) REQUIRE(abs(x(i)) < R);
      brute[to_int64(s)] += 1;
    });
    CHECK(size_histogram(rs, N) == brute);
  }
}
