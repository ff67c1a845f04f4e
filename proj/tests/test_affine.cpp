#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corelab/affine.hpp"
#include "corelab/cores.hpp"
#include "corelab/lattice.hpp"
#include "corelab/stats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace corelab;

namespace {

std::vector<std::string> keys(const std::vector<CorootVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(to_string(v));
  std::sort(out.begin(), out.end());
  return out;
}

// <coroot_i, alpha_j> on the affine diagram, index 0 is -highest root
std::int64_t affine_cartan(const RootSystem& rs, int i, int j) {
  auto root = [&](int k) -> VectorZ { return k == 0 ? VectorZ(-rs.marks) : VectorZ(VectorZ::Unit(rs.rank, k - 1)); };
  return to_int64(pair_with_root(rs, coroot_of(rs, root(i)), root(j)));
}

int braid_order(std::int64_t prod) {
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  return -1;
}

// the number of affine hyperplanes between rho check / h and x
std::int64_t separating_hyperplanes(const RootSystem& rs, const CorootVector& x) {
  std::int64_t total = 0;
  for (const auto& a : rs.positive_roots) total += std::abs(to_int64(floor_of(pair_with_root(rs, x, a.coeffs))));
  return total;
}

CorootVector random_generic_point(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-400, 400);
  while (true) {
    CorootVector x(rs.rank);
    for (int i = 0; i < rs.rank; ++i) x(i) = rational(d(rng), 97);
    bool generic = true;
    for (const auto& a : rs.positive_roots)
      if (is_integer(pair_with_root(rs, x, a.coeffs))) generic = false;
    if (generic) return x;
  }
}

std::string snf_structure(const MatrixZ& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<BigInt> d{BigInt(1)};
  for (int k = 1; k <= n; ++k) {
    BigInt g = 0;
    std::vector<int> rows(k), cols(k);
    std::vector<bool> rsel(n, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      int r = 0;
      for (int i = 0; i < n; ++i)
        if (rsel[i]) rows[r++] = i;
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        int c = 0;
        for (int j = 0; j < n; ++j)
          if (csel[j]) cols[c++] = j;
        MatrixQ sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = Rational(cartan(rows[a], cols[b]));
        g = gcd(g, numer(determinant(sub)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    d.push_back(abs(g));
  }
  std::vector<std::string> parts;
  for (int k = 1; k <= n; ++k) {
    BigInt s = d[k] / d[k - 1];
    if (s != 1) parts.push_back("Z" + to_string(s));
  }
  if (parts.empty()) return "Z1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "x" + parts[i];
  return out;
}

std::vector<std::int64_t> coprime_up_to(const RootSystem& rs, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 1; b <= hi; ++b)
    if (std::gcd<std::int64_t>(b, rs.coxeter_h) == 1) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("simple reflections satisfy the affine Coxeter relations") {
  for (const auto& t : all_types_up_to_rank(5)) {
    if (t.rank < 2) continue;
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    const int n = rs.rank;
    for (int i = 0; i <= n; ++i) {
      AffineElement si = simple_reflection(rs, i);
      CHECK((si * si).is_identity());
      for (int j = i + 1; j <= n; ++j) {
        const int m = braid_order(affine_cartan(rs, i, j) * affine_cartan(rs, j, i));
        REQUIRE(m > 0);
        AffineElement sij = si * simple_reflection(rs, j), p = sij;
        int order = 1;
        while (!p.is_identity() && order < 20) {
          p = p * sij;
          ++order;
        }
        CHECK(order == m);
      }
    }
  }
}

TEST_CASE("alcove walks produce reduced words of the right length") {
  std::mt19937_64 rng(7);
  for (const auto& t : all_types_up_to_rank(4)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    for (int trial = 0; trial < 25; ++trial) {
      CorootVector x = random_generic_point(rs, rng);
      AlcoveWalk w = alcove_walk(rs, x);
      CHECK(element_of_word(rs, w.word) == w.element);
      CHECK(in_open_alcove(rs, w.element.inverse()(x)));
      CHECK(static_cast<std::int64_t>(w.word.length()) == separating_hyperplanes(rs, x));
      ChamberWalk c = chamber_walk(rs, x);
      CHECK(to_rational(c.back) * c.image == x);
      for (Eigen::Index j = 0; j < x.size(); ++j) CHECK(simple_pairings(rs, c.image)(j) >= 0);
    }
    CHECK_THROWS(alcove_walk(rs, CorootVector::Zero(rs.rank)));
  }
}

TEST_CASE("w_b carries the Sommers region onto bA") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
    for (auto b : coprime_up_to(rs, 12)) {
      CAPTURE(b);
      AffineElement wb = compute_w_b(rs, b);
      CHECK_FALSE(wb.extended);
      CHECK(wb(base) == base * Rational(b));
      std::vector<CorootVector> images;
      for (const auto& v : sommers_vertices(rs, b)) images.push_back(wb(v));
      CHECK(keys(images) == keys(alcove_vertices(rs, b)));
    }
    CHECK_THROWS_AS(compute_w_b(rs, rs.coxeter_h), std::invalid_argument);
    CHECK_THROWS_AS(require_coprime(rs, 2 * rs.coxeter_h), std::invalid_argument);
  }
}

TEST_CASE("inversion set of w_b in simply-laced types") {
  for (const auto& t : all_types_up_to_rank(8)) {
    RootSystem rs = build_root_system(t);
    if (!rs.simply_laced()) continue;
    CAPTURE(t.name());
    for (auto b : coprime_up_to(rs, 12)) {
      CAPTURE(b);
      AffineElement wb = compute_w_b(rs, b);
      auto inv = inversions_of_inverse(rs, wb.inverse());
      auto pred = predicted_inversions_of_w_b(rs, b);
      std::set<AffineRoot> a(inv.begin(), inv.end()), p(pred.begin(), pred.end());
      CHECK(a.size() == inv.size());
      CHECK(a == p);
    }
  }
}

TEST_CASE("size on elements") {
  RootSystem a2 = build_root_system(Family::A, 2);
  Word w{{1, 2, 1, 0}, false};
  AffineElement e = element_of_word(a2, w);
  CHECK(size_of_element(a2, e) == 5);
  CHECK(apply_word_to_core(3, w, CorePartition(Partition(), 3)).partition == Partition({3, 1, 1}));
  auto inv = inversions_of_inverse(a2, e);
  std::multiset<std::int64_t> levels;
  for (const auto& r : inv) levels.insert(r.level);
  CHECK(levels == std::multiset<std::int64_t>{1, 1, 1, 2});

  std::mt19937_64 rng(11);
  for (const auto& t : all_types_up_to_rank(4)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    std::uniform_int_distribution<int> letter(0, rs.rank), len(0, 12);
    for (int trial = 0; trial < 30; ++trial) {
      Word word;
      for (int i = len(rng); i > 0; --i) word.letters.push_back(letter(rng));
      AffineElement g = element_of_word(rs, word);
      CorootVector lambda = g(CorootVector::Zero(rs.rank));
      AlcoveWalk u = minimal_coset_representative(rs, lambda);
      CHECK(u.element(CorootVector::Zero(rs.rank)) == lambda);
      CHECK(u.word.length() <= word.length());
      CHECK(Rational(size_of_element(rs, u.element)) == size_point(rs, lambda));
    }
  }
}

TEST_CASE("Omega: order, structure and orbits") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    auto group = omega_group(rs);
    CHECK(static_cast<int>(group.size()) == rs.index_f);
    CHECK(omega_structure(rs) == snf_structure(rs.cartan));
    const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
    for (const auto& g : group) {
      CHECK(g(base) == base);
      CHECK(keys([&] {
              std::vector<CorootVector> m;
              for (const auto& v : alcove_vertices(rs, 1)) m.push_back(g(v));
              return m;
            }()) == keys(alcove_vertices(rs, 1)));
    }
  }
  CHECK(omega_structure(build_root_system(Family::D, 4)) == "Z2xZ2");
  CHECK(omega_structure(build_root_system(Family::D, 5)) == "Z4");
}

TEST_CASE("b Omega acts freely with one coroot point per orbit") {
  for (const auto& t : all_types_up_to_rank(6)) {
    RootSystem rs = build_root_system(t);
    if (rs.index_f == 1) continue;
    CAPTURE(t.name());
    auto group = omega_group(rs);
    for (std::int64_t b = 1; b <= 9; ++b) {
      if (std::gcd<std::int64_t>(b, rs.index_f) != 1) continue;
      CAPTURE(b);
      LatticePointSet pts = coweight_points_in_bA(rs, b);
      std::set<std::string> all;
      for (const auto& x : pts.points) all.insert(to_string(x));
      std::set<std::string> done;
      for (const auto& x : pts.points) {
        if (done.count(to_string(x))) continue;
        std::set<std::string> orbit;
        int coroot = 0;
        for (const auto& g : group) {
          CorootVector y = b_omega_action(rs, b, g, x);
          CHECK(all.count(to_string(y)) == 1);
          orbit.insert(to_string(y));
          coroot += is_integral(y);
          if (std::gcd<std::int64_t>(b, rs.coxeter_h) == 1) CHECK(zise_point(rs, b, y) == zise_point(rs, b, x));
        }
        CHECK(static_cast<int>(orbit.size()) == rs.index_f);
        CHECK(coroot == 1);
        done.insert(orbit.begin(), orbit.end());
      }
    }
  }
}
