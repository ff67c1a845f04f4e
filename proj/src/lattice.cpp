#include "corelab/lattice.hpp"

#include "corelab/stats.hpp"

#include <algorithm>

namespace corelab {

std::string to_string(Lattice l) { return l == Lattice::coweight ? "coweight" : "coroot"; }

Lattice parse_lattice(const std::string& s) {
  if (s == "coweight") return Lattice::coweight;
  if (s == "coroot") return Lattice::coroot;
  throw std::invalid_argument("unknown lattice '" + s + "'");
}

AlcoveEnumerator::AlcoveEnumerator(const RootSystem& rs, std::int64_t b, Lattice lattice)
    : n_(rs.rank), b_(b), coroot_(lattice == Lattice::coroot), f_(rs.index_f) {
  if (b < 0) throw std::invalid_argument("dilation must be nonnegative");
  for (int i = 0; i < n_; ++i) marks_.push_back(rs.marks(i));
  for (int r = 0; r < n_; ++r)
    for (int i = 0; i < n_; ++i) k_.push_back(((rs.scaled_coweight_to_coroot(r, i) % f_) + f_) % f_);
}

BigInt coweight_count(const RootSystem& rs, std::int64_t b) {
  if (b < 0) return 0;
  std::vector<BigInt> dp(b + 1, BigInt(1));  // c_0 = 1
  for (int i = 0; i < rs.rank; ++i) {
    const std::int64_t c = rs.marks(i);
    for (std::int64_t k = c; k <= b; ++k) dp[k] += dp[k - c];
  }
  return dp[b];
}

namespace {

LatticePointSet collect(const RootSystem& rs, std::int64_t b, Lattice lattice, int jobs) {
  AlcoveEnumerator en(rs, b, lattice);
  const int n = rs.rank;
  auto all = fold_points(
      en, jobs, [] { return std::vector<VectorZ>{}; },
      [n](std::vector<VectorZ>& acc, const std::int64_t* x) { acc.push_back(VectorZ::Map(x, n)); },
      [](std::vector<VectorZ>& into, std::vector<VectorZ>& from) {
        into.insert(into.end(), from.begin(), from.end());
      });
  std::sort(all.begin(), all.end(), [](const VectorZ& x, const VectorZ& y) { return lex_less(x, y); });
  LatticePointSet out;
  out.rs = &rs;
  out.b = b;
  out.lattice = lattice;
  for (const auto& w : all) {
    CorootVector p = rs.coweight_to_coroot * to_rational_vector(w);
    if (lattice == Lattice::coroot && !is_integral(p)) throw ConsistencyError("coroot filter admitted a non-coroot point");
    out.points.push_back(p);
  }
  out.coweights = std::move(all);
  return out;
}

}  // namespace

LatticePointSet coweight_points_in_bA(const RootSystem& rs, std::int64_t b, int jobs) {
  LatticePointSet out = collect(rs, b, Lattice::coweight, jobs);
  if (BigInt(out.count()) != coweight_count(rs, b)) throw ConsistencyError("coweight count differs from the generating function");
  return out;
}

LatticePointSet coroot_points_in_bA(const RootSystem& rs, std::int64_t b, int jobs) {
  return collect(rs, b, Lattice::coroot, jobs);
}

LatticePointSet core_points_in_sommers(const RootSystem& rs, std::int64_t b, int jobs) {
  AffineElement wb_inv = compute_w_b(rs, b).inverse();
  LatticePointSet alcove = coroot_points_in_bA(rs, b, jobs);
  LatticePointSet out;
  out.rs = &rs;
  out.b = b;
  out.lattice = Lattice::coroot;
  for (const auto& y : alcove.points) {
    CorootVector x = wb_inv(y);
    if (!is_integral(x) || !sommers_contains(rs, b, x)) throw ConsistencyError("w_b inverse left the Sommers region");
    out.points.push_back(x);
  }
  std::sort(out.points.begin(), out.points.end(), [](const CorootVector& x, const CorootVector& y) { return lex_less(x, y); });
  for (const auto& p : out.points) out.coweights.push_back(to_integer_vector(simple_pairings(rs, p)));
  return out;
}

std::vector<SizedPoint> coroot_points_in_size_ellipsoid(const RootSystem& rs, std::int64_t N) {
  if (N < 0) return {};
  const int n = rs.rank;
  const Rational g(rs.dual_coxeter_g);
  // size(x) = g/2 |x - rho/g|^2 - |rho|^2/(2g)
  const CorootVector center = rs.rho / g;
  const Rational r2 = (Rational(N) + inner(rs, rs.rho, rs.rho) / (g * 2)) * 2 / g;
  const MatrixQ ginv = inverse(rs.gram);
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rational s2 = r2 * ginv(i, i);
    Rational s_up = Rational(isqrt_ceil(numer(s2) * denom(s2)), denom(s2));
    lo[i] = to_int64(floor_of(center(i) - s_up));
    hi[i] = to_int64(ceil_of(center(i) + s_up));
  }
  const IntegerQuadraticForm size = size_form(rs);
  std::int64_t reach = 0;
  for (int i = 0; i < n; ++i) reach = std::max({reach, std::abs(lo[i]), std::abs(hi[i])});
  size.require_safe(reach);
  const std::int64_t limit = N * size.denominator;
  std::vector<std::int64_t> x(lo);
  std::vector<SizedPoint> out;
  while (true) {
    std::int64_t num = size.numerator(x.data());
    if (num <= limit) {
      VectorQ p(n);
      for (int i = 0; i < n; ++i) p(i) = Rational(x[i]);
      out.push_back({p, rational(num, size.denominator)});
    }
    int i = n - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

std::vector<BigInt> size_histogram(const RootSystem& rs, std::int64_t N) {
  std::vector<BigInt> hist(N + 1, BigInt(0));
  for (const auto& sp : coroot_points_in_size_ellipsoid(rs, N)) {
    if (!is_integer(sp.size) || sp.size < 0) throw ConsistencyError("size of a coroot point is not a nonnegative integer");
    hist[to_int64(sp.size)] += 1;
  }
  return hist;
}

}  // namespace corelab
