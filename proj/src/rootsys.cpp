#include "corelab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace corelab {

namespace {

void check_rank(Family f, int n) {
  bool ok = true;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(n) + " for this family");
}

void edge(MatrixZ& a, int i, int j, int aij = -1, int aji = -1) {
  a(i - 1, j - 1) = aij;
  a(j - 1, i - 1) = aji;
}

MatrixZ cartan_matrix(const RootSystemType& t) {
  const int n = t.rank;
  MatrixZ a = MatrixZ::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) edge(a, i, i + 1);
      edge(a, n - 1, n, -1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) edge(a, i, i + 1);
      edge(a, n - 1, n, -2, -1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edge(a, i, i + 1);
      edge(a, n - 2, n);
      break;
    case Family::E:
      edge(a, 1, 3);
      edge(a, 2, 4);
      for (int i = 3; i < n; ++i) edge(a, i, i + 1);
      break;
    case Family::F:
      edge(a, 1, 2);
      edge(a, 2, 3, -1, -2);
      edge(a, 3, 4);
      break;
    case Family::G:
      edge(a, 1, 2, -3, -1);
      break;
  }
  return a;
}

std::vector<Root> close_positive_roots(const MatrixZ& a) {
  const int n = static_cast<int>(a.rows());
  std::map<std::vector<std::int64_t>, int> seen;
  std::vector<std::vector<std::int64_t>> roots;
  auto add = [&](const std::vector<std::int64_t>& c) {
    if (seen.emplace(c, static_cast<int>(roots.size())).second) roots.push_back(c);
  };
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    add(c);
  }
  // roots are appended in nondecreasing height, so a single sweep suffices
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto beta = roots[r];
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
      // p: how far the i-string extends downward
      int p = 0;
      auto down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      std::int64_t q = p - pairing;
      if (q > 0) {
        auto up = beta;
        up[i] += 1;
        add(up);
      }
    }
  }
  std::vector<Root> out;
  for (auto& c : roots) {
    Root r;
    r.coeffs = VectorZ::Map(c.data(), n);
    r.height = static_cast<int>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    if (x.height != y.height) return x.height < y.height;
    return lex_less(x.coeffs, y.coeffs);
  });
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError("root data check failed: " + what);
}

}  // namespace

RootSystemType::RootSystemType(Family f, int n) : family(f), rank(n) { check_rank(f, n); }

RootSystemType RootSystemType::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  switch (family[0]) {
    case 'A': case 'a': return {Family::A, rank};
    case 'B': case 'b': return {Family::B, rank};
    case 'C': case 'c': return {Family::C, rank};
    case 'D': case 'd': return {Family::D, rank};
    case 'E': case 'e': return {Family::E, rank};
    case 'F': case 'f': return {Family::F, rank};
    case 'G': case 'g': return {Family::G, rank};
  }
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

char RootSystemType::letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string RootSystemType::name() const { return std::string(1, letter()) + std::to_string(rank); }

std::vector<int> exponents_of(const RootSystemType& t) {
  const int n = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case Family::E:
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

BigInt weyl_group_order(const RootSystemType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return power(BigInt(2), n) * factorial(n);
    case Family::D: return power(BigInt(2), n - 1) * factorial(n);
    case Family::E:
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      return BigInt(696729600);
    case Family::F: return BigInt(1152);
    case Family::G: return BigInt(12);
  }
  return 0;
}

int dual_coxeter_number(const RootSystemType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 9;
    case Family::G: return 4;
  }
  return 0;
}

RootSystem build_root_system(const RootSystemType& t) {
  RootSystem rs(t);
  const int n = t.rank;
  rs.rank = n;
  rs.cartan = cartan_matrix(t);
  const MatrixQ aq = to_rational(rs.cartan);

  // root lengths from A_ij |a_i|^2 = A_ji |a_j|^2, propagated over the diagram
  std::vector<Rational> len(n, Rational(0));
  len[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || rs.cartan(i, j) == 0 || len[j] != 0) continue;
      len[j] = len[i] * Rational(rs.cartan(i, j)) / Rational(rs.cartan(j, i));
      stack.push_back(j);
    }
  }
  rs.positive_roots = close_positive_roots(rs.cartan);
  const Root& top = rs.positive_roots.back();
  require(rs.positive_roots.size() < 2 || rs.positive_roots[rs.positive_roots.size() - 2].height < top.height,
          "highest root is unique");
  rs.marks = top.coeffs;

  // normalize so |highest root|^2 = 2
  Rational top_norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      top_norm += Rational(rs.marks(i) * rs.marks(j) * rs.cartan(i, j)) * len[i] / 2;
  rs.root_norms = VectorQ(n);
  for (int i = 0; i < n; ++i) rs.root_norms(i) = len[i] * 2 / top_norm;

  rs.gram = MatrixQ(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram(i, j) = Rational(2 * rs.cartan(i, j)) / rs.root_norms(j);

  rs.comarks = VectorZ(n);
  for (int i = 0; i < n; ++i) rs.comarks(i) = to_int64(Rational(rs.marks(i)) * rs.root_norms(i) / 2);

  rs.coxeter_h = 1 + static_cast<int>(rs.marks.sum());
  rs.dual_coxeter_g = 1 + static_cast<int>(rs.comarks.sum());
  rs.exponents = exponents_of(t);
  rs.weyl_order = weyl_group_order(t);
  rs.index_f = static_cast<int>(to_int64(determinant(aq)));

  rs.coroot_to_coweight = rs.cartan.transpose();
  rs.coweight_to_coroot = inverse(to_rational(rs.coroot_to_coweight));
  MatrixQ scaled = rs.coweight_to_coroot * Rational(rs.index_f);
  rs.scaled_coweight_to_coroot = to_integer(scaled);

  for (int i = 0; i < n; ++i) rs.fund_coweights.push_back(rs.coweight_to_coroot.col(i));

  rs.rho = VectorQ::Zero(n);
  rs.rho_check = VectorQ::Zero(n);
  for (const Root& r : rs.positive_roots) {
    rs.rho += root_vector(rs, r.coeffs) / Rational(2);
    rs.rho_check += coroot_of(rs, r.coeffs) / Rational(2);
  }
  rs.highest_coroot = coroot_of(rs, rs.marks);

  // cross-validation against tables and identities
  const int np = rs.num_positive_roots();
  require(rs.coxeter_h == top.height + 1, "h = 1 + sum of marks = height of highest root + 1");
  require(2 * np == n * rs.coxeter_h, "|positive roots| = nh/2");
  require(2 * std::accumulate(rs.exponents.begin(), rs.exponents.end(), 0) == n * rs.coxeter_h, "sum of exponents = nh/2");
  BigInt prod = 1;
  for (int e : rs.exponents) prod *= e + 1;
  require(prod == rs.weyl_order, "product of (1 + e_i) = |W|");
  require(rs.dual_coxeter_g == dual_coxeter_number(t), "g = 1 + sum of comarks");
  require(rs.index_f >= 1, "det of Cartan matrix positive");
  for (int i = 0; i < n; ++i)
    require(coroot_of(rs, VectorZ::Unit(n, i)) == VectorQ(VectorQ::Unit(n, i)), "simple coroot coordinates");
  VectorQ sum_w = VectorQ::Zero(n);
  for (const auto& w : rs.fund_coweights) sum_w += w;
  require(sum_w == rs.rho_check, "rho check = sum of fundamental coweights");
  for (const Root& r : rs.positive_roots)
    require(pair_with_root(rs, rs.rho_check, r.coeffs) == Rational(r.height), "<rho check, alpha> = ht(alpha)");
  require(inner(rs, rs.rho, rs.rho) / Rational(2 * rs.dual_coxeter_g) == rational(n * (rs.coxeter_h + 1), 24),
          "strange formula");
  if (rs.simply_laced()) {
    require(rs.gram == aq, "simply-laced gram = cartan");
    require(rs.rho == rs.rho_check, "simply-laced rho = rho check");
    require(rs.coxeter_h == rs.dual_coxeter_g, "simply-laced g = h");
  }
  return rs;
}

Rational pair_with_root(const RootSystem& rs, const CorootVector& x, const VectorZ& root_coeffs) {
  // <coroot_i, alpha_j> = A_ij
  Rational out = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (x(i) == 0) continue;
    std::int64_t s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.cartan(i, j) * root_coeffs(j);
    out += x(i) * Rational(s);
  }
  return out;
}

VectorQ simple_pairings(const RootSystem& rs, const CorootVector& x) {
  VectorQ out(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.cartan(i, j) != 0) s += x(i) * Rational(rs.cartan(i, j));
    out(j) = s;
  }
  return out;
}

CorootVector root_vector(const RootSystem& rs, const VectorZ& root_coeffs) {
  CorootVector out(rs.rank);
  for (int j = 0; j < rs.rank; ++j) out(j) = Rational(root_coeffs(j)) * rs.root_norms(j) / 2;
  return out;
}

Rational root_norm2(const RootSystem& rs, const VectorZ& root_coeffs) {
  CorootVector v = root_vector(rs, root_coeffs);
  return inner(rs, v, v);
}

CorootVector coroot_of(const RootSystem& rs, const VectorZ& root_coeffs) {
  CorootVector v = root_vector(rs, root_coeffs);
  Rational nn = inner(rs, v, v);
  return v * (Rational(2) / nn);
}

std::vector<Root> roots_of_height(const RootSystem& rs, int height) {
  if (height < 1 || height > rs.coxeter_h - 1) throw std::out_of_range("root height out of range");
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots)
    if (r.height == height) out.push_back(r);
  return out;
}

CorootVector coweight_to_coroot_coords(const RootSystem& rs, const VectorQ& w) {
  if (w.size() != rs.rank) throw std::invalid_argument("dimension mismatch");
  return rs.coweight_to_coroot * w;
}

VectorQ coroot_to_coweight_coords(const RootSystem& rs, const CorootVector& x) {
  if (x.size() != rs.rank) throw std::invalid_argument("dimension mismatch");
  return simple_pairings(rs, x);
}

std::vector<RootSystemType> all_types_up_to_rank(int max_rank) {
  std::vector<RootSystemType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.emplace_back(Family::E, n);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

}  // namespace corelab
