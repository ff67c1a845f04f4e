#include "corelab/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace corelab {

AffineElement AffineElement::identity(int n) { return {MatrixZ::Identity(n, n), CorootVector::Zero(n), false}; }

CorootVector AffineElement::operator()(const CorootVector& x) const { return to_rational(linear) * x + translation; }

AffineElement AffineElement::operator*(const AffineElement& rhs) const {
  return {linear * rhs.linear, to_rational(linear) * rhs.translation + translation, extended || rhs.extended};
}

AffineElement AffineElement::inverse() const {
  MatrixQ inv = corelab::inverse(to_rational(linear));
  return {to_integer(inv), -(inv * translation), extended};
}

bool AffineElement::operator==(const AffineElement& rhs) const {
  return linear == rhs.linear && translation == rhs.translation;
}

bool AffineElement::is_identity() const {
  return linear == MatrixZ::Identity(rank(), rank()) && translation == CorootVector::Zero(rank());
}

bool AffineRoot::positive() const {
  bool nonneg = (root.array() >= 0).all();
  bool nonpos = (root.array() <= 0).all();
  return (nonneg && level >= 0 && !root.isZero()) || (nonpos && level > 0);
}

std::int64_t AffineRoot::height(const RootSystem& rs) const { return root.sum() + level * rs.coxeter_h; }

bool AffineRoot::operator==(const AffineRoot& rhs) const { return level == rhs.level && root == rhs.root; }

bool AffineRoot::operator<(const AffineRoot& rhs) const {
  if (level != rhs.level) return level < rhs.level;
  return lex_less(root, rhs.root);
}

std::string to_string(const AffineRoot& r) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < r.root.size(); ++i) os << (i ? "," : "") << r.root(i);
  os << ")+" << r.level << "d";
  return os.str();
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? " " : "") << "s" << w.letters[i];
  return os.str();
}

namespace {

void check_letter(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank) throw std::out_of_range("reflection index out of range");
}

// right-multiply (m, t) by s_i; t kept integral
void right_multiply(const RootSystem& rs, MatrixZ& m, VectorZ& t, int i) {
  const int n = rs.rank;
  if (i >= 1) {
    // s_i = I - e_i r^T with r_j = A_{j,i}
    VectorZ col = m.col(i - 1);
    for (int j = 0; j < n; ++j)
      if (rs.cartan(j, i - 1) != 0) m.col(j) -= col * rs.cartan(j, i - 1);
  } else {
    // s_0 = I - d (sum_i c_i r_i)^T, translation d
    const VectorZ& d = rs.comarks;
    VectorZ md = m * d;
    VectorZ r = VectorZ::Zero(n);
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) r(j) += rs.marks(a) * rs.cartan(j, a);
    m -= md * r.transpose();
    t += md;
  }
}

// pairings <y, alpha_j> scaled by a common denominator
struct ScaledPoint {
  std::vector<std::int64_t> u;
  std::int64_t scale = 1;
};

ScaledPoint scaled_pairings(const RootSystem& rs, const CorootVector& x) {
  if (x.size() != rs.rank) throw std::invalid_argument("dimension mismatch");
  VectorQ p = simple_pairings(rs, x);
  std::int64_t d = 1;
  for (int j = 0; j < rs.rank; ++j) d = lcm64(d, to_int64(denom(p(j))));
  ScaledPoint out;
  out.scale = d;
  for (int j = 0; j < rs.rank; ++j) out.u.push_back(to_int64(p(j) * Rational(d)));
  return out;
}

std::int64_t affine_pairing(const RootSystem& rs, const ScaledPoint& s) {
  std::int64_t t = 0;
  for (int j = 0; j < rs.rank; ++j) t += rs.marks(j) * s.u[j];
  return t;
}

void reflect_scaled(const RootSystem& rs, ScaledPoint& s, int i) {
  const int n = rs.rank;
  if (i >= 1) {
    std::int64_t ui = s.u[i - 1];
    for (int j = 0; j < n; ++j) s.u[j] -= ui * rs.cartan(i - 1, j);
  } else {
    std::int64_t excess = affine_pairing(rs, s) - s.scale;
    for (int j = 0; j < n; ++j) {
      std::int64_t e0 = 0;
      for (int a = 0; a < n; ++a) e0 += rs.comarks(a) * rs.cartan(a, j);
      s.u[j] -= excess * e0;
    }
  }
}

constexpr std::size_t kMaxWalk = 50'000'000;

}  // namespace

AffineElement simple_reflection(const RootSystem& rs, int i) {
  check_letter(rs, i);
  MatrixZ m = MatrixZ::Identity(rs.rank, rs.rank);
  VectorZ t = VectorZ::Zero(rs.rank);
  right_multiply(rs, m, t, i);
  return {m, to_rational_vector(t), false};
}

AffineElement element_of_word(const RootSystem& rs, const Word& w) {
  MatrixZ m = MatrixZ::Identity(rs.rank, rs.rank);
  VectorZ t = VectorZ::Zero(rs.rank);
  for (int l : w.letters) {
    check_letter(rs, l);
    right_multiply(rs, m, t, l);
  }
  return {m, to_rational_vector(t), false};
}

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  check_letter(rs, i);
  if (i == 0) return {-rs.marks, 1};
  return {VectorZ::Unit(rs.rank, i - 1), 0};
}

AffineRoot apply_simple_reflection(const RootSystem& rs, int i, const AffineRoot& beta) {
  check_letter(rs, i);
  const int n = rs.rank;
  AffineRoot out = beta;
  if (i >= 1) {
    std::int64_t p = 0;
    for (int j = 0; j < n; ++j) p += rs.cartan(i - 1, j) * beta.root(j);
    out.root(i - 1) -= p;
  } else {
    std::int64_t p = 0;
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) p += rs.comarks(a) * rs.cartan(a, j) * beta.root(j);
    out.root -= p * rs.marks;
    out.level += p;
  }
  return out;
}

AffineRoot apply_word(const RootSystem& rs, const Word& w, const AffineRoot& beta) {
  AffineRoot out = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = apply_simple_reflection(rs, *it, out);
  return out;
}

AlcoveWalk alcove_walk(const RootSystem& rs, const CorootVector& x) {
  const int n = rs.rank;
  ScaledPoint s = scaled_pairings(rs, x);
  Word word;
  word.reduced = true;
  MatrixZ m = MatrixZ::Identity(n, n);
  VectorZ t = VectorZ::Zero(n);
  while (true) {
    int wall = -1;
    for (int j = 0; j < n && wall < 0; ++j)
      if (s.u[j] < 0) wall = j + 1;
    if (wall < 0 && affine_pairing(rs, s) > s.scale) wall = 0;
    if (wall < 0) break;
    reflect_scaled(rs, s, wall);
    right_multiply(rs, m, t, wall);
    word.letters.push_back(wall);
    if (word.letters.size() > kMaxWalk) throw ConsistencyError("alcove walk did not terminate");
  }
  for (int j = 0; j < n; ++j)
    if (s.u[j] == 0) throw std::domain_error("point not regular");
  if (affine_pairing(rs, s) == s.scale) throw std::domain_error("point not regular");
  AffineElement e{m, to_rational_vector(t), false};
  return {e, word};
}

ChamberWalk chamber_walk(const RootSystem& rs, const CorootVector& x) {
  const int n = rs.rank;
  ScaledPoint s = scaled_pairings(rs, x);
  ChamberWalk out;
  out.back = MatrixZ::Identity(n, n);
  VectorZ t = VectorZ::Zero(n);
  while (true) {
    int wall = -1;
    for (int j = 0; j < n && wall < 0; ++j)
      if (s.u[j] < 0) wall = j + 1;
    if (wall < 0) break;
    reflect_scaled(rs, s, wall);
    right_multiply(rs, out.back, t, wall);
    out.word.letters.push_back(wall);
    if (out.word.letters.size() > kMaxWalk) throw ConsistencyError("chamber walk did not terminate");
  }
  out.word.reduced = true;
  VectorQ pairings(n);
  for (int j = 0; j < n; ++j) pairings(j) = rational(s.u[j], s.scale);
  out.image = rs.coweight_to_coroot * pairings;
  return out;
}

std::vector<CorootVector> alcove_vertices(const RootSystem& rs, std::int64_t b) {
  std::vector<CorootVector> out{CorootVector::Zero(rs.rank)};
  for (int i = 0; i < rs.rank; ++i) out.push_back(rs.fund_coweights[i] * rational(b, rs.marks(i)));
  return out;
}

void require_coprime(const RootSystem& rs, std::int64_t b) {
  if (b < 1 || gcd64(b, rs.coxeter_h) != 1) throw std::invalid_argument("b not coprime to Coxeter number");
}

namespace {

struct Wall {
  VectorZ root;
  Rational value;
};

std::vector<Wall> sommers_walls(const RootSystem& rs, std::int64_t b) {
  require_coprime(rs, b);
  const std::int64_t h = rs.coxeter_h, t = b / h, r = b % h;
  std::vector<Wall> walls;
  if (r == 0) return walls;  // h = 1 never happens for rank >= 1
  for (const Root& a : rs.positive_roots) {
    if (a.height == r) walls.push_back({a.coeffs, Rational(-t)});
    if (a.height == h - r) walls.push_back({a.coeffs, Rational(t + 1)});
  }
  return walls;
}

}  // namespace

std::vector<CorootVector> sommers_vertices(const RootSystem& rs, std::int64_t b) {
  auto walls = sommers_walls(rs, b);
  const int n = rs.rank;
  if (static_cast<int>(walls.size()) != n + 1) throw ConsistencyError("Sommers region is not bounded by n+1 walls");
  std::vector<CorootVector> out;
  for (int skip = 0; skip <= n; ++skip) {
    MatrixQ rows(n, n);
    VectorQ rhs(n);
    int r = 0;
    for (int k = 0; k <= n; ++k) {
      if (k == skip) continue;
      for (int i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < n; ++j) s += rs.cartan(i, j) * walls[k].root(j);
        rows(r, i) = Rational(s);
      }
      rhs(r) = walls[k].value;
      ++r;
    }
    out.push_back(inverse(rows) * rhs);
  }
  return out;
}

AffineElement compute_w_b(const RootSystem& rs, std::int64_t b) {
  require_coprime(rs, b);
  const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
  AlcoveWalk walk = alcove_walk(rs, base * Rational(b));
  const AffineElement& w = walk.element;
  if (w(base) != base * Rational(b)) throw ConsistencyError("w_b does not carry rho check / h to b rho check / h");
  auto key = [](const std::vector<CorootVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(to_string(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<CorootVector> images;
  for (const auto& v : sommers_vertices(rs, b)) images.push_back(w(v));
  if (key(images) != key(alcove_vertices(rs, b))) throw ConsistencyError("w_b does not map Sommers vertices onto bA");
  return w;
}

bool sommers_contains(const RootSystem& rs, std::int64_t b, const CorootVector& x) {
  const std::int64_t h = rs.coxeter_h, t = b / h, r = b % h;
  require_coprime(rs, b);
  for (const Root& a : rs.positive_roots) {
    if (a.height == r && pair_with_root(rs, x, a.coeffs) < Rational(-t)) return false;
    if (a.height == h - r && pair_with_root(rs, x, a.coeffs) > Rational(t + 1)) return false;
  }
  return true;
}

bool in_dilated_alcove(const RootSystem& rs, std::int64_t b, const CorootVector& x) {
  VectorQ p = simple_pairings(rs, x);
  Rational top = 0;
  for (int j = 0; j < rs.rank; ++j) {
    if (p(j) < 0) return false;
    top += Rational(rs.marks(j)) * p(j);
  }
  return top <= Rational(b);
}

bool in_open_alcove(const RootSystem& rs, const CorootVector& x) {
  VectorQ p = simple_pairings(rs, x);
  Rational top = 0;
  for (int j = 0; j < rs.rank; ++j) {
    if (p(j) <= 0) return false;
    top += Rational(rs.marks(j)) * p(j);
  }
  return top < 1;
}

std::vector<AffineRoot> inversions_of_word(const RootSystem& rs, const Word& w) {
  std::vector<AffineRoot> out;
  Word prefix;
  for (int l : w.letters) {
    out.push_back(apply_word(rs, prefix, simple_affine_root(rs, l)));
    prefix.letters.push_back(l);
  }
  return out;
}

std::vector<AffineRoot> inversions_of_inverse(const RootSystem& rs, const AffineElement& w) {
  if (w.extended) throw std::invalid_argument("inversions need an element of the affine Weyl group proper");
  const AffineElement v = w.inverse();
  const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
  AlcoveWalk walk = alcove_walk(rs, v(base));
  if (!(walk.element == v)) throw ConsistencyError("alcove walk did not reproduce the element");
  auto inv = inversions_of_word(rs, walk.word);
  for (const auto& a : inv)
    if (!a.positive()) throw ConsistencyError("walk word is not reduced");
  return inv;
}

std::int64_t size_of_element(const RootSystem& rs, const AffineElement& w) {
  std::int64_t s = 0;
  for (const auto& a : inversions_of_inverse(rs, w)) s += a.level;
  return s;
}

std::vector<AffineRoot> predicted_inversions_of_w_b(const RootSystem& rs, std::int64_t b) {
  std::vector<AffineRoot> out;
  for (const Root& a : rs.positive_roots)
    for (std::int64_t k = 1; k * rs.coxeter_h < b * a.height; ++k) out.push_back({-a.coeffs, k});
  return out;
}

AlcoveWalk minimal_coset_representative(const RootSystem& rs, const CorootVector& lambda) {
  const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
  ChamberWalk cw = chamber_walk(rs, base - lambda);
  CorootVector p = lambda + to_rational(cw.back) * base;
  AlcoveWalk walk = alcove_walk(rs, p);
  if (walk.element(CorootVector::Zero(rs.rank)) != lambda)
    throw ConsistencyError("coset representative does not send 0 to lambda");
  return walk;
}

std::vector<AffineElement> omega_group(const RootSystem& rs) {
  const int n = rs.rank;
  const CorootVector base = rs.rho_check / Rational(rs.coxeter_h);
  std::vector<CorootVector> gamma{CorootVector::Zero(n)};
  for (int i = 0; i < n; ++i)
    if (rs.marks(i) == 1) gamma.push_back(rs.fund_coweights[i]);
  auto vertex_key = [&](const std::vector<CorootVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(to_string(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto vertices = alcove_vertices(rs, 1);
  const auto vkey = vertex_key(vertices);
  std::vector<AffineElement> out;
  for (const auto& mu : gamma) {
    ChamberWalk cw = chamber_walk(rs, base - mu);
    if (cw.image != base) throw ConsistencyError("chamber walk for an Omega element missed rho check / h");
    AffineElement g{cw.back, mu, true};
    if (g(base) != base) throw ConsistencyError("Omega element does not fix rho check / h");
    std::vector<CorootVector> moved;
    for (const auto& v : vertices) moved.push_back(g(v));
    if (vertex_key(moved) != vkey) throw ConsistencyError("Omega element does not permute the alcove vertices");
    out.push_back(g);
  }
  if (static_cast<int>(out.size()) != rs.index_f) throw ConsistencyError("|Omega| differs from the index of connection");
  return out;
}

std::string omega_structure(const RootSystem& rs) {
  auto group = omega_group(rs);
  const int f = static_cast<int>(group.size());
  if (f == 1) return "Z1";
  int max_order = 1;
  for (const auto& g : group) {
    int order = 1;
    AffineElement p = g;
    while (!p.is_identity()) {
      p = p * g;
      ++order;
      if (order > f) throw ConsistencyError("Omega element of excessive order");
    }
    max_order = std::max(max_order, order);
  }
  if (max_order == f) return "Z" + std::to_string(f);
  // abelian of order f without an element of order f; here only Z2 x Z2 occurs
  if (f == 4 && max_order == 2) return "Z2xZ2";
  return "order " + std::to_string(f) + ", exponent " + std::to_string(max_order);
}

CorootVector b_omega_action(const RootSystem& rs, std::int64_t b, const AffineElement& g, const CorootVector& x) {
  if (x.size() != rs.rank) throw std::invalid_argument("dimension mismatch");
  return to_rational(g.linear) * x + g.translation * Rational(b);
}

}  // namespace corelab
