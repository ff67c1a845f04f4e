#include "corelab/genfun.hpp"

#include "corelab/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace corelab {

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = c;
  return IntPolynomial(v);
}

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& q) const {
  BigInt out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * q + *it;
  return out;
}

IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> c(std::max(x.coeffs.size(), y.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) c[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) c[i] += y.coeffs[i];
  return IntPolynomial(c);
}

IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<BigInt> c(std::max(x.coeffs.size(), y.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) c[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) c[i] -= y.coeffs[i];
  return IntPolynomial(c);
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.coeffs.empty() || y.coeffs.empty()) return {};
  std::vector<BigInt> c(x.coeffs.size() + y.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) c[i + j] += x.coeffs[i] * y.coeffs[j];
  return IntPolynomial(c);
}

IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& monic) {
  if (monic.coeffs.empty() || monic.coeffs.back() != 1) throw std::invalid_argument("divisor must be monic");
  std::vector<BigInt> rem = num.coeffs;
  const int d = monic.degree();
  if (num.degree() < d) {
    if (!num.coeffs.empty()) throw std::domain_error("polynomial division leaves a remainder");
    return {};
  }
  std::vector<BigInt> quot(num.degree() - d + 1, BigInt(0));
  for (int k = num.degree(); k >= d; --k) {
    BigInt c = rem[k];
    quot[k - d] = c;
    for (int j = 0; j <= d; ++j) rem[k - d + j] -= c * monic.coeffs[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
  return IntPolynomial(quot);
}

std::string to_string(const IntPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntSeries::IntSeries(int trunc) : N(trunc), coeffs(trunc + 1, BigInt(0)) {
  if (trunc < 0) throw std::invalid_argument("negative truncation");
}

IntSeries IntSeries::one(int trunc) {
  IntSeries s(trunc);
  s[0] = 1;
  return s;
}

IntSeries IntSeries::from_polynomial(const IntPolynomial& p, int trunc, int step) {
  IntSeries s(trunc);
  for (int k = 0; k <= p.degree(); ++k)
    if (static_cast<std::int64_t>(k) * step <= trunc) s[k * step] += p.coeffs[k];
  return s;
}

IntSeries operator+(const IntSeries& x, const IntSeries& y) {
  if (x.N != y.N) throw std::invalid_argument("truncation mismatch");
  IntSeries s(x.N);
  for (int k = 0; k <= x.N; ++k) s[k] = x[k] + y[k];
  return s;
}

IntSeries operator-(const IntSeries& x, const IntSeries& y) {
  if (x.N != y.N) throw std::invalid_argument("truncation mismatch");
  IntSeries s(x.N);
  for (int k = 0; k <= x.N; ++k) s[k] = x[k] - y[k];
  return s;
}

IntSeries operator*(const IntSeries& x, const IntSeries& y) {
  if (x.N != y.N) throw std::invalid_argument("truncation mismatch");
  IntSeries s(x.N);
  for (int i = 0; i <= x.N; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= x.N; ++j)
      if (y[j] != 0) s[i + j] += x[i] * y[j];
  }
  return s;
}

IntSeries IntSeries::inverse() const {
  if (coeffs[0] != 1 && coeffs[0] != -1) throw std::domain_error("series inverse needs a unit constant term");
  const BigInt c0 = coeffs[0];  // its own inverse
  IntSeries inv(N);
  inv[0] = c0;
  for (int k = 1; k <= N; ++k) {
    BigInt s = 0;
    for (int j = 1; j <= k; ++j) s += coeffs[j] * inv[k - j];
    inv[k] = -s * c0;
  }
  return inv;
}

IntSeries core_product_series(int a, int N) {
  if (a < 2) throw std::invalid_argument("need a >= 2");
  // partition numbers, then the (1 - q^{ai})^a factors
  IntSeries p = IntSeries::one(N);
  for (int i = 1; i <= N; ++i)
    for (int k = i; k <= N; ++k) p[k] += p[k - i];
  for (int i = 1; static_cast<std::int64_t>(a) * i <= N; ++i) {
    const int step = a * i;
    for (int rep = 0; rep < a; ++rep)
      for (int k = N; k >= step; --k) p[k] -= p[k - step];
  }
  return p;
}

IntPolynomial characteristic_polynomial(const MatrixZ& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  if (n == 0) return IntPolynomial::monomial(0);
  // Berkowitz: coefficients from the leading term down
  std::vector<BigInt> vect{BigInt(1), BigInt(-m(0, 0))};
  for (int r = 1; r < n; ++r) {
    std::vector<BigInt> col(r), row(r);
    for (int i = 0; i < r; ++i) {
      col[i] = m(i, r);
      row[i] = m(r, i);
    }
    std::vector<BigInt> t{BigInt(1), BigInt(-m(r, r))};
    std::vector<BigInt> power = col;  // M^k C
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += row[i] * power[i];
      t.push_back(-dot);
      std::vector<BigInt> next(r, BigInt(0));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) next[i] += BigInt(m(i, j)) * power[j];
      power = next;
    }
    std::vector<BigInt> nv(r + 2, BigInt(0));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * vect[j];
    vect = nv;
  }
  std::reverse(vect.begin(), vect.end());
  return IntPolynomial(vect);
}

IntPolynomial cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::monomial(d) - IntPolynomial::monomial(0);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = exact_divide(p, cyclotomic_polynomial(e));
  return p;
}

IntPolynomial coxeter_char_poly(const RootSystem& rs, const std::vector<int>& order) {
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(rs.rank);
    std::iota(ord.begin(), ord.end(), 1);
  }
  std::vector<int> check = ord;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < rs.rank; ++i)
    if (static_cast<int>(check.size()) != rs.rank || check[i] != i + 1)
      throw std::invalid_argument("order must be a permutation of the simple reflections");
  MatrixZ c = MatrixZ::Identity(rs.rank, rs.rank);
  for (int i : ord) c = c * simple_reflection(rs, i).linear;
  IntPolynomial f = characteristic_polynomial(c);
  if (f.degree() != rs.rank) throw ConsistencyError("Coxeter characteristic polynomial has the wrong degree");
  if (abs(f.coeffs[0]) != 1) throw ConsistencyError("Coxeter characteristic polynomial constant term is not a unit");
  if (f(BigInt(1)) != rs.index_f) throw ConsistencyError("det(1 - c) differs from the index of connection");
  if (!(f == exponent_char_poly(rs))) throw ConsistencyError("Coxeter characteristic polynomial disagrees with the exponents");
  return f;
}

IntPolynomial exponent_char_poly(const RootSystem& rs) {
  const int h = rs.coxeter_h;
  std::map<int, int> by_order;
  for (int e : rs.exponents) by_order[h / std::gcd(e, h)] += 1;
  IntPolynomial out = IntPolynomial::monomial(0);
  for (auto [d, count] : by_order) {
    IntPolynomial phi = cyclotomic_polynomial(d);
    if (count % phi.degree() != 0) throw ConsistencyError("exponents are not Galois stable");
    for (int k = 0; k < count / phi.degree(); ++k) out = out * phi;
  }
  return out;
}

IntSeries macdonald_series(const RootSystem& rs, int N) {
  if (!rs.simply_laced()) throw std::invalid_argument("the Macdonald product needs a simply-laced type");
  const IntPolynomial f = coxeter_char_poly(rs);
  IntSeries s = IntSeries::one(N);
  for (int i = 1; i <= N; ++i) {
    s = s * IntSeries::from_polynomial(f, N, i);
    const std::int64_t step = static_cast<std::int64_t>(rs.coxeter_h) * i;
    if (step > N) continue;
    for (int rep = 0; rep < rs.rank; ++rep)
      for (int k = N; k >= step; --k) s[k] -= s[k - step];
  }
  return s;
}

}  // namespace corelab
