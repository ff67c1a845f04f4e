#include "corelab/exact.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace corelab {

std::string to_string(const Rational& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in " + s);
  return Rational(p, q);
}

BigInt to_bigint(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = BigInt(static_cast<unsigned long long>(u >> 64));
  BigInt lo = BigInt(static_cast<unsigned long long>(u & 0xffffffffffffffffULL));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

std::int64_t to_int64(const BigInt& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
  return z.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
  return to_int64(numer(r));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt factorial(std::int64_t n) {
  BigInt out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt power(const BigInt& base, unsigned e) { return mp::pow(base, e); }

Rational power(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt isqrt_floor(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative");
  return mp::sqrt(v);
}

BigInt isqrt_ceil(const BigInt& v) {
  BigInt s = isqrt_floor(v);
  return s * s == v ? s : BigInt(s + 1);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt floor_of(const Rational& r) { return floor_div(numer(r), denom(r)); }
BigInt ceil_of(const Rational& r) { return -floor_div(-numer(r), denom(r)); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

MatrixQ inverse(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  MatrixQ a = m;
  MatrixQ inv = MatrixQ::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    Rational piv = a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rational determinant(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  MatrixQ a = m;
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

MatrixZ to_integer(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

VectorZ to_integer_vector(const VectorQ& v) {
  VectorZ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_int64(v(i));
  return out;
}

bool is_integral(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  return true;
}

std::string to_string(const VectorQ& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v(i));
  os << ")";
  return os.str();
}

bool lex_less(const VectorQ& a, const VectorQ& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

bool lex_less(const VectorZ& a, const VectorZ& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace corelab
