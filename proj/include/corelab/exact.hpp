#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corelab {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorZ = Vector<std::int64_t>;
using MatrixZ = Matrix<std::int64_t>;
using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

// point of V in simple-coroot coordinates
using CorootVector = VectorQ;

// thrown when an internal identity that must hold fails
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// thrown when a requested computation exceeds the point budget
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rational(std::int64_t p, std::int64_t q = 1) {
  return Rational(BigInt(p), BigInt(q));
}

inline BigInt numer(const Rational& r) { return mp::numerator(r); }
inline BigInt denom(const Rational& r) { return mp::denominator(r); }
inline bool is_integer(const Rational& r) { return denom(r) == 1; }

// "p/q", or "p" when q = 1
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& s);

BigInt to_bigint(__int128 v);
std::int64_t to_int64(const BigInt& z);
std::int64_t to_int64(const Rational& r);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt power(const BigInt& base, unsigned e);
Rational power(const Rational& base, unsigned e);

// floor(sqrt(v)) and ceil(sqrt(v)) for v >= 0
BigInt isqrt_floor(const BigInt& v);
BigInt isqrt_ceil(const BigInt& v);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// exact inverse of a square rational matrix; throws if singular
MatrixQ inverse(const MatrixQ& m);
Rational determinant(const MatrixQ& m);

template <typename Derived>
MatrixQ to_rational(const Eigen::MatrixBase<Derived>& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long long>(m(i, j)));
  return out;
}

template <typename Derived>
VectorQ to_rational_vector(const Eigen::MatrixBase<Derived>& v) {
  VectorQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(static_cast<long long>(v(i)));
  return out;
}

// integer matrix from a rational one; throws if any entry is fractional
MatrixZ to_integer(const MatrixQ& m);
VectorZ to_integer_vector(const VectorQ& v);
bool is_integral(const VectorQ& v);

std::string to_string(const VectorQ& v);

// lexicographic order on coordinate vectors
bool lex_less(const VectorQ& a, const VectorQ& b);
bool lex_less(const VectorZ& a, const VectorZ& b);

}  // namespace corelab
