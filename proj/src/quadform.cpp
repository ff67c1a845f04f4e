#include "corelab/quadform.hpp"

namespace corelab {

IntegerQuadraticForm IntegerQuadraticForm::from_rational(const MatrixQ& P, const VectorQ& q, const Rational& r) {
  const Eigen::Index n = q.size();
  if (P.rows() != n || P.cols() != n) throw std::invalid_argument("quadratic form dimension mismatch");
  if (P != P.transpose()) throw std::invalid_argument("quadratic form must be symmetric");
  BigInt d = denom(r);
  for (Eigen::Index i = 0; i < n; ++i) {
    d = mp::lcm(d, denom(q(i)));
    for (Eigen::Index j = 0; j < n; ++j) d = mp::lcm(d, denom(P(i, j)));
  }
  IntegerQuadraticForm f;
  f.denominator = to_int64(d);
  const Rational D(d);
  f.quad = MatrixZ(n, n);
  f.lin = VectorZ(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    f.lin(i) = to_int64(q(i) * D);
    for (Eigen::Index j = 0; j < n; ++j) f.quad(i, j) = to_int64(P(i, j) * D);
  }
  f.constant = to_int64(r * D);
  return f;
}

BigInt IntegerQuadraticForm::numerator_bound(std::int64_t bound) const {
  BigInt B(bound), total = abs(BigInt(constant));
  for (int i = 0; i < dimension(); ++i) {
    total += abs(BigInt(lin(i))) * B;
    for (int j = 0; j < dimension(); ++j) total += abs(BigInt(quad(i, j))) * B * B;
  }
  return total;
}

void IntegerQuadraticForm::require_safe(std::int64_t bound) const {
  if (numerator_bound(bound) >= (BigInt(1) << 62)) throw BudgetExceeded("quadratic form values exceed 64-bit range");
}

}  // namespace corelab
