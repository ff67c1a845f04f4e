#pragma once

#include "corelab/exact.hpp"

namespace corelab {

// (v^T quad v + lin^T v + constant) / denominator, on integer vectors
struct IntegerQuadraticForm {
  MatrixZ quad;
  VectorZ lin;
  std::int64_t constant = 0;
  std::int64_t denominator = 1;

  // from the rational form v^T P v + q^T v + r, P symmetric
  static IntegerQuadraticForm from_rational(const MatrixQ& P, const VectorQ& q, const Rational& r);

  int dimension() const { return static_cast<int>(lin.size()); }

  std::int64_t numerator(const std::int64_t* v) const {
    const int n = dimension();
    std::int64_t total = constant;
    for (int i = 0; i < n; ++i) {
      std::int64_t row = lin(i);
      for (int j = 0; j < n; ++j) row += quad(i, j) * v[j];
      total += row * v[i];
    }
    return total;
  }

  Rational operator()(const VectorZ& v) const { return rational(numerator(v.data()), denominator); }

  // largest |numerator| over the box |v_i| <= bound, as a BigInt
  BigInt numerator_bound(std::int64_t bound) const;
  // throws if some point of the box could overflow 64-bit evaluation
  void require_safe(std::int64_t bound) const;

  bool operator==(const IntegerQuadraticForm& o) const {
    return denominator == o.denominator && constant == o.constant && lin == o.lin && quad == o.quad;
  }
};

}  // namespace corelab
