#pragma once

#include "corelab/rootsys.hpp"

#include <vector>

namespace corelab {

struct IntPolynomial {
  std::vector<BigInt> coeffs;  // coeffs[k] multiplies q^k

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c);
  static IntPolynomial monomial(int k, BigInt c = 1);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  BigInt operator()(const BigInt& q) const;
  bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

  friend IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);

 private:
  void trim();
};

// quotient by a monic divisor; throws on a nonzero remainder
IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& monic);
std::string to_string(const IntPolynomial& p);

struct IntSeries {
  int N = 0;  // exact modulo q^{N+1}
  std::vector<BigInt> coeffs;

  IntSeries() = default;
  explicit IntSeries(int trunc);
  static IntSeries one(int trunc);
  static IntSeries from_polynomial(const IntPolynomial& p, int trunc, int step = 1);  // p(q^step)

  const BigInt& operator[](int k) const { return coeffs[k]; }
  BigInt& operator[](int k) { return coeffs[k]; }
  bool operator==(const IntSeries& o) const { return N == o.N && coeffs == o.coeffs; }

  IntSeries inverse() const;  // needs constant term +-1

  friend IntSeries operator+(const IntSeries& x, const IntSeries& y);
  friend IntSeries operator-(const IntSeries& x, const IntSeries& y);
  friend IntSeries operator*(const IntSeries& x, const IntSeries& y);
};

IntSeries core_product_series(int a, int N);

// det(qI - M), division free
IntPolynomial characteristic_polynomial(const MatrixZ& m);
IntPolynomial cyclotomic_polynomial(int d);
// order: permutation of 1..n; empty means 1..n
IntPolynomial coxeter_char_poly(const RootSystem& rs, const std::vector<int>& order = {});
// prod_i (q - zeta^{e_i}) as a product of cyclotomic polynomials
IntPolynomial exponent_char_poly(const RootSystem& rs);

IntSeries macdonald_series(const RootSystem& rs, int N);

}  // namespace corelab
