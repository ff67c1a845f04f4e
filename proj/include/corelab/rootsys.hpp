#pragma once

#include "corelab/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace corelab {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
  Family family;
  int rank;

  RootSystemType(Family f, int n);
  static RootSystemType parse(std::string_view family, int rank);
  std::string name() const;  // e.g. "E6"
  char letter() const;
};

// positive root in the simple-root basis
struct Root {
  VectorZ coeffs;
  int height = 0;
};

struct RootSystem {
  explicit RootSystem(RootSystemType t) : rstype(t) {}

  RootSystemType rstype;
  int rank = 0;

  MatrixZ cartan;       // A_ij = <coroot_i, root_j>
  MatrixQ gram;         // <coroot_i, coroot_j>, with |highest root|^2 = 2
  VectorQ root_norms;   // |alpha_i|^2
  std::vector<Root> positive_roots;  // by height, then lexicographic
  VectorZ marks;        // highest root coefficients c_i
  VectorZ comarks;      // d_i, highest coroot coefficients
  int coxeter_h = 0;
  int dual_coxeter_g = 0;
  std::vector<int> exponents;
  int index_f = 0;
  BigInt weyl_order;

  CorootVector rho, rho_check;
  std::vector<CorootVector> fund_coweights;
  CorootVector highest_coroot;  // coroot of the highest root, in coroot coords

  MatrixQ coweight_to_coroot;  // A^{-T}
  MatrixZ coroot_to_coweight;  // A^T
  MatrixZ scaled_coweight_to_coroot;  // f A^{-T}, integral

  bool simply_laced() const { return rstype.family == Family::A || rstype.family == Family::D || rstype.family == Family::E; }
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
};

RootSystem build_root_system(const RootSystemType& t);
inline RootSystem build_root_system(Family f, int n) { return build_root_system(RootSystemType(f, n)); }

template <typename DerivedX, typename DerivedY>
Rational inner(const RootSystem& rs, const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != rs.rank || y.size() != rs.rank) throw std::invalid_argument("dimension mismatch in inner product");
  return x.dot(rs.gram * y);
}

inline Rational norm2(const RootSystem& rs, const CorootVector& x) { return inner(rs, x, x); }

// <x, alpha> for alpha given in simple-root coefficients
Rational pair_with_root(const RootSystem& rs, const CorootVector& x, const VectorZ& root_coeffs);
// (<x, alpha_1>, ..., <x, alpha_n>)
VectorQ simple_pairings(const RootSystem& rs, const CorootVector& x);

// coroot coordinates of the coroot of a root
CorootVector coroot_of(const RootSystem& rs, const VectorZ& root_coeffs);
// coroot coordinates of a root
CorootVector root_vector(const RootSystem& rs, const VectorZ& root_coeffs);
Rational root_norm2(const RootSystem& rs, const VectorZ& root_coeffs);

std::vector<Root> roots_of_height(const RootSystem& rs, int height);

CorootVector coweight_to_coroot_coords(const RootSystem& rs, const VectorQ& w);
VectorQ coroot_to_coweight_coords(const RootSystem& rs, const CorootVector& x);

// tables
std::vector<int> exponents_of(const RootSystemType& t);
BigInt weyl_group_order(const RootSystemType& t);
int dual_coxeter_number(const RootSystemType& t);

// every supported type with rank <= max_rank
std::vector<RootSystemType> all_types_up_to_rank(int max_rank);

}  // namespace corelab
