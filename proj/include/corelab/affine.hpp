#pragma once

#include "corelab/rootsys.hpp"

#include <string>
#include <vector>

namespace corelab {

// x -> linear * x + translation, in coroot coordinates
struct AffineElement {
  MatrixZ linear;
  CorootVector translation;
  bool extended = false;  // translation only required to lie in the coweight lattice

  static AffineElement identity(int n);

  int rank() const { return static_cast<int>(linear.rows()); }
  CorootVector operator()(const CorootVector& x) const;
  AffineElement operator*(const AffineElement& rhs) const;
  AffineElement inverse() const;
  bool operator==(const AffineElement& rhs) const;
  bool is_identity() const;
};

// alpha + k delta, alpha in the simple-root basis (all coefficients of one sign)
struct AffineRoot {
  VectorZ root;
  std::int64_t level = 0;

  bool positive() const;
  std::int64_t height(const RootSystem& rs) const;
  bool operator==(const AffineRoot& rhs) const;
  bool operator<(const AffineRoot& rhs) const;
};

std::string to_string(const AffineRoot& r);

struct Word {
  std::vector<int> letters;
  bool reduced = false;
  std::size_t length() const { return letters.size(); }
};

std::string to_string(const Word& w);

AffineElement simple_reflection(const RootSystem& rs, int i);
// s_{l1} s_{l2} ... s_{lk}
AffineElement element_of_word(const RootSystem& rs, const Word& w);

AffineRoot simple_affine_root(const RootSystem& rs, int i);
AffineRoot apply_simple_reflection(const RootSystem& rs, int i, const AffineRoot& beta);
// applies the word as a group element (rightmost letter first)
AffineRoot apply_word(const RootSystem& rs, const Word& w, const AffineRoot& beta);

struct AlcoveWalk {
  AffineElement element;  // x lies in element(A interior)
  Word word;
};

// lowest-index violated wall first, the affine wall last
AlcoveWalk alcove_walk(const RootSystem& rs, const CorootVector& x);

struct ChamberWalk {
  MatrixZ back;         // u^{-1}, where u(x) is the dominant image
  Word word;            // back = s_{l1} ... s_{lk}
  CorootVector image;   // u(x), in the closed dominant chamber
};

ChamberWalk chamber_walk(const RootSystem& rs, const CorootVector& x);

// vertices of bA: 0 and b w_i / c_i
std::vector<CorootVector> alcove_vertices(const RootSystem& rs, std::int64_t b);
std::vector<CorootVector> sommers_vertices(const RootSystem& rs, std::int64_t b);

void require_coprime(const RootSystem& rs, std::int64_t b);

AffineElement compute_w_b(const RootSystem& rs, std::int64_t b);
bool sommers_contains(const RootSystem& rs, std::int64_t b, const CorootVector& x);
bool in_dilated_alcove(const RootSystem& rs, std::int64_t b, const CorootVector& x);
bool in_open_alcove(const RootSystem& rs, const CorootVector& x);

// inversions of v = s_{l1}...s_{lk}: s_{l1}...s_{l(j-1)}(alpha_{lj})
std::vector<AffineRoot> inversions_of_word(const RootSystem& rs, const Word& w);
std::vector<AffineRoot> inversions_of_inverse(const RootSystem& rs, const AffineElement& w);
std::int64_t size_of_element(const RootSystem& rs, const AffineElement& w);

// {-alpha + k delta : 0 < k < (b/h) ht(alpha)}
std::vector<AffineRoot> predicted_inversions_of_w_b(const RootSystem& rs, std::int64_t b);

// shortest u with u(0) = lambda, and a reduced word for it
AlcoveWalk minimal_coset_representative(const RootSystem& rs, const CorootVector& lambda);

std::vector<AffineElement> omega_group(const RootSystem& rs);
// invariant factors, e.g. "Z4" or "Z2xZ2"
std::string omega_structure(const RootSystem& rs);
CorootVector b_omega_action(const RootSystem& rs, std::int64_t b, const AffineElement& g, const CorootVector& x);

}  // namespace corelab
