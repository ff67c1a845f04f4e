#pragma once

#include "corelab/lattice.hpp"
#include "corelab/stats.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corelab {

struct PolynomialQ {
  std::vector<Rational> coeffs;  // coeffs[k] multiplies b^k

  PolynomialQ() = default;
  explicit PolynomialQ(std::vector<Rational> c);
  static PolynomialQ constant(const Rational& c);
  static PolynomialQ linear_root(const Rational& r);  // b - r

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }
  Rational operator()(const Rational& b) const;
  bool operator==(const PolynomialQ& o) const { return coeffs == o.coeffs; }

  friend PolynomialQ operator+(const PolynomialQ& x, const PolynomialQ& y);
  friend PolynomialQ operator*(const PolynomialQ& x, const PolynomialQ& y);
  friend PolynomialQ operator*(const PolynomialQ& x, const Rational& c);

 private:
  void trim();
};

std::string to_string(const PolynomialQ& p);

// the unique polynomial of degree < |points| through the points
PolynomialQ interpolate(const std::vector<std::pair<Rational, Rational>>& points);

struct QuasiPolynomial {
  int period = 1;
  std::vector<std::optional<PolynomialQ>> components;  // by b mod period; empty when not fitted
  int degree_bound = 0;

  std::optional<Rational> operator()(std::int64_t b) const;
  const std::optional<PolynomialQ>& component_for(std::int64_t b) const;
};

int quasi_period(const RootSystem& rs);
// some b in the class is coprime to h
bool admissible_residue(const RootSystem& rs, int residue);
std::vector<int> admissible_residues(const RootSystem& rs);

// mean of zise over bA, n(b-1)(h+b+1)/24
Rational closed_form_mean(const RootSystem& rs, std::int64_t b);

struct FitSpec {
  const RootSystem* rs = nullptr;
  int k = 1;
  bool centered = false;  // weight (zise - mu(b))^k
  Lattice lattice = Lattice::coweight;
  int residue = 0;
  int degree = 0;
  std::vector<std::int64_t> samples;
  std::vector<std::int64_t> holdouts;
};

FitSpec make_fit_spec(const RootSystem& rs, int k, Lattice lattice, int residue, bool centered = false,
                      int num_holdouts = 2);

// sum over bA of the weight, exact
Rational weighted_sum(const RootSystem& rs, std::int64_t b, int k, bool centered, Lattice lattice, int jobs = 1);
BigInt estimate_points(const FitSpec& spec);

struct HoldoutMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitResult {
  FitSpec spec;
  PolynomialQ poly;
  std::vector<std::pair<std::int64_t, Rational>> sample_values, holdout_values;
  bool holdouts_pass = false;
};

// throws HoldoutMismatch ("period/degree assumption violated") and BudgetExceeded
FitResult fit_component(const FitSpec& spec, int jobs = 1, const BigInt& max_points = BigInt(50000000));

struct QuasiFit {
  QuasiPolynomial quasi;
  std::vector<FitResult> components;
};

QuasiFit fit_quasipolynomial(const RootSystem& rs, int k, Lattice lattice, bool centered = false,
                             std::vector<int> residues = {}, int jobs = 1,
                             const BigInt& max_points = BigInt(50000000));

struct ReciprocityProbe {
  std::int64_t b = 0;
  std::optional<Rational> value, mirrored;  // fitted(b), fitted(-h-b)
  bool ok = false;
};

struct ReciprocityReport {
  int sign = 1;  // (-1)^n
  std::vector<ReciprocityProbe> probes;
  bool pass = true;
};

// fitted(-h-b) = (-1)^n fitted(b), probes whose classes were not fitted are skipped
ReciprocityReport reciprocity_check(const RootSystem& rs, int k, const QuasiPolynomial& fitted,
                                    const std::vector<std::int64_t>& probes);
std::vector<std::int64_t> default_probes(const RootSystem& rs);

// zeros forced by reciprocity: -e_i, 1 and -h-1 (exponents in the class)
std::vector<std::int64_t> predicted_zeros(const RootSystem& rs, int residue);

struct ExpectedSizeReport {
  std::string type;
  bool pointwise_only = false;
  std::vector<std::pair<int, bool>> residue_matches;  // full fit: residue, polynomial equality
  std::vector<std::pair<std::int64_t, bool>> point_matches;
  std::vector<FitResult> fits;
  std::optional<ReciprocityReport> reciprocity;
  PolynomialQ closed_form;
  bool pass = false;
};

// n(b-1)(b+h+1)/24 * prod (b + e_i)/|W|
PolynomialQ expected_size_polynomial(const RootSystem& rs);
ExpectedSizeReport verify_expected_size_polynomial(const RootSystem& rs, int jobs = 1,
                                                   const BigInt& max_points = BigInt(50000000));

struct LeadingCoefficientReport {
  std::string type;
  int k = 1;
  std::string grade;  // "theorem", "conjecture" or "none"
  int residue = 0;
  Rational leading, count_leading, ratio;
  std::optional<Rational> expected;
  bool match = false;
};

// top coefficient tables; empty outside the displayed cases
std::optional<Rational> expected_leading_ratio(const RootSystem& rs, int k);
LeadingCoefficientReport leading_coefficient_checks(const RootSystem& rs, int k, int jobs = 1,
                                                    const BigInt& max_points = BigInt(50000000));

}  // namespace corelab
