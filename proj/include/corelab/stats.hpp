#pragma once

#include "corelab/cores.hpp"
#include "corelab/lattice.hpp"
#include "corelab/quadform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corelab {

Rational size_point(const RootSystem& rs, const CorootVector& x);
// g/2 |x|^2 - n(h+1)/24
Rational q_point(const RootSystem& rs, const CorootVector& x);
Rational zise_point(const RootSystem& rs, std::int64_t b, const CorootVector& x);
Rational zise_point(const RootSystem& rs, std::int64_t b, const AffineElement& w_b, const CorootVector& x);
// h/2 |x - b rho check/h|^2 - n(h+1)/24, simply-laced only
Rational closed_zise(const RootSystem& rs, std::int64_t b, const CorootVector& x);

enum class StatKind { size, zise, Q };

struct QuadraticStatistic {
  StatKind kind;
  const RootSystem* rs;
  std::int64_t b = 1;
  Rational operator()(const CorootVector& x) const;
};

// size in coroot coordinates
IntegerQuadraticForm size_form(const RootSystem& rs);
// zise in coweight coordinates (pairings with simple roots)
IntegerQuadraticForm zise_form(const RootSystem& rs, std::int64_t b);
IntegerQuadraticForm closed_zise_form(const RootSystem& rs, std::int64_t b);

// exact sums of numerator^j, j = 0..max_power
class PowerSums {
 public:
  explicit PowerSums(int max_power = 0) : max_power_(max_power), high_(max_power + 1, BigInt(0)) {}
  void add(std::int64_t v) {
    ++count_;
    s1_ += v;
    if (max_power_ >= 2) {
      if (v < (std::int64_t{1} << 31) && v > -(std::int64_t{1} << 31))
        s2_ += static_cast<__int128>(v) * v;
      else
        high_[2] += BigInt(v) * BigInt(v);
    }
    if (max_power_ >= 3) {
      BigInt bv(v), p = bv * bv;
      for (int j = 3; j <= max_power_; ++j) {
        p *= bv;
        high_[j] += p;
      }
    }
  }
  void merge(const PowerSums& o);
  int max_power() const { return max_power_; }
  std::uint64_t count() const { return count_; }
  BigInt sum(int j) const;

 private:
  int max_power_;
  std::uint64_t count_ = 0;
  __int128 s1_ = 0, s2_ = 0;
  std::vector<BigInt> high_;
};

struct StatFold {
  PowerSums sums;
  std::int64_t denominator = 1;
  std::optional<std::int64_t> max_numerator;
  std::uint64_t max_multiplicity = 0;
  VectorZ argmax;  // coweight coordinates
};

StatFold fold_statistic(const RootSystem& rs, std::int64_t b, Lattice lattice, const IntegerQuadraticForm& form,
                        int max_power, int jobs = 1, bool track_max = false);

// sum_j C(k,j) (-mu)^(k-j) raw[j]
Rational centered_sum(const std::vector<Rational>& raw, const Rational& mu, int k);

struct Verdict {
  enum Kind { match, mismatch, no_closed_form } kind = no_closed_form;
  Rational delta;  // enumerated - closed form
  std::string note;
};

std::string to_string(Verdict::Kind k);
Verdict compare(const Rational& value, const std::optional<Rational>& closed, const std::string& note = {});

// closed forms; empty outside the simply-laced (or type A) range they cover
Rational closed_count(const RootSystem& rs, std::int64_t b);
std::optional<Rational> closed_max(const RootSystem& rs, std::int64_t b);
std::optional<Rational> closed_mean(const RootSystem& rs, std::int64_t b);
std::optional<Rational> closed_variance(const RootSystem& rs, std::int64_t b);
// averaged third central moment, type A
std::optional<Rational> closed_m3(const RootSystem& rs, std::int64_t b);

struct MomentReport {
  std::string type;
  int rank = 0;
  std::int64_t b = 0;
  int max_k = 1;
  BigInt count;
  Rational max;
  std::uint64_t max_multiplicity = 0;
  CorootVector argmax;  // in the Sommers region
  Rational mean, m2, m3;
  std::vector<BigInt> power_sums;  // numerators over denominator^j
  std::int64_t denominator = 1;
  std::optional<bool> two_way_agree;  // raw power sums vs direct centered fold

  Rational closed_count;
  std::optional<Rational> closed_max, closed_mean, closed_variance, closed_m3;
  Verdict count_verdict, max_verdict, mean_verdict, variance_verdict, m3_verdict;
  bool unique_max = false;

  bool pass() const;  // no mismatch among the requested statistics
};

MomentReport moments(const RootSystem& rs, std::int64_t b, int max_k, int jobs = 1);

struct MaxReport {
  Rational max;
  std::uint64_t multiplicity = 0;
  CorootVector argmax;
  bool argmax_is_wb_inverse_zero = false;
  std::optional<Rational> closed_form;
  bool pass() const;
};

MaxReport verify_max(const RootSystem& rs, std::int64_t b, int jobs = 1);

struct FloorIdentityReport {
  std::int64_t b = 0;
  BigInt general;
  Rational closed;
  std::optional<BigInt> type_a, type_d;
  bool pass() const;
};

FloorIdentityReport floor_identity_check(const RootSystem& rs, std::int64_t b);

// experiments; never assert, only report
struct WeakOrderReport {
  std::string type;
  std::int64_t b = 0;
  std::size_t total = 0, contained = 0;
  std::vector<std::string> violations;
};
WeakOrderReport experiment_weak_order_maximality(const RootSystem& rs, std::int64_t b);

struct FussReport {
  int n = 0, m = 0;
  std::int64_t b = 0;
  BigInt count;
  Rational mean, conjectured;
  bool consistent = false;
};
FussReport experiment_cn_fuss(int n, int m, int jobs = 1);

struct WeightingCase {
  Word word;
  std::int64_t element_size = 0;      // size of the minimal coset representative
  std::int64_t word_element_size = 0;  // size of the element itself
  Partition core;
  bool self_conjugate = false;
  std::int64_t boxes = 0, weighted = 0;
  bool agree = false;
};
struct WeightingReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<WeightingCase> cases;
  std::size_t agreements = 0;
};
// the core of the folded word acting on 2n-cores
Partition folded_selfconjugate_core(int n, const Word& w);
std::int64_t weighted_box_sum(int n, const Partition& p);
WeightingCase weighting_case(const RootSystem& cn, const Word& w);
WeightingReport experiment_cn_selfconjugate_weighting(int n, int trials, std::uint64_t seed);

}  // namespace corelab
