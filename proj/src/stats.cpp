#include "corelab/stats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace corelab {

Rational size_point(const RootSystem& rs, const CorootVector& x) {
  return Rational(rs.dual_coxeter_g) / 2 * inner(rs, x, x) - inner(rs, x, rs.rho);
}

Rational q_point(const RootSystem& rs, const CorootVector& x) {
  return Rational(rs.dual_coxeter_g) / 2 * inner(rs, x, x) - rational(rs.rank * (rs.coxeter_h + 1), 24);
}

Rational closed_zise(const RootSystem& rs, std::int64_t b, const CorootVector& x) {
  if (!rs.simply_laced()) throw std::invalid_argument("closed zise form needs a simply-laced type");
  const Rational h(rs.coxeter_h);
  CorootVector d = x - rs.rho_check * Rational(b) / h;
  return h / 2 * inner(rs, d, d) - rational(rs.rank * (rs.coxeter_h + 1), 24);
}

Rational zise_point(const RootSystem& rs, std::int64_t b, const AffineElement& w_b, const CorootVector& x) {
  Rational z = size_point(rs, w_b.inverse()(x));
  if (rs.simply_laced() && z != closed_zise(rs, b, x))
    throw ConsistencyError("zise through w_b differs from the closed quadratic form");
  return z;
}

Rational zise_point(const RootSystem& rs, std::int64_t b, const CorootVector& x) {
  return zise_point(rs, b, compute_w_b(rs, b), x);
}

Rational QuadraticStatistic::operator()(const CorootVector& x) const {
  switch (kind) {
    case StatKind::size: return size_point(*rs, x);
    case StatKind::zise: return zise_point(*rs, b, x);
    case StatKind::Q: return q_point(*rs, x);
  }
  return 0;
}

IntegerQuadraticForm size_form(const RootSystem& rs) {
  MatrixQ P = rs.gram * (Rational(rs.dual_coxeter_g) / 2);
  VectorQ q = -(rs.gram * rs.rho);
  return IntegerQuadraticForm::from_rational(P, q, Rational(0));
}

namespace {

// composes size with x -> L w + tau
IntegerQuadraticForm pulled_back_size(const RootSystem& rs, const MatrixQ& L, const VectorQ& tau) {
  const Rational g(rs.dual_coxeter_g);
  MatrixQ GL = rs.gram * L;
  MatrixQ P = L.transpose() * GL * (g / 2);
  VectorQ q = GL.transpose() * tau * g - GL.transpose() * rs.rho;
  Rational r = g / 2 * inner(rs, tau, tau) - inner(rs, tau, rs.rho);
  return IntegerQuadraticForm::from_rational(P, q, r);
}

}  // namespace

IntegerQuadraticForm closed_zise_form(const RootSystem& rs, std::int64_t b) {
  if (!rs.simply_laced()) throw std::invalid_argument("closed zise form needs a simply-laced type");
  const Rational h(rs.coxeter_h);
  const MatrixQ& T = rs.coweight_to_coroot;
  MatrixQ GT = rs.gram * T;
  MatrixQ P = T.transpose() * GT * (h / 2);
  VectorQ q = -(GT.transpose() * rs.rho_check) * Rational(b);
  CorootVector c = rs.rho_check * Rational(b) / h;
  Rational r = h / 2 * inner(rs, c, c) - rational(rs.rank * (rs.coxeter_h + 1), 24);
  return IntegerQuadraticForm::from_rational(P, q, r);
}

IntegerQuadraticForm zise_form(const RootSystem& rs, std::int64_t b) {
  if (b >= 1 && gcd64(b, rs.coxeter_h) == 1) {
    AffineElement inv = compute_w_b(rs, b).inverse();
    MatrixQ L = to_rational(inv.linear) * rs.coweight_to_coroot;
    IntegerQuadraticForm f = pulled_back_size(rs, L, inv.translation);
    if (rs.simply_laced() && !(f == closed_zise_form(rs, b)))
      throw ConsistencyError("zise through w_b differs from the closed quadratic form");
    return f;
  }
  if (rs.simply_laced()) return closed_zise_form(rs, b);
  throw std::invalid_argument("b not coprime to Coxeter number");
}

void PowerSums::merge(const PowerSums& o) {
  if (o.max_power_ != max_power_) throw std::invalid_argument("power sum orders differ");
  count_ += o.count_;
  s1_ += o.s1_;
  s2_ += o.s2_;
  for (int j = 0; j <= max_power_; ++j) high_[j] += o.high_[j];
}

BigInt PowerSums::sum(int j) const {
  if (j < 0 || j > max_power_) throw std::out_of_range("power sum index");
  if (j == 0) return BigInt(count_);
  if (j == 1) return to_bigint(s1_);
  if (j == 2) return to_bigint(s2_) + high_[2];
  return high_[j];
}

StatFold fold_statistic(const RootSystem& rs, std::int64_t b, Lattice lattice, const IntegerQuadraticForm& form,
                        int max_power, int jobs, bool track_max) {
  form.require_safe(std::max<std::int64_t>(b, 1));
  AlcoveEnumerator en(rs, b, lattice);
  const int n = rs.rank;
  StatFold out = fold_points(
      en, jobs,
      [&] {
        StatFold f;
        f.sums = PowerSums(max_power);
        f.denominator = form.denominator;
        return f;
      },
      [&](StatFold& acc, const std::int64_t* x) {
        const std::int64_t v = form.numerator(x);
        acc.sums.add(v);
        if (track_max) {
          if (!acc.max_numerator || v > *acc.max_numerator) {
            acc.max_numerator = v;
            acc.max_multiplicity = 1;
            acc.argmax = VectorZ::Map(x, n);
          } else if (v == *acc.max_numerator) {
            ++acc.max_multiplicity;
            VectorZ cand = VectorZ::Map(x, n);
            if (lex_less(cand, acc.argmax)) acc.argmax = cand;
          }
        }
      },
      [](StatFold& into, StatFold& from) {
        into.sums.merge(from.sums);
        if (!from.max_numerator) return;
        if (!into.max_numerator || *from.max_numerator > *into.max_numerator) {
          into.max_numerator = from.max_numerator;
          into.max_multiplicity = from.max_multiplicity;
          into.argmax = from.argmax;
        } else if (*from.max_numerator == *into.max_numerator) {
          into.max_multiplicity += from.max_multiplicity;
          if (lex_less(from.argmax, into.argmax)) into.argmax = from.argmax;
        }
      });
  return out;
}

Rational centered_sum(const std::vector<Rational>& raw, const Rational& mu, int k) {
  if (static_cast<int>(raw.size()) <= k) throw std::out_of_range("not enough power sums");
  Rational total = 0;
  for (int j = 0; j <= k; ++j) total += Rational(binomial(k, j)) * power(Rational(-mu), k - j) * raw[j];
  return total;
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::no_closed_form: return "no_closed_form";
  }
  return "";
}

Verdict compare(const Rational& value, const std::optional<Rational>& closed, const std::string& note) {
  Verdict v;
  v.note = note;
  if (!closed) return v;
  v.delta = value - *closed;
  v.kind = v.delta == 0 ? Verdict::match : Verdict::mismatch;
  return v;
}

Rational closed_count(const RootSystem& rs, std::int64_t b) {
  BigInt p = 1;
  for (int e : rs.exponents) p *= b + e;
  return Rational(p, rs.weyl_order);
}

std::optional<Rational> closed_max(const RootSystem& rs, std::int64_t b) {
  if (!rs.simply_laced()) return std::nullopt;
  return Rational(BigInt(rs.rank) * (b * b - 1) * (rs.coxeter_h + 1)) / 24;
}

std::optional<Rational> closed_mean(const RootSystem& rs, std::int64_t b) {
  if (!rs.simply_laced()) return std::nullopt;
  return Rational(BigInt(rs.rank) * (b - 1) * (rs.coxeter_h + b + 1)) / 24;
}

std::optional<Rational> closed_variance(const RootSystem& rs, std::int64_t b) {
  if (!rs.simply_laced()) return std::nullopt;
  const std::int64_t h = rs.coxeter_h;
  return Rational(BigInt(rs.rank) * h * b * (b - 1) * (h + b) * (h + b + 1)) / 1440;
}

std::optional<Rational> closed_m3(const RootSystem& rs, std::int64_t b) {
  if (rs.rstype.family != Family::A) return std::nullopt;
  const BigInt a = rs.rank + 1, B = b;
  BigInt poly = 2 * a * a * B - 3 * a * a + 2 * a * B * B - 3 * a * B - 3 * B * B - 3;
  return Rational(a * B * (a - 1) * (B - 1) * (a + B) * (a + B + 1) * poly) / 60480;
}

bool MomentReport::pass() const {
  for (const Verdict* v : {&count_verdict, &max_verdict, &mean_verdict, &variance_verdict, &m3_verdict})
    if (v->kind == Verdict::mismatch) return false;
  if (closed_max && !unique_max) return false;
  if (two_way_agree && !*two_way_agree) return false;
  return true;
}

MomentReport moments(const RootSystem& rs, std::int64_t b, int max_k, int jobs) {
  require_coprime(rs, b);
  if (max_k < 1 || max_k > 3) throw std::invalid_argument("max_k must be 1, 2 or 3");
  const AffineElement wb = compute_w_b(rs, b);
  const IntegerQuadraticForm form = zise_form(rs, b);
  StatFold fold = fold_statistic(rs, b, Lattice::coroot, form, 3, jobs, true);

  MomentReport r;
  r.type = rs.rstype.name();
  r.rank = rs.rank;
  r.b = b;
  r.max_k = max_k;
  r.denominator = form.denominator;
  std::vector<Rational> raw;
  for (int j = 0; j <= 3; ++j) {
    r.power_sums.push_back(fold.sums.sum(j));
    raw.push_back(Rational(r.power_sums.back(), power(BigInt(form.denominator), j)));
  }
  r.count = r.power_sums[0];
  const Rational N(r.count);
  r.mean = raw[1] / N;
  r.m2 = centered_sum(raw, r.mean, 2) / N;
  r.m3 = centered_sum(raw, r.mean, 3) / N;
  r.max = rational(*fold.max_numerator, form.denominator);
  r.max_multiplicity = fold.max_multiplicity;
  r.unique_max = fold.max_multiplicity == 1;
  r.argmax = wb.inverse()(rs.coweight_to_coroot * to_rational_vector(fold.argmax));

  if (r.count <= 200000) {
    // second route: materialize, then fold the centered values directly
    LatticePointSet pts = coroot_points_in_bA(rs, b, jobs);
    std::vector<Rational> values;
    for (const auto& w : pts.coweights) values.push_back(form(w));
    Rational sum = std::accumulate(values.begin(), values.end(), Rational(0));
    Rational mu = sum / Rational(values.size());
    Rational c2 = 0, c3 = 0;
    for (const auto& v : values) {
      c2 += (v - mu) * (v - mu);
      c3 += (v - mu) * (v - mu) * (v - mu);
    }
    Rational cnt(values.size());
    r.two_way_agree = BigInt(values.size()) == r.count && mu == r.mean && c2 / cnt == r.m2 && c3 / cnt == r.m3;
  }

  r.closed_count = closed_count(rs, b);
  r.closed_max = closed_max(rs, b);
  r.closed_mean = closed_mean(rs, b);
  r.closed_variance = closed_variance(rs, b);
  r.closed_m3 = closed_m3(rs, b);
  r.count_verdict = compare(N, r.closed_count);
  r.max_verdict = compare(r.max, r.closed_max);
  r.mean_verdict = compare(r.mean, r.closed_mean);
  if (max_k >= 2) r.variance_verdict = compare(r.m2, r.closed_variance);
  if (max_k >= 3)
    r.m3_verdict = compare(r.m3, r.closed_m3, r.closed_m3 ? "" : "no uniform third moment formula outside type A");
  return r;
}

bool MaxReport::pass() const {
  return multiplicity == 1 && argmax_is_wb_inverse_zero && (!closed_form || *closed_form == max);
}

MaxReport verify_max(const RootSystem& rs, std::int64_t b, int jobs) {
  require_coprime(rs, b);
  const AffineElement wb_inv = compute_w_b(rs, b).inverse();
  StatFold fold = fold_statistic(rs, b, Lattice::coroot, zise_form(rs, b), 1, jobs, true);
  MaxReport r;
  r.max = rational(*fold.max_numerator, fold.denominator);
  r.multiplicity = fold.max_multiplicity;
  r.argmax = wb_inv(rs.coweight_to_coroot * to_rational_vector(fold.argmax));
  r.argmax_is_wb_inverse_zero = r.argmax == wb_inv(CorootVector::Zero(rs.rank));
  r.closed_form = closed_max(rs, b);
  return r;
}

bool FloorIdentityReport::pass() const {
  if (Rational(general) != closed) return false;
  if (type_a && Rational(*type_a) != closed) return false;
  if (type_d && Rational(*type_d) != closed) return false;
  return true;
}

FloorIdentityReport floor_identity_check(const RootSystem& rs, std::int64_t b) {
  if (!rs.simply_laced()) throw std::invalid_argument("floor identities need a simply-laced type");
  require_coprime(rs, b);
  const std::int64_t h = rs.coxeter_h, n = rs.rank;
  FloorIdentityReport r;
  r.b = b;
  r.general = 0;
  for (std::int64_t i = 1; i <= b - 1; ++i) {
    std::int64_t inner_sum = 0;
    for (std::int64_t j = 1; j <= i * h / b; ++j) inner_sum += static_cast<std::int64_t>(roots_of_height(rs, static_cast<int>(h - j)).size());
    r.general += BigInt(b - i) * inner_sum;
  }
  r.closed = *closed_max(rs, b);
  if (rs.rstype.family == Family::A) {
    Rational s = 0;
    for (std::int64_t i = 1; i <= b - 1; ++i) {
      std::int64_t fl = i * (n + 1) / b;
      s += rational(b - i, 2) * Rational(fl * (1 + fl));
    }
    r.type_a = to_int64(s);
  }
  if (rs.rstype.family == Family::D) {
    BigInt s = 0;
    for (std::int64_t i = 1; i <= b - 1; ++i) {
      const std::int64_t fl = i * (2 * n - 2) / b;
      std::int64_t part = 0;
      for (std::int64_t j = 1; j <= std::min(fl, n - 2); ++j) part += (j + 1) / 2;
      for (std::int64_t j = n - 2; j <= fl - 1; ++j) part += (j + 4) / 2;  // ceil((j+3)/2)
      s += BigInt(b - i) * part;
    }
    r.type_d = s;
  }
  return r;
}

WeakOrderReport experiment_weak_order_maximality(const RootSystem& rs, std::int64_t b) {
  require_coprime(rs, b);
  WeakOrderReport r;
  r.type = rs.rstype.name();
  r.b = b;
  const AffineElement wb = compute_w_b(rs, b);
  std::set<AffineRoot> target;
  for (const auto& a : inversions_of_inverse(rs, wb.inverse())) target.insert(a);
  for (const auto& lambda : core_points_in_sommers(rs, b).points) {
    // dominant element v with v^{-1}(0) = lambda is the inverse of the minimal coset representative
    AlcoveWalk u = minimal_coset_representative(rs, lambda);
    bool ok = true;
    for (const auto& a : inversions_of_inverse(rs, u.element))
      if (!target.count(a)) {
        ok = false;
        break;
      }
    ++r.total;
    if (ok)
      ++r.contained;
    else
      r.violations.push_back(to_string(lambda));
  }
  return r;
}

FussReport experiment_cn_fuss(int n, int m, int jobs) {
  if (n < 2 || m < 1) throw std::invalid_argument("need n >= 2 and m >= 1");
  RootSystem rs = build_root_system(Family::C, n);
  FussReport r;
  r.n = n;
  r.m = m;
  r.b = static_cast<std::int64_t>(m) * rs.coxeter_h + 1;
  StatFold fold = fold_statistic(rs, r.b, Lattice::coroot, zise_form(rs, r.b), 1, jobs, false);
  r.count = fold.sums.sum(0);
  r.mean = Rational(fold.sums.sum(1), BigInt(fold.denominator) * r.count);
  const BigInt N = n, M = m;
  r.conjectured = Rational(M * N * (2 * (M + 1) * N * N + (M + 3) * N - (M + 1))) / 12;
  r.consistent = r.mean == r.conjectured;
  return r;
}

Partition folded_selfconjugate_core(int n, const Word& w) {
  const int a = 2 * n;
  CorePartition c(Partition(), a);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int l = *it;
    if (l < 0 || l > n) throw std::out_of_range("letter out of range");
    c = simple_action_on_core(a, l, c);
    if (l != 0 && l != n) c = simple_action_on_core(a, a - l, c);
  }
  return c.partition;
}

std::int64_t weighted_box_sum(int n, const Partition& p) {
  std::int64_t total = 0;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = i; j <= p.parts[i - 1]; ++j) total += (i < j && (j - i) % n == 0) ? 2 : 1;
  return total;
}

WeightingCase weighting_case(const RootSystem& cn, const Word& w) {
  const int n = cn.rank;
  WeightingCase c;
  c.word = w;
  AffineElement e = element_of_word(cn, w);
  c.word_element_size = size_of_element(cn, e);
  AlcoveWalk u = minimal_coset_representative(cn, e(CorootVector::Zero(n)));
  c.element_size = size_of_element(cn, u.element);
  c.core = folded_selfconjugate_core(n, w);
  c.self_conjugate = c.core == c.core.conjugate();
  c.boxes = c.core.size();
  c.weighted = weighted_box_sum(n, c.core);
  c.agree = c.self_conjugate && c.weighted == c.element_size;
  return c;
}

WeightingReport experiment_cn_selfconjugate_weighting(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  RootSystem cn = build_root_system(Family::C, n);
  WeightingReport r;
  r.n = n;
  r.seed = seed;
  std::vector<Word> words{Word{}};
  if (n == 2) words.push_back(Word{{0, 1, 0, 1, 2, 1, 0}, false});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 10), letter(0, n);
  for (int t = 0; t < trials; ++t) {
    Word w;
    const int L = len(rng);
    for (int i = 0; i < L; ++i) w.letters.push_back(letter(rng));
    words.push_back(w);
  }
  for (const auto& w : words) {
    r.cases.push_back(weighting_case(cn, w));
    r.agreements += r.cases.back().agree;
  }
  return r;
}

}  // namespace corelab
