#include "corelab/ehrhart.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace corelab {

PolynomialQ::PolynomialQ(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

PolynomialQ PolynomialQ::constant(const Rational& c) { return PolynomialQ({c}); }

PolynomialQ PolynomialQ::linear_root(const Rational& r) { return PolynomialQ({Rational(-r), Rational(1)}); }

void PolynomialQ::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational PolynomialQ::operator()(const Rational& b) const {
  Rational out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * b + *it;
  return out;
}

PolynomialQ operator+(const PolynomialQ& x, const PolynomialQ& y) {
  std::vector<Rational> c(std::max(x.coeffs.size(), y.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) c[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) c[i] += y.coeffs[i];
  return PolynomialQ(c);
}

PolynomialQ operator*(const PolynomialQ& x, const PolynomialQ& y) {
  if (x.coeffs.empty() || y.coeffs.empty()) return {};
  std::vector<Rational> c(x.coeffs.size() + y.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) c[i + j] += x.coeffs[i] * y.coeffs[j];
  return PolynomialQ(c);
}

PolynomialQ operator*(const PolynomialQ& x, const Rational& s) {
  std::vector<Rational> c = x.coeffs;
  for (auto& v : c) v *= s;
  return PolynomialQ(c);
}

std::string to_string(const PolynomialQ& p) {
  if (p.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || k == 0) os << to_string(mag);
    if (k >= 1) os << (mag != 1 ? "*b" : "b");
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

PolynomialQ interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t m = points.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      Rational gap = points[i].first - points[i - j].first;
      if (gap == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  PolynomialQ out;
  for (std::size_t i = m; i-- > 0;) out = out * PolynomialQ::linear_root(points[i].first) + PolynomialQ::constant(dd[i]);
  return out;
}

const std::optional<PolynomialQ>& QuasiPolynomial::component_for(std::int64_t b) const {
  std::int64_t j = ((b % period) + period) % period;
  return components.at(j);
}

std::optional<Rational> QuasiPolynomial::operator()(std::int64_t b) const {
  const auto& c = component_for(b);
  if (!c) return std::nullopt;
  return (*c)(Rational(b));
}

int quasi_period(const RootSystem& rs) {
  std::int64_t m = 1;
  for (auto c : rs.marks) m = lcm64(m, c);
  return static_cast<int>(m);
}

bool admissible_residue(const RootSystem& rs, int residue) {
  const int m = quasi_period(rs);
  if (residue < 0 || residue >= m) return false;
  return std::gcd(residue, std::gcd(m, rs.coxeter_h)) == 1 || (m == 1 && residue == 0);
}

std::vector<int> admissible_residues(const RootSystem& rs) {
  std::vector<int> out;
  for (int j = 0; j < quasi_period(rs); ++j)
    if (admissible_residue(rs, j)) out.push_back(j);
  return out;
}

Rational closed_form_mean(const RootSystem& rs, std::int64_t b) {
  return rational(static_cast<std::int64_t>(rs.rank) * (b - 1) * (rs.coxeter_h + b + 1), 24);
}

namespace {

bool usable_sample(const RootSystem& rs, Lattice lattice, std::int64_t b) {
  return lattice == Lattice::coweight || gcd64(b, rs.index_f) == 1;
}

}  // namespace

FitSpec make_fit_spec(const RootSystem& rs, int k, Lattice lattice, int residue, bool centered, int num_holdouts) {
  if (!rs.simply_laced()) throw std::invalid_argument("weighted fits need a simply-laced type");
  if (k < 0) throw std::invalid_argument("negative weight exponent");
  const int m = quasi_period(rs);
  if (residue < 0 || residue >= m) throw std::invalid_argument("residue out of range");
  if (num_holdouts < 2) throw std::invalid_argument("need at least two holdouts");
  FitSpec s;
  s.rs = &rs;
  s.k = k;
  s.centered = centered;
  s.lattice = lattice;
  s.residue = residue;
  s.degree = rs.rank + 2 * k;
  std::vector<std::int64_t> all;
  for (std::int64_t b = residue; static_cast<int>(all.size()) < s.degree + 1 + num_holdouts; b += m)
    if (usable_sample(rs, lattice, b)) all.push_back(b);
  s.samples.assign(all.begin(), all.begin() + s.degree + 1);
  s.holdouts.assign(all.begin() + s.degree + 1, all.end());
  return s;
}

Rational weighted_sum(const RootSystem& rs, std::int64_t b, int k, bool centered, Lattice lattice, int jobs) {
  if (b < 0) throw std::invalid_argument("negative dilation");
  const IntegerQuadraticForm form = zise_form(rs, b);
  StatFold fold = fold_statistic(rs, b, lattice, form, k, jobs);
  std::vector<Rational> raw;
  Rational den = 1;
  for (int j = 0; j <= k; ++j) {
    raw.push_back(Rational(fold.sums.sum(j)) / den);
    den *= form.denominator;
  }
  if (!centered) return raw[k];
  return centered_sum(raw, closed_form_mean(rs, b), k);
}

BigInt estimate_points(const FitSpec& spec) {
  BigInt total = 0;
  for (auto b : spec.samples) total += coweight_count(*spec.rs, b);
  for (auto b : spec.holdouts) total += coweight_count(*spec.rs, b);
  return total;
}

FitResult fit_component(const FitSpec& spec, int jobs, const BigInt& max_points) {
  if (static_cast<int>(spec.samples.size()) < spec.degree + 1) throw std::invalid_argument("too few samples");
  if (spec.holdouts.size() < 2) throw std::invalid_argument("too few holdouts");
  std::set<std::int64_t> seen(spec.samples.begin(), spec.samples.end());
  seen.insert(spec.holdouts.begin(), spec.holdouts.end());
  if (seen.size() != spec.samples.size() + spec.holdouts.size()) throw std::invalid_argument("samples must be distinct");
  BigInt est = estimate_points(spec);
  if (est > max_points) throw BudgetExceeded("fit needs " + to_string(est) + " points, cap " + to_string(max_points));

  const RootSystem& rs = *spec.rs;
  FitResult out;
  out.spec = spec;
  std::vector<std::pair<Rational, Rational>> nodes;
  for (auto b : spec.samples) {
    Rational v = weighted_sum(rs, b, spec.k, spec.centered, spec.lattice, jobs);
    out.sample_values.emplace_back(b, v);
    nodes.emplace_back(Rational(b), v);
  }
  out.poly = interpolate(nodes);
  out.holdouts_pass = true;
  for (auto b : spec.holdouts) {
    Rational v = weighted_sum(rs, b, spec.k, spec.centered, spec.lattice, jobs);
    out.holdout_values.emplace_back(b, v);
    if (out.poly(Rational(b)) != v) out.holdouts_pass = false;
  }
  if (!out.holdouts_pass) throw HoldoutMismatch("period/degree assumption violated");
  return out;
}

QuasiFit fit_quasipolynomial(const RootSystem& rs, int k, Lattice lattice, bool centered, std::vector<int> residues,
                             int jobs, const BigInt& max_points) {
  const int m = quasi_period(rs);
  if (residues.empty()) residues = admissible_residues(rs);
  for (int j : residues)
    if (!admissible_residue(rs, j)) throw std::invalid_argument("residue class not coprime to Coxeter number");
  std::vector<FitSpec> specs;
  BigInt total = 0;
  for (int j : residues) {
    specs.push_back(make_fit_spec(rs, k, lattice, j, centered));
    total += estimate_points(specs.back());
  }
  if (total > max_points) throw BudgetExceeded("fit needs " + to_string(total) + " points, cap " + to_string(max_points));
  QuasiFit out;
  out.quasi.period = m;
  out.quasi.components.assign(m, std::nullopt);
  out.quasi.degree_bound = rs.rank + 2 * k;
  for (const auto& spec : specs) {
    out.components.push_back(fit_component(spec, jobs, max_points));
    out.quasi.components[spec.residue] = out.components.back().poly;
  }
  return out;
}

ReciprocityReport reciprocity_check(const RootSystem& rs, int, const QuasiPolynomial& fitted,
                                    const std::vector<std::int64_t>& probes) {
  ReciprocityReport rep;
  rep.sign = rs.rank % 2 == 0 ? 1 : -1;
  for (auto b : probes) {
    ReciprocityProbe p;
    p.b = b;
    p.value = fitted(b);
    p.mirrored = fitted(-rs.coxeter_h - b);
    if (!p.value || !p.mirrored) continue;
    p.ok = *p.mirrored == *p.value * rep.sign;
    if (!p.ok) rep.pass = false;
    rep.probes.push_back(p);
  }
  return rep;
}

std::vector<std::int64_t> default_probes(const RootSystem& rs) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 1; b <= rs.coxeter_h + 3; ++b) out.push_back(b);
  return out;
}

std::vector<std::int64_t> predicted_zeros(const RootSystem& rs, int residue) {
  const int m = quasi_period(rs);
  std::set<std::int64_t> z;
  for (int e : rs.exponents) z.insert(-e);
  z.insert(1);
  z.insert(-rs.coxeter_h - 1);
  std::vector<std::int64_t> out;
  for (auto b : z)
    if (((b % m) + m) % m == residue) out.push_back(b);
  return out;
}

PolynomialQ expected_size_polynomial(const RootSystem& rs) {
  if (!rs.simply_laced()) throw std::invalid_argument("expected size polynomial needs a simply-laced type");
  PolynomialQ p = PolynomialQ::linear_root(1) * PolynomialQ::linear_root(-(rs.coxeter_h + 1));
  for (int e : rs.exponents) p = p * PolynomialQ::linear_root(-e);
  return p * (Rational(rs.rank) / 24 / Rational(rs.weyl_order));
}

ExpectedSizeReport verify_expected_size_polynomial(const RootSystem& rs, int jobs, const BigInt& max_points) {
  ExpectedSizeReport rep;
  rep.type = rs.rstype.name();
  rep.closed_form = expected_size_polynomial(rs);
  const bool big_e = rs.rstype.family == Family::E && rs.rank >= 7;
  if (big_e) {
    rep.pointwise_only = true;
    std::vector<std::int64_t> bs = rs.rank == 7 ? std::vector<std::int64_t>{5, 7, 11, 13}
                                                : std::vector<std::int64_t>{7, 11, 13};
    rep.pass = true;
    for (auto b : bs) {
      if (coweight_count(rs, b) > max_points) throw BudgetExceeded("pointwise check exceeds the point cap");
      bool ok = weighted_sum(rs, b, 1, false, Lattice::coroot, jobs) == rep.closed_form(Rational(b));
      rep.point_matches.emplace_back(b, ok);
      rep.pass = rep.pass && ok;
    }
    return rep;
  }
  QuasiFit fit = fit_quasipolynomial(rs, 1, Lattice::coroot, false, {}, jobs, max_points);
  rep.fits = fit.components;
  rep.pass = true;
  for (const auto& c : fit.components) {
    bool ok = c.poly == rep.closed_form;
    rep.residue_matches.emplace_back(c.spec.residue, ok);
    rep.pass = rep.pass && ok;
  }
  bool rho_in_coroot = is_integral(rs.rho_check);
  if (rho_in_coroot) {
    rep.reciprocity = reciprocity_check(rs, 1, fit.quasi, default_probes(rs));
    rep.pass = rep.pass && rep.reciprocity->pass;
  }
  return rep;
}

namespace {

Rational poly_value(std::initializer_list<std::int64_t> coeffs_high_first, std::int64_t n) {
  Rational v = 0;
  for (auto c : coeffs_high_first) v = v * Rational(n) + Rational(c);
  return v;
}

}  // namespace

std::optional<Rational> expected_leading_ratio(const RootSystem& rs, int k) {
  const std::int64_t n = rs.rank, h = rs.coxeter_h;
  const Rational nh(n * h);
  if (k == 0) return Rational(1);
  if (!rs.simply_laced()) return std::nullopt;
  if (k == 1) return rational(n, 24);
  if (k == 2) return nh / 1440;
  if (k == 3) return nh * Rational(2 * h - 3) / 60480;
  const Family fam = rs.rstype.family;
  if (fam == Family::A) {
    switch (k) {
      case 4: return nh * poly_value({19, -13, 4}, n) / 4838400;
      case 5: return nh * poly_value({23, -25, 12}, n) * Rational(2 * n - 1) / 95800320;
      case 6:
        return nh * poly_value({307561, -826062, 1048509, -647948, 155040}, n) / Rational(BigInt("4184557977600"));
      case 7:
        return nh * poly_value({15562, -64721, 129288, -142241, 82300, -19488}, n) /
               Rational(BigInt("1195587993600"));
      default: return std::nullopt;
    }
  }
  if (fam == Family::D) {
    switch (k) {
      case 4: return nh * poly_value({31, -99, 86}, n) / 2419200;
      case 5: return nh * poly_value({70, -365, 667, -426}, n) / 23950080;
      case 6:
        return nh * poly_value({859445, -6449250, 19050243, -26075294, 13852536}, n) /
               Rational(BigInt("523069747200"));
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

LeadingCoefficientReport leading_coefficient_checks(const RootSystem& rs, int k, int jobs, const BigInt& max_points) {
  LeadingCoefficientReport rep;
  rep.type = rs.rstype.name();
  rep.k = k;
  rep.residue = admissible_residues(rs).front();
  const bool centered = k >= 2;
  FitResult top = fit_component(make_fit_spec(rs, k, Lattice::coroot, rep.residue, centered), jobs, max_points);
  FitResult count = fit_component(make_fit_spec(rs, 0, Lattice::coroot, rep.residue), jobs, max_points);
  auto coeff = [](const PolynomialQ& p, int d) { return d < static_cast<int>(p.coeffs.size()) ? p.coeffs[d] : Rational(0); };
  rep.leading = coeff(top.poly, rs.rank + 2 * k);
  rep.count_leading = coeff(count.poly, rs.rank);
  if (rep.count_leading == 0) throw ConsistencyError("count polynomial has the wrong degree");
  rep.ratio = rep.leading / rep.count_leading;
  rep.expected = expected_leading_ratio(rs, k);
  if (!rep.expected) rep.grade = "none";
  else rep.grade = k <= 2 ? "theorem" : "conjecture";
  rep.match = rep.expected && *rep.expected == rep.ratio;
  return rep;
}

}  // namespace corelab
