#include "cli.hpp"

#include "corelab/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace corelab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command, what;
  std::string type;
  int rank = 0;
  std::optional<std::int64_t> b;
  std::string b_range;
  int k = 1;
  int trunc = 20;
  std::string lattice = "coroot";
  std::optional<int> residue;
  bool centered = false;
  int m = 1;
  std::optional<int> a;
  std::string stat = "auto";
  std::string format = "json";
  int jobs = 1;
  std::string max_points = "50000000";
  std::uint64_t seed = 1;
  int trials = 20;
};

int default_jobs() {
  if (const char* env = std::getenv("CORELAB_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

BigInt parse_count(const std::string& s) {
  if (s.find_first_of("eE.") != std::string::npos) {
    double d = std::stod(s);
    if (d < 0) throw UsageError("--max-points must be nonnegative");
    return BigInt(static_cast<long long>(d));
  }
  BigInt v(s);
  if (v < 0) throw UsageError("--max-points must be nonnegative");
  return v;
}

RootSystem system_of(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  if (o.rank == 0) throw UsageError("--rank is required");
  if (o.rank < 0) throw UsageError("--rank must be positive");
  return build_root_system(RootSystemType::parse(o.type, o.rank));
}

std::vector<std::int64_t> dilations(const Options& o) {
  if (o.b && !o.b_range.empty()) throw UsageError("give --b or --b-range, not both");
  if (o.b) {
    if (*o.b < 0) throw UsageError("--b must be nonnegative");
    return {*o.b};
  }
  if (o.b_range.empty()) throw UsageError("--b or --b-range is required");
  auto dots = o.b_range.find("..");
  if (dots == std::string::npos) throw UsageError("--b-range must look like LO..HI");
  std::int64_t lo = 0, hi = 0;
  try {
    lo = std::stoll(o.b_range.substr(0, dots));
    hi = std::stoll(o.b_range.substr(dots + 2));
  } catch (const std::exception&) {
    throw UsageError("--b-range must look like LO..HI");
  }
  if (lo < 0 || hi < lo) throw UsageError("--b-range must satisfy 0 <= LO <= HI");
  std::vector<std::int64_t> out;
  for (std::int64_t b = lo; b <= hi; ++b) out.push_back(b);
  return out;
}

// theorem paths: a single non-coprime b is refused, ranges skip them
std::vector<std::int64_t> coprime_dilations(const Options& o, const RootSystem& rs) {
  std::vector<std::int64_t> all = dilations(o), out;
  for (auto b : all)
    if (b >= 1 && gcd64(b, rs.coxeter_h) == 1) out.push_back(b);
  if (o.b && out.empty()) throw UsageError("b not coprime to Coxeter number");
  if (out.empty()) throw UsageError("no b in the range is coprime to the Coxeter number");
  return out;
}

void guard(const RootSystem& rs, std::int64_t b, const BigInt& cap) {
  BigInt est = coweight_count(rs, b);
  if (est > cap) throw BudgetExceeded("b = " + std::to_string(b) + " needs " + to_string(est) + " points, cap " + to_string(cap));
}

Json config_json(const Options& o) {
  Json c{{"command", o.command}};
  if (!o.what.empty()) c["check"] = o.what;
  if (!o.type.empty()) c["type"] = o.type;
  if (o.rank) c["rank"] = o.rank;
  if (o.b) c["b"] = *o.b;
  if (!o.b_range.empty()) c["b_range"] = o.b_range;
  c["k"] = o.k;
  c["lattice"] = o.lattice;
  if (o.residue) c["residue"] = *o.residue;
  c["centered"] = o.centered;
  c["trunc"] = o.trunc;
  c["m"] = o.m;
  if (o.a) c["a"] = *o.a;
  c["jobs"] = o.jobs;
  c["max_points"] = o.max_points;
  c["seed"] = o.seed;
  return c;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void emit(std::ostream& out, const std::string& format, const Json& doc) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto& r : doc.at("results"))
    for (auto it = r.begin(); it != r.end(); ++it)
      if (seen.insert(it.key()).second) cols.push_back(it.key());
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : doc.at("results")) {
    std::vector<std::string> row;
    for (const auto& c : cols) row.push_back(r.contains(c) ? cell(r.at(c)) : "");
    rows.push_back(row);
  }
  if (format == "csv") {
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << quote(cols[i]);
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    out << "\n";
  };
  line(cols);
  for (const auto& row : rows) line(row);
  out << "grade: " << doc.at("grade").get<std::string>() << "  verdict: " << doc.at("verdict").get<std::string>() << "\n";
}

struct Outcome {
  Json results = Json::array();
  std::string grade = "none";
  std::string verdict = "n/a";
  int code = pass;
};

Outcome cmd_enum(const Options& o, const BigInt& cap) {
  RootSystem rs = system_of(o);
  const Lattice lat = parse_lattice(o.lattice);
  if (o.stat != "auto" && o.stat != "size" && o.stat != "zise" && o.stat != "none")
    throw UsageError("--stat must be auto, size, zise or none");
  Outcome res;
  for (auto b : dilations(o)) {
    guard(rs, b, cap);
    const bool coprime = b >= 1 && gcd64(b, rs.coxeter_h) == 1;
    const bool zise_ok = coprime || rs.simply_laced();
    if (lat == Lattice::coroot && coprime) {
      if (o.stat == "zise") throw UsageError("cores carry size; zise lives on bA");
      const bool with_size = o.stat != "none";
      for (const auto& x : core_points_in_sommers(rs, b, o.jobs).points) {
        Json r{{"b", b}, {"region", "sommers"}, {"point", to_json(x)}};
        if (with_size) r["size"] = to_json(size_point(rs, x));
        if (rs.rstype.family == Family::A) r["core"] = to_json(core_from_coroot(rs, x).partition);
        res.results.push_back(r);
      }
      continue;
    }
    LatticePointSet pts = lat == Lattice::coroot ? coroot_points_in_bA(rs, b, o.jobs) : coweight_points_in_bA(rs, b, o.jobs);
    std::string stat = o.stat == "auto" ? (zise_ok ? "zise" : "none") : o.stat;
    if (stat == "zise" && !zise_ok) throw UsageError("b not coprime to Coxeter number");
    std::optional<IntegerQuadraticForm> form;
    if (stat == "zise") form = zise_form(rs, b);
    for (std::size_t i = 0; i < pts.count(); ++i) {
      Json r{{"b", b}, {"region", "alcove"}, {"point", to_json(pts.points[i])}, {"coweight", to_json(pts.coweights[i])}};
      if (stat == "zise") r["zise"] = to_json((*form)(pts.coweights[i]));
      if (stat == "size") r["size"] = to_json(size_point(rs, pts.points[i]));
      res.results.push_back(r);
    }
  }
  return res;
}

Outcome cmd_stat(const Options& o, const BigInt& cap) {
  RootSystem rs = system_of(o);
  if (o.k < 1 || o.k > 3) throw UsageError("--k must be 1, 2 or 3");
  Outcome res;
  for (auto b : coprime_dilations(o, rs)) {
    guard(rs, b, cap);
    Json r = to_json(moments(rs, b, o.k, o.jobs));
    r.erase("checks");
    r.erase("pass");
    res.results.push_back(r);
  }
  return res;
}

struct Tally {
  bool any_mismatch = false, any_match = false;
  void add(Verdict::Kind k) {
    if (k == Verdict::mismatch) any_mismatch = true;
    if (k == Verdict::match) any_match = true;
  }
  void add(bool ok) { add(ok ? Verdict::match : Verdict::mismatch); }
};

Outcome cmd_verify(const Options& o, const BigInt& cap) {
  static const std::set<std::string> known{"count", "max", "mean", "variance", "m3", "floor",
                                           "strange", "macdonald", "anderson", "genfun-A"};
  if (!known.count(o.what)) throw UsageError("unknown check '" + o.what + "'");
  Outcome res;
  res.grade = "theorem";
  Tally t;
  const std::string& w = o.what;

  if (w == "genfun-A") {
    int a = o.a ? *o.a : (o.type == "A" && o.rank >= 1 ? o.rank + 1 : 0);
    if (a < 2) throw UsageError("genfun-A needs --a or --type A --rank N");
    if (o.trunc < 0 || o.trunc > 60) throw UsageError("--trunc must be in 0..60 for brute force");
    IntSeries s = core_product_series(a, o.trunc);
    std::vector<BigInt> brute = core_counting_coefficients(a, o.trunc);
    bool ok = s.coeffs == brute;
    t.add(ok);
    res.results.push_back(Json{{"check", w}, {"a", a}, {"product", to_json(s)["coeffs"]}, {"match", ok}});
  } else {
    RootSystem rs = system_of(o);
    if (w == "strange") {
      Rational lhs = inner(rs, rs.rho, rs.rho) / Rational(2 * rs.dual_coxeter_g);
      Rational rhs = rational(static_cast<std::int64_t>(rs.rank) * (rs.coxeter_h + 1), 24);
      t.add(lhs == rhs);
      res.results.push_back(Json{{"check", w}, {"type", rs.rstype.name()}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"match", lhs == rhs}});
    } else if (w == "macdonald") {
      if (!rs.simply_laced()) throw UsageError("the Macdonald product needs a simply-laced type");
      IntSeries s = macdonald_series(rs, o.trunc);
      std::vector<BigInt> hist = size_histogram(rs, o.trunc);
      bool ok = s.coeffs == hist;
      t.add(ok);
      Json h = Json::array();
      for (const auto& c : hist) h.push_back(to_string(c));
      res.results.push_back(Json{{"check", w}, {"type", rs.rstype.name()}, {"product", to_json(s)["coeffs"]}, {"histogram", h}, {"match", ok}});
    } else if (w == "anderson") {
      if (rs.rstype.family != Family::A) throw UsageError("anderson needs type A");
      const int a = rs.rank + 1;
      for (auto b : coprime_dilations(o, rs)) {
        guard(rs, b, cap);
        auto cores = enumerate_simultaneous_cores(a, static_cast<int>(b));
        std::set<Partition> distinct;
        bool all_cores = true;
        for (const auto& c : cores) {
          distinct.insert(c.partition);
          all_cores = all_cores && is_a_core(c.partition, a) && is_a_core(c.partition, static_cast<int>(b));
        }
        Rational expected = Rational(binomial(a + b, b)) / Rational(a + b);
        bool ok = all_cores && distinct.size() == cores.size() && Rational(cores.size()) == expected;
        t.add(ok);
        res.results.push_back(Json{{"check", w}, {"a", a}, {"b", b}, {"count", cores.size()}, {"closed_form", to_string(expected)}, {"match", ok}});
      }
    } else if (w == "floor") {
      if (!rs.simply_laced()) throw UsageError("floor identities need a simply-laced type");
      for (auto b : coprime_dilations(o, rs)) {
        FloorIdentityReport r = floor_identity_check(rs, b);
        t.add(r.pass());
        Json j = to_json(r);
        j["check"] = w;
        res.results.push_back(j);
      }
    } else {
      const int k = w == "variance" ? 2 : w == "m3" ? 3 : 1;
      for (auto b : coprime_dilations(o, rs)) {
        guard(rs, b, cap);
        MomentReport r = moments(rs, b, k, o.jobs);
        const Verdict& v = w == "count"      ? r.count_verdict
                           : w == "max"      ? r.max_verdict
                           : w == "mean"     ? r.mean_verdict
                           : w == "variance" ? r.variance_verdict
                                             : r.m3_verdict;
        Verdict::Kind kind = v.kind;
        if (w == "max" && kind == Verdict::match && !r.unique_max) kind = Verdict::mismatch;
        if (r.two_way_agree && !*r.two_way_agree) kind = Verdict::mismatch;
        t.add(kind);
        const Rational value = w == "count"      ? Rational(r.count)
                               : w == "max"      ? r.max
                               : w == "mean"     ? r.mean
                               : w == "variance" ? r.m2
                                                 : r.m3;
        const std::optional<Rational> closed = w == "count"      ? std::optional<Rational>(r.closed_count)
                                               : w == "max"      ? r.closed_max
                                               : w == "mean"     ? r.closed_mean
                                               : w == "variance" ? r.closed_variance
                                                                 : r.closed_m3;
        Json j{{"check", w}, {"type", r.type}, {"b", b}, {"value", to_string(value)},
               {"closed_form", closed ? Json(to_string(*closed)) : Json()}, {"verdict", to_string(kind)}};
        if (!v.note.empty()) j["note"] = v.note;
        if (w == "max") j["multiplicity"] = r.max_multiplicity;
        res.results.push_back(j);
      }
    }
  }
  if (t.any_mismatch) {
    res.verdict = "mismatch";
    res.code = mismatch;
  } else {
    res.verdict = t.any_match ? "pass" : "no_closed_form";
  }
  return res;
}

Outcome cmd_fit(const Options& o, const BigInt& cap) {
  RootSystem rs = system_of(o);
  if (!rs.simply_laced()) throw UsageError("weighted fits need a simply-laced type");
  if (o.k < 0) throw UsageError("--k must be nonnegative");
  const Lattice lat = parse_lattice(o.lattice);
  std::vector<int> residues;
  if (o.residue) {
    if (!admissible_residue(rs, *o.residue)) throw UsageError("residue class not coprime to Coxeter number");
    residues.push_back(*o.residue);
  }
  Outcome res;
  res.grade = "theorem";
  QuasiFit fit;
  try {
    fit = fit_quasipolynomial(rs, o.k, lat, o.centered, residues, o.jobs, cap);
  } catch (const HoldoutMismatch& e) {
    res.results.push_back(Json{{"error", e.what()}});
    res.verdict = "mismatch";
    res.code = mismatch;
    return res;
  }
  bool ok = true;
  Json r{{"type", rs.rstype.name()}, {"quasipolynomial", to_json(fit.quasi)}};
  Json comps = Json::array();
  for (const auto& c : fit.components) comps.push_back(to_json(c));
  r["components"] = comps;
  if (lat == Lattice::coweight || is_integral(rs.rho_check)) {
    ReciprocityReport rec = reciprocity_check(rs, o.k, fit.quasi, default_probes(rs));
    r["reciprocity"] = to_json(rec);
    ok = ok && rec.pass;
  }
  if (o.k == 1 && !o.centered && lat == Lattice::coweight) {
    Json zeros = Json::array();
    for (const auto& c : fit.components)
      for (auto z : predicted_zeros(rs, c.spec.residue)) {
        bool zero = c.poly(Rational(z)) == 0;
        ok = ok && zero;
        zeros.push_back(Json{{"b", z}, {"zero", zero}});
      }
    r["zeros"] = zeros;
  }
  if (o.k == 1 && !o.centered && lat == Lattice::coroot) {
    PolynomialQ expected = expected_size_polynomial(rs);
    bool match = true;
    for (const auto& c : fit.components) match = match && c.poly == expected;
    r["expected_size_polynomial"] = to_string(expected);
    r["expected_size_match"] = match;
    ok = ok && match;
  }
  res.results.push_back(r);
  res.verdict = ok ? "pass" : "mismatch";
  res.code = ok ? pass : mismatch;
  return res;
}

Outcome cmd_series(const Options& o) {
  Outcome res;
  if (o.trunc < 0) throw UsageError("--trunc must be nonnegative");
  if (o.what == "core-product") {
    int a = o.a ? *o.a : (o.type == "A" && o.rank >= 1 ? o.rank + 1 : 0);
    if (a < 2) throw UsageError("core-product needs --a or --type A --rank N");
    res.results.push_back(Json{{"series", o.what}, {"a", a}, {"coeffs", to_json(core_product_series(a, o.trunc))["coeffs"]}});
  } else if (o.what == "macdonald") {
    RootSystem rs = system_of(o);
    if (!rs.simply_laced()) throw UsageError("the Macdonald product needs a simply-laced type");
    res.results.push_back(Json{{"series", o.what}, {"type", rs.rstype.name()}, {"coeffs", to_json(macdonald_series(rs, o.trunc))["coeffs"]}});
  } else if (o.what == "charpoly") {
    RootSystem rs = system_of(o);
    IntPolynomial f = coxeter_char_poly(rs);
    res.results.push_back(Json{{"series", o.what}, {"type", rs.rstype.name()}, {"polynomial", to_string(f)}, {"coeffs", to_json(f)}});
  } else if (o.what == "ellipsoid") {
    RootSystem rs = system_of(o);
    Json h = Json::array();
    for (const auto& c : size_histogram(rs, o.trunc)) h.push_back(to_string(c));
    res.results.push_back(Json{{"series", o.what}, {"type", rs.rstype.name()}, {"coeffs", h}});
  } else {
    throw UsageError("unknown series '" + o.what + "'");
  }
  return res;
}

Outcome cmd_experiment(const Options& o, const BigInt& cap) {
  Outcome res;
  res.grade = "conjecture";
  bool consistent = true;
  if (o.what == "weak-order") {
    RootSystem rs = system_of(o);
    for (auto b : coprime_dilations(o, rs)) {
      guard(rs, b, cap);
      WeakOrderReport r = experiment_weak_order_maximality(rs, b);
      consistent = consistent && r.contained == r.total;
      res.results.push_back(to_json(r));
    }
  } else if (o.what == "cn-fuss") {
    if (o.rank < 2) throw UsageError("cn-fuss needs --rank >= 2");
    if (o.m < 1) throw UsageError("--m must be positive");
    RootSystem cn = build_root_system(Family::C, o.rank);
    guard(cn, static_cast<std::int64_t>(o.m) * cn.coxeter_h + 1, cap);
    FussReport r = experiment_cn_fuss(o.rank, o.m, o.jobs);
    consistent = r.consistent;
    res.results.push_back(to_json(r));
  } else if (o.what == "top-coeff") {
    RootSystem rs = system_of(o);
    if (!rs.simply_laced()) throw UsageError("top-coeff needs a simply-laced type");
    if (o.k < 1) throw UsageError("--k must be positive");
    LeadingCoefficientReport r = leading_coefficient_checks(rs, o.k, o.jobs, cap);
    res.grade = r.grade == "theorem" ? "theorem" : "conjecture";
    consistent = r.match;
    res.results.push_back(to_json(r));
  } else if (o.what == "cn-weighting") {
    if (o.rank < 2) throw UsageError("cn-weighting needs --rank >= 2");
    if (o.trials < 0) throw UsageError("--trials must be nonnegative");
    WeightingReport r = experiment_cn_selfconjugate_weighting(o.rank, o.trials, o.seed);
    consistent = r.agreements == r.cases.size();
    for (const auto& c : r.cases) {
      Json j = to_json(c);
      j["n"] = r.n;
      res.results.push_back(j);
    }
  } else {
    throw UsageError("unknown experiment '" + o.what + "'");
  }
  res.verdict = consistent ? "consistent" : "counterexample";
  return res;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "root system family A-G");
  sub->add_option("--rank", o.rank, "rank");
  sub->add_option("--b", o.b, "dilation");
  sub->add_option("--b-range", o.b_range, "dilations LO..HI");
  sub->add_option("--k", o.k, "moment or weight exponent");
  sub->add_option("--trunc", o.trunc, "series truncation");
  sub->add_option("--lattice", o.lattice, "coweight or coroot")->check(CLI::IsMember({"coweight", "coroot"}));
  sub->add_option("--residue", o.residue, "residue class of b");
  sub->add_flag("--centered", o.centered, "weight (zise - mean)^k");
  sub->add_option("--m", o.m, "Fuss parameter");
  sub->add_option("--a", o.a, "core modulus");
  sub->add_option("--stat", o.stat, "auto, size, zise or none");
  sub->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--max-points", o.max_points, "enumeration budget");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--trials", o.trials, "random cases");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_jobs();
  CLI::App app{"corelab: simultaneous cores and affine Weyl groups, exactly"};
  app.require_subcommand(1);
  auto* en = app.add_subcommand("enum", "list lattice points or cores");
  auto* st = app.add_subcommand("stat", "moments of size over cores");
  auto* ve = app.add_subcommand("verify", "check a closed form against enumeration");
  auto* fi = app.add_subcommand("fit", "weighted Ehrhart quasipolynomial");
  auto* se = app.add_subcommand("series", "power series and polynomials");
  auto* ex = app.add_subcommand("experiment", "conjecture experiments");
  for (auto* s : {en, st, ve, fi, se, ex}) add_common(s, o);
  ve->add_option("check", o.what, "count|max|mean|variance|m3|floor|strange|macdonald|anderson|genfun-A")->required();
  se->add_option("series", o.what, "core-product|macdonald|charpoly|ellipsoid")->required();
  ex->add_option("experiment", o.what, "weak-order|cn-fuss|top-coeff|cn-weighting")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return pass;
  } catch (const CLI::ParseError& e) {
    err << "corelab: " << e.what() << "\n";
    return usage;
  }
  for (auto* s : {en, st, ve, fi, se, ex})
    if (s->parsed()) o.command = s->get_name();

  try {
    const BigInt cap = parse_count(o.max_points);
    Outcome res;
    if (o.command == "enum") res = cmd_enum(o, cap);
    else if (o.command == "stat") res = cmd_stat(o, cap);
    else if (o.command == "verify") res = cmd_verify(o, cap);
    else if (o.command == "fit") res = cmd_fit(o, cap);
    else if (o.command == "series") res = cmd_series(o);
    else res = cmd_experiment(o, cap);
    emit(out, o.format, envelope(config_json(o), res.results, res.grade, res.verdict));
    return res.code;
  } catch (const UsageError& e) {
    err << "corelab: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "corelab: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "corelab: " << e.what() << "\n";
    return usage;
  } catch (const BudgetExceeded& e) {
    err << "corelab: budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    err << "corelab: " << e.what() << "\n";
    return mismatch;
  }
}

}  // namespace corelab::cli
