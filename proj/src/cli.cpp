#include "dcrit/cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "dcrit/coalgebra.hpp"
#include "dcrit/cohomology.hpp"
#include "dcrit/errors.hpp"
#include "dcrit/groebner.hpp"
#include "dcrit/koszul.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/polyvector.hpp"
#include "dcrit/report.hpp"
#include "dcrit/suite.hpp"
#include "dcrit/symplectic.hpp"

namespace dcrit {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool no_timing = false;

  std::string vars;
  std::string section;
  std::string weights;
  std::string f;
  std::string alpha;
  std::string beta = "0";
  unsigned cutoff = 12;
  std::size_t rank = 0;
  std::size_t n = 2;
  unsigned max_deg = 3;
  unsigned trials = 200;
  std::uint64_t seed = 0;
  bool milnor = false;
  bool pairing = false;
  bool obstruction = false;
  bool hilbert = false;
  bool expect_holds = false;
};

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string join_polys(const std::vector<Poly>& ps) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(p.to_string());
  return join(parts);
}

std::vector<unsigned> weights_or_unit(const Options& o, const VarList& vars) {
  if (o.weights.empty()) return std::vector<unsigned>(vars->size(), 1);
  auto w = parse_weights(o.weights);
  if (w.size() != vars->size())
    throw DomainError("expected " + std::to_string(vars->size()) + " weights, got " + std::to_string(w.size()));
  return w;
}

std::map<int, std::vector<std::size_t>> hilbert_map(const HilbertTable& t) {
  std::map<int, std::vector<std::size_t>> h;
  for (std::size_t k = 0; k < t.rows.size(); ++k) h[-static_cast<int>(k)] = t.rows[k];
  return h;
}

json ranks_json(const KoszulComplex& k) {
  json r = json::object();
  for (int p = k.lowest_degree(); p <= 0; ++p) r[std::to_string(p)] = k.component_rank(p);
  return r;
}

CheckResult verdict(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), ok ? Status::Pass : Status::Fail, std::nullopt, std::move(detail), false};
}

std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m) { return m.to_strings(); }

void cmd_zero(const Options& o, Report& r) {
  auto vars = parse_vars(o.vars);
  auto comps = parse_poly_list(o.section, vars);
  auto weights = weights_or_unit(o, vars);
  r.inputs = {{"vars", join(*vars)}, {"section", join_polys(comps)}, {"weights", std::to_string(weights.size())},
              {"cutoff", std::to_string(o.cutoff)}};
  {
    std::vector<std::string> ws;
    for (auto w : weights) ws.push_back(std::to_string(w));
    r.inputs["weights"] = join(ws, ",");
  }
  auto k = build_koszul(vars, comps.size(), Section{comps});
  r.extra["ranks"] = ranks_json(k);
  r.checks.push_back(verdict("d squared", check_d_squared(k)));
  auto aug = augmentation(k);
  r.checks.push_back(verdict("augmentation", aug.composite_vanishes));
  r.extra["quotient_dimension"] = quotient_dimension(aug.target).to_string();
  auto table = hilbert_table(k, weights, o.cutoff);
  r.hilbert = hilbert_map(table);
  r.checks.push_back(verdict("euler characteristic", table.euler_consistent));
  auto reg = is_regular_sequence(k, weights, o.cutoff);
  r.extra["regular"] = reg.regular;
  r.extra["regular_caveat"] = reg.caveat();
  if (reg.witness)
    r.extra["regular_witness"] = "H^" + std::to_string(reg.witness->first) + " at weight " +
                                 std::to_string(reg.witness->second);
}

void cmd_fancy(const Options& o, Report& r) {
  auto vars = parse_vars(o.vars);
  if (o.rank == 0) throw DomainError("--rank must be at least 1");
  r.inputs = {{"vars", join(*vars)}, {"rank", std::to_string(o.rank)}, {"cutoff", std::to_string(o.cutoff)}};
  auto fk = build_fancy_koszul(vars, o.rank);
  r.inputs["fiber_vars"] = join(*fk.vars());
  r.extra["ranks"] = ranks_json(fk.complex());
  r.checks.push_back(verdict("d squared", check_d_squared(fk)));
  auto table = hilbert_table(fk, o.cutoff);
  r.hilbert = hilbert_map(table);

  std::optional<std::string> bad;
  for (std::size_t k = 1; k < table.rows.size() && !bad; ++k)
    for (unsigned w = 0; w <= o.cutoff && !bad; ++w)
      if (table.rows[k][w] != 0) bad = "H^-" + std::to_string(k) + " nonzero at weight " + std::to_string(w);
  const auto n = vars->size();
  for (unsigned w = 0; w <= o.cutoff && !bad; ++w) {
    Integer expected = 0;
    if (n == 0) expected = w == 0 ? 1 : 0;
    else mpz_bin_uiui(expected.get_mpz_t(), w + n - 1, n - 1);
    if (table.rows[0][w] != expected.get_ui())
      bad = "H^0 at weight " + std::to_string(w) + " is " + std::to_string(table.rows[0][w]) + ", expected " +
            expected.get_str();
  }
  CheckResult cert = verdict("resolution certificate", !bad, "weights <= " + std::to_string(o.cutoff));
  if (bad) cert.counterexample = *bad;
  r.checks.push_back(std::move(cert));

  if (!o.section.empty()) {
    auto comps = parse_poly_list(o.section, vars);
    if (comps.size() != o.rank) throw DomainError("--section must have --rank components");
    r.inputs["section"] = join_polys(comps);
    auto bc = base_change_compare(fk, Section{comps});
    CheckResult c = verdict("base change", bc.equal);
    if (bc.witness)
      c.counterexample = "degree " + std::to_string(bc.witness->degree) + " entry (" +
                         std::to_string(bc.witness->row) + ", " + std::to_string(bc.witness->col) +
                         "): " + bc.witness->substituted + " vs " + bc.witness->direct;
    r.checks.push_back(std::move(c));
  }
}

void cmd_crit(const Options& o, Report& r) {
  auto vars = parse_vars(o.vars);
  auto f = parse_poly(o.f, vars);
  r.inputs = {{"vars", join(*vars)}, {"f", f.to_string()}};
  const bool any = o.milnor || o.pairing || o.obstruction || o.hilbert;
  if (o.milnor || !any) r.milnor = milnor_number(f).to_string();
  if (o.pairing) {
    auto p = minus_one_pairing(f);
    r.pairing = PairingSummary{matrix_strings(p.hessian), p.symmetric, p.nondegenerate};
    r.checks.push_back(verdict("pairing symmetric", p.symmetric));
  }
  if (o.obstruction) {
    auto ob = obstruction_theory(f);
    json j;
    j["jacobian_ideal"] = [&] {
      std::vector<std::string> g;
      for (const auto& p : ob.truncation_ideal.generators()) g.push_back(p.to_string());
      return g;
    }();
    j["truncation_dimension"] = ob.truncation_dimension.to_string();
    j["restricted_differential"] = matrix_strings(ob.restricted.differential);
    j["symmetric"] = ob.symmetric;
    if (ob.cohomology) j["cohomology"] = {{"0", ob.cohomology->h0}, {"1", ob.cohomology->h1}};
    if (ob.hessian_invertible) j["hessian_invertible"] = *ob.hessian_invertible;
    r.extra["obstruction"] = j;
    r.checks.push_back(verdict("obstruction form symmetric", ob.symmetric));
  }
  if (o.hilbert) {
    auto weights = weights_or_unit(o, vars);
    auto jac = jacobian_ideal(f);
    auto k = build_koszul(vars, jac.size(), Section{jac});
    r.inputs["cutoff"] = std::to_string(o.cutoff);
    auto table = hilbert_table(k, weights, o.cutoff);
    r.hilbert = hilbert_map(table);
    r.checks.push_back(verdict("euler characteristic", table.euler_consistent));
  }
}

void add_report_checks(Report& r, const CheckReport& c) {
  for (const auto& x : c.checks) r.checks.push_back(x);
}

void cmd_check(const std::string& which, const Options& o, Report& r) {
  r.command = "check " + which;
  if (which == "gerstenhaber") {
    r.inputs = {{"n", std::to_string(o.n)}, {"max_deg", std::to_string(o.max_deg)},
                {"trials", std::to_string(o.trials)}, {"seed", std::to_string(o.seed)}};
    add_report_checks(r, check_gerstenhaber(o.n, o.max_deg, o.trials, o.seed));
  } else if (which == "bv") {
    r.inputs = {{"n", std::to_string(o.n)}, {"trials", std::to_string(o.trials)}, {"seed", std::to_string(o.seed)}};
    add_report_checks(r, check_bv(o.n, o.trials, o.seed));
  } else if (which == "coalgebra") {
    const std::size_t m = o.rank == 0 ? 2 : o.rank;
    r.inputs = {{"rank", std::to_string(m)}, {"trials", std::to_string(o.trials)}, {"seed", std::to_string(o.seed)}};
    add_report_checks(r, check_coalgebra(m, o.trials, o.seed));
  } else if (which == "compat") {
    auto vars = parse_vars(o.vars);
    if (vars->empty()) throw DomainError("--vars must name at least one variable");
    auto alpha = parse_one_form(o.alpha, vars);
    r.inputs = {{"vars", join(*vars)}, {"alpha", alpha.to_string()}, {"trials", std::to_string(o.trials)},
                {"seed", std::to_string(o.seed)}, {"expect_holds", o.expect_holds ? "true" : "false"}};
    auto c = check_bracket_compat(alpha, o.trials, o.seed);
    r.extra["holds"] = c.holds;
    r.extra["closed"] = c.is_closed;
    if (c.discrepancy) r.extra["discrepancy"] = c.discrepancy->to_string();
    for (auto x : c.checks.checks) {
      if (!o.expect_holds) x.informational = true;
      r.checks.push_back(std::move(x));
    }
  } else if (which == "d2") {
    auto vars = parse_vars(o.vars);
    auto comps = parse_poly_list(o.section, vars);
    r.inputs = {{"vars", join(*vars)}, {"section", join_polys(comps)}};
    auto k = build_koszul(vars, comps.size(), Section{comps});
    r.checks.push_back(verdict("d squared", check_d_squared(k)));
    auto fk = build_fancy_koszul(vars, comps.size());
    r.checks.push_back(verdict("fancy d squared", check_d_squared(fk)));
  }
}

void cmd_lagr(const Options& o, Report& r) {
  auto vars = parse_vars(o.vars);
  if (vars->empty()) throw DomainError("--vars must name at least one variable");
  auto alpha = parse_one_form(o.alpha, vars);
  auto beta = parse_one_form(o.beta, vars);
  r.inputs = {{"vars", join(*vars)}, {"alpha", alpha.to_string()}, {"beta", beta.to_string()}};
  auto li = intersect_graph_lagrangians(alpha, beta);
  r.extra["section"] = li.complex.section().to_string();
  json diffs = json::object();
  for (int p = li.complex.lowest_degree(); p < 0; ++p)
    diffs[std::to_string(p)] = matrix_strings(li.complex.differential_matrix(p));
  r.extra["differentials"] = diffs;
  r.pairing = PairingSummary{matrix_strings(li.pairing.hessian), li.pairing.symmetric, li.pairing.nondegenerate};
  r.checks.push_back(verdict("d squared", check_d_squared(li.complex)));
  r.checks.push_back(verdict("pairing symmetric", li.pairing.symmetric));
}

void cmd_suite(const Options& o, Report& r) {
  r.inputs = {{"seed", std::to_string(o.seed)}};
  std::map<std::string, double> times;
  for (auto& c : run_suite(o.seed)) {
    char key[8];
    std::snprintf(key, sizeof key, "%02d", c.id);
    times[std::string("criterion ") + key] = c.seconds * 1000;
    r.checks.push_back(std::move(c.result));
  }
  if (!o.no_timing) r.timing = times;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived critical loci: Koszul complexes, polyvector brackets and checks", "dcrit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Print the report as JSON");
    sub->add_flag("--no-timing", o.no_timing, "Omit timing data");
  };
  common(&app);
  app.fallthrough();

  auto* zero = app.add_subcommand("zero", "Koszul complex of a section and its cohomology");
  zero->add_option("--vars", o.vars, "Comma-separated variables");
  zero->add_option("--section", o.section, "Comma-separated section components")->required();
  zero->add_option("--weights", o.weights, "Positive variable weights");
  zero->add_option("--cutoff", o.cutoff, "Largest weight computed");

  auto* fancy = app.add_subcommand("fancy", "Fancy Koszul complex and its resolution certificate");
  fancy->add_option("--vars", o.vars, "Comma-separated base variables");
  fancy->add_option("--rank", o.rank, "Rank of the bundle")->required();
  fancy->add_option("--cutoff", o.cutoff, "Largest weight computed");
  fancy->add_option("--section", o.section, "Section to compare after base change");

  auto* crit = app.add_subcommand("crit", "Derived critical locus of a function");
  crit->add_option("--vars", o.vars, "Comma-separated variables");
  crit->add_option("-f", o.f, "Function")->required();
  crit->add_flag("--milnor", o.milnor, "Milnor number");
  crit->add_flag("--pairing", o.pairing, "Shifted symplectic pairing");
  crit->add_flag("--obstruction", o.obstruction, "Truncated obstruction theory");
  crit->add_flag("--hilbert", o.hilbert, "Hilbert table of the Koszul complex of df");
  crit->add_option("--weights", o.weights, "Positive variable weights");
  crit->add_option("--cutoff", o.cutoff, "Largest weight computed");

  auto* check = app.add_subcommand("check", "Randomized property checks");
  check->require_subcommand(1);
  std::string which;
  for (const char* name : {"gerstenhaber", "bv", "coalgebra", "compat", "d2"}) {
    auto* s = check->add_subcommand(name);
    s->add_option("--trials", o.trials, "Number of random trials");
    s->add_option("--seed", o.seed, "Random seed");
    s->callback([&which, name] { which = name; });
    common(s);
    const std::string n = name;
    if (n == "gerstenhaber" || n == "bv") s->add_option("--n", o.n, "Number of variables")->check(CLI::Range(1, 8));
    if (n == "gerstenhaber") s->add_option("--max-deg", o.max_deg, "Maximal coefficient degree");
    if (n == "coalgebra") s->add_option("--rank", o.rank, "Rank of the bundle")->check(CLI::Range(1, 8));
    if (n == "compat") {
      s->add_option("--vars", o.vars, "Comma-separated variables");
      s->add_option("--alpha", o.alpha, "1-form, e.g. y*d_x")->required();
      s->add_flag("--expect-holds", o.expect_holds, "Fail when the identity does not hold");
    }
    if (n == "d2") {
      s->add_option("--vars", o.vars, "Comma-separated variables");
      s->add_option("--section", o.section, "Comma-separated section components")->required();
    }
  }

  auto* lagr = app.add_subcommand("lagr", "Intersection of two graph Lagrangians");
  lagr->add_option("--vars", o.vars, "Comma-separated variables");
  lagr->add_option("--alpha", o.alpha, "Closed 1-form")->required();
  lagr->add_option("--beta", o.beta, "Closed 1-form (default 0)");

  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--seed", o.seed, "Random seed");

  for (auto* s : {zero, fancy, crit, lagr, suite}) common(s);

  std::vector<std::string> argv_store{"dcrit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  Report r;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (zero->parsed()) r.command = "zero", cmd_zero(o, r);
    else if (fancy->parsed()) r.command = "fancy", cmd_fancy(o, r);
    else if (crit->parsed()) r.command = "crit", cmd_crit(o, r);
    else if (check->parsed()) cmd_check(which, o, r);
    else if (lagr->parsed()) r.command = "lagr", cmd_lagr(o, r);
    else if (suite->parsed()) r.command = "suite", cmd_suite(o, r);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!o.no_timing) {
    if (!r.timing) r.timing.emplace();
    (*r.timing)["total"] = ms;
  } else {
    r.timing.reset();
  }

  if (o.json) out << to_json(r).dump(2) << '\n';
  else out << to_text(r);
  return r.all_passed() ? 0 : 1;
}

}  // namespace dcrit
