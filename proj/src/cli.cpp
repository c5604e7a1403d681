#include "lefschetz/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lefschetz/acceptance.hpp"
#include "lefschetz/aci.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/ideal_parser.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/linear_forms.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

using nlohmann::json;

void to_json(json &j, const Report &r) {
  j = json{{"command", r.command},
           {"result", r.result},
           {"seed", r.seed},
           {"version", r.version}};
}

void from_json(const json &j, Report &r) {
  j.at("command").get_to(r.command);
  r.result = j.at("result");
  j.at("seed").get_to(r.seed);
  j.at("version").get_to(r.version);
}

namespace {

// Raised for bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result;
  int code = kExitOk;
  std::uint64_t seed = 0;
};

auto big(const BigInt &n) -> std::string { return n.get_str(); }

auto ideal_json(const IdealExpr &expr) -> json {
  json gens = json::array();
  for (const auto &g : expr.generators)
    gens.push_back(g.to_string(expr.variables));
  return {{"variables", expr.variables}, {"generators", gens}, {"text", expr.to_string()}};
}

auto factorization_json(const Factorization &f) -> json {
  json primes = json::array();
  for (const auto &[p, e] : f.primes)
    primes.push_back({{"prime", big(p)}, {"exponent", e}});
  json j{{"primes", primes}, {"text", f.to_string()}};
  j["unfactored_cofactor"] = f.unfactored_cofactor ? json(big(*f.unfactored_cofactor)) : json();
  return j;
}

auto verdict_json(const ProbabilisticVerdict &v) -> json {
  json evidence = json::array();
  for (const auto &e : v.evidence)
    evidence.push_back({{"source_degree", e.source_degree},
                        {"source_dim", e.source_dim},
                        {"target_dim", e.target_dim},
                        {"best_rank", e.best_rank},
                        {"restricted_dim", e.restricted_dim},
                        {"expected_restricted_dim", e.expected_restricted_dim},
                        {"certified", e.certified}});
  return {{"holds", v.wlp_holds},
          {"status", to_string(v.status)},
          {"trials", v.trials},
          {"successes", v.successes},
          {"hilbert", v.hilbert.values},
          {"evidence", evidence}};
}

auto cmd_hilbert(const std::string &text) -> Outcome {
  const auto expr = parse_ideal(text);
  const auto ideal = expr.to_ideal();
  const auto h = ideal.hilbert_function();
  const auto socle = ideal.socle_profile();
  json monomials = json::array();
  for (const auto &m : socle.socle_monomials)
    monomials.push_back(m.to_string(expr.variables));
  return {{{"ideal", ideal_json(expr)},
           {"hilbert", h.values},
           {"socle_degree", h.socle_degree()},
           {"length", h.total()},
           {"socle",
            {{"monomials", monomials},
             {"degrees", socle.socle_degrees},
             {"type", socle.cm_type},
             {"level", socle.is_level}}}}};
}

auto cmd_lefschetz(const std::string &text, Property property, std::uint64_t p) -> Outcome {
  const auto expr = parse_ideal(text);
  const auto ideal = expr.to_ideal();
  const auto report = property == Property::WLP ? decide_wlp(ideal, p) : decide_slp(ideal, p);
  json failures = json::array();
  for (const auto &f : report.failures)
    failures.push_back({{"source_degree", f.source_degree},
                        {"power", f.power},
                        {"kind", to_string(f.kind)}});
  json ranks = json::array();
  for (const auto &r : report.ranks)
    ranks.push_back({{"source_degree", r.source_degree},
                     {"power", r.power},
                     {"rank", r.rank},
                     {"source_dim", r.source_dim},
                     {"target_dim", r.target_dim}});
  return {{{"ideal", ideal_json(expr)},
           {"property", to_string(report.property)},
           {"characteristic", report.characteristic},
           {"holds", report.holds},
           {"hilbert", ideal.hilbert_function().values},
           {"failures", failures},
           {"ranks", ranks}},
          report.holds ? kExitOk : kExitPropertyFails};
}

auto cmd_badprimes(const std::string &text) -> Outcome {
  const auto expr = parse_ideal(text);
  const auto cert = bad_primes(expr.to_ideal());
  json primes = json::array();
  for (const auto &p : cert.primes)
    primes.push_back(big(p));
  json sources = json::array();
  for (const auto &s : cert.candidate_source)
    sources.push_back({{"source_degree", s.source_degree},
                       {"minor", big(s.minor)},
                       {"factorization", factorization_json(s.factorization)}});
  json evidence = json::object();
  for (const auto &[p, list] : cert.evidence) {
    json rows = json::array();
    for (const auto &e : list)
      rows.push_back({{"source_degree", e.source_degree},
                      {"rank", e.rank},
                      {"expected_rank", e.expected_rank}});
    evidence[big(p)] = rows;
  }
  json result{{"ideal", ideal_json(expr)},
              {"primes", primes},
              {"count", cert.primes.size()},
              {"minors", sources},
              {"evidence", evidence}};
  result["unresolved_cofactor"] =
      cert.unresolved_cofactor ? json(big(*cert.unresolved_cofactor)) : json();
  return {result};
}

auto cmd_aci(const std::vector<unsigned> &params, const std::string &figure) -> Outcome {
  if (params.size() != 6)
    throw UsageError("--params takes six values a,b,c,alpha,beta,gamma");
  const auto d = aci_data(params[0], params[1], params[2], params[3], params[4], params[5]);
  json result{{"params", params},
              {"s", d.s},
              {"A", d.A},
              {"B", d.B},
              {"C", d.C},
              {"M", d.M},
              {"conditions", d.conditions},
              {"conditions_met", d.all_conditions()}};
  int code = kExitOk;
  if (d.all_conditions()) {
    const BigInt det_n = determinant(build_N(d));
    const BigInt det_z = determinant(build_Z(d));
    result["det_N"] = big(det_n);
    result["det_Z"] = big(det_z);
    result["abs_dets_equal"] = abs(det_n) == abs(det_z);
    result["factorization"] = det_z == 0 ? json() : factorization_json(factor(det_z));
    result["wlp_char0"] = det_z != 0;
    if (det_z == 0)
      code = kExitPropertyFails;
  }
  if (!figure.empty()) {
    const auto g = region_graph(d);
    std::ofstream file(figure);
    if (!file)
      throw UsageError("cannot write " + figure);
    file << region_svg(g, find_perfect_matching(g));
    result["figure"] = figure;
  }
  return {result, code};
}

auto cmd_froberg(std::size_t r, const std::vector<unsigned> &degrees, std::size_t length)
    -> Outcome {
  const auto series = froberg_prediction(r, degrees, length);
  return {{{"vars", r},
           {"degrees", degrees},
           {"values", series.values.values},
           {"terminated", series.terminated}}};
}

auto cmd_powers(std::size_t r, const std::vector<unsigned> &exponents, std::uint64_t seed,
                unsigned trials, std::int64_t bound) -> Outcome {
  const auto cfg = sample_config(r, exponents, seed, bound);
  const auto v = wlp_powers(cfg, trials);
  json forms = json::array();
  for (const auto &f : cfg.forms) {
    json row = json::array();
    for (const auto &c : f)
      row.push_back(big(c));
    forms.push_back(row);
  }
  json result = verdict_json(v);
  result["vars"] = r;
  result["exponents"] = exponents;
  result["forms"] = forms;
  result["coefficient_bound"] = bound;
  const bool fails = !v.wlp_holds && v.status == VerdictStatus::Probable;
  return {result, fails ? kExitPropertyFails : kExitOk, seed};
}

auto cmd_seq(const std::string &check, const std::vector<std::int64_t> &values) -> Outcome {
  bool holds = false;
  if (check == "unimodal")
    holds = is_unimodal(values);
  else if (check == "O")
    holds = is_O_sequence(values);
  else if (check == "SI")
    holds = is_SI_sequence(values);
  else
    holds = wlp_hilbert_shape(values);
  return {{{"check", check}, {"values", values}, {"holds", holds}},
          holds ? kExitOk : kExitPropertyFails};
}

auto criterion_json(const CriterionResult &r) -> json {
  return {{"id", r.id},
          {"title", r.title},
          {"passed", r.passed},
          {"checks", r.checks},
          {"seconds", r.seconds},
          {"time_limit_seconds", r.time_limit_seconds},
          {"detail", r.detail}};
}

auto criterion_line(const CriterionResult &r) -> std::string {
  std::ostringstream line;
  line << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  "
       << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s / "
       << std::setprecision(0) << r.time_limit_seconds << "s  " << r.title;
  if (!r.passed)
    line << "  [" << r.detail << "]";
  return line.str();
}

auto cmd_verify(const std::vector<int> &only, std::ostream &table) -> Outcome {
  json rows = json::array();
  bool all = true;
  run_acceptance(only, [&](const CriterionResult &r) {
    table << criterion_line(r) << '\n' << std::flush;
    rows.push_back(criterion_json(r));
    all = all && r.passed;
  });
  return {{{"criteria", rows}, {"passed", all}}, all ? kExitOk : kExitPropertyFails};
}

auto is_scalar_list(const json &j) -> bool {
  return j.is_array() &&
         std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_primitive(); });
}

auto scalar_text(const json &j) -> std::string {
  if (j.is_string())
    return j.get<std::string>();
  if (is_scalar_list(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i)
      s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

void print_pretty(const json &j, std::ostream &out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto &[key, value] : j.items()) {
      if (value.is_primitive() || is_scalar_list(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        print_pretty(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto &e : j) {
      if (e.is_object()) {
        std::ostringstream inner;
        print_pretty(e, inner, 0);
        std::istringstream lines(inner.str());
        std::string line;
        bool first = true;
        while (std::getline(lines, line)) {
          out << pad << (first ? "- " : "  ") << line << '\n';
          first = false;
        }
      } else {
        out << pad << "- " << scalar_text(e) << '\n';
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

} // namespace

auto run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    -> int {
  CLI::App app{"Lefschetz properties of artinian algebras", "lefschetz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");

  std::string ideal_text;
  std::uint64_t characteristic = 0;
  std::vector<unsigned> params;
  std::string figure;
  std::array<unsigned, 3> box{};
  std::size_t vars = 0;
  std::vector<unsigned> degrees;
  std::size_t length = 64;
  std::vector<unsigned> exponents;
  std::uint64_t seed = 0;
  unsigned trials = 5;
  std::int64_t bound = 1000;
  std::string check;
  std::vector<std::int64_t> values;
  std::vector<int> only;

  const auto add_ideal = [&](CLI::App *sub) {
    sub->add_option("ideal", ideal_text, "e.g. \"vars: x,y,z; gens: x^3,y^3,z^3,x*y*z\"")
        ->required();
  };

  auto *hilbert = app.add_subcommand("hilbert", "Hilbert function and socle");
  add_ideal(hilbert);
  auto *wlp = app.add_subcommand("wlp", "Weak Lefschetz property");
  add_ideal(wlp);
  wlp->add_option("--char", characteristic, "0 or a prime");
  auto *slp = app.add_subcommand("slp", "Strong Lefschetz property");
  add_ideal(slp);
  slp->add_option("--char", characteristic, "0 or a prime");
  auto *badprimes = app.add_subcommand("badprimes", "Primes in which the WLP fails");
  add_ideal(badprimes);

  auto *aci = app.add_subcommand("aci", "Almost complete intersection determinants");
  aci->add_option("--params", params, "a,b,c,alpha,beta,gamma")->delimiter(',')->required();
  aci->add_option("--emit-figure", figure, "SVG of the region with one tiling");

  auto *mac = app.add_subcommand("macmahon", "Plane partitions in an a x b x c box");
  mac->add_option("a", box[0])->required();
  mac->add_option("b", box[1])->required();
  mac->add_option("c", box[2])->required();

  auto *frob = app.add_subcommand("froberg", "Expected Hilbert series of general forms");
  frob->add_option("--vars", vars)->required()->check(CLI::PositiveNumber);
  frob->add_option("--degrees", degrees)->delimiter(',')->required();
  frob->add_option("--max-length", length, "Terms kept when the series never truncates");

  auto *powers = app.add_subcommand("powers", "WLP of powers of general linear forms");
  powers->add_option("--vars", vars)->required()->check(CLI::PositiveNumber);
  powers->add_option("--exponents", exponents)->delimiter(',')->required();
  powers->add_option("--seed", seed);
  powers->add_option("--trials", trials);
  powers->add_option("--bound", bound, "Coefficient bound");

  auto *seq = app.add_subcommand("seq", "Numerical sequence predicates");
  seq->add_option("--check", check)
      ->required()
      ->check(CLI::IsMember({"unimodal", "O", "SI", "wlpshape"}));
  seq->add_option("--values", values)->delimiter(',')->required();

  auto *verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", only, "Criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  Report report;
  for (int i = 1; i < argc; ++i)
    report.command.emplace_back(argv[i]);

  Outcome outcome;
  try {
    if (hilbert->parsed())
      outcome = cmd_hilbert(ideal_text);
    else if (wlp->parsed())
      outcome = cmd_lefschetz(ideal_text, Property::WLP, characteristic);
    else if (slp->parsed())
      outcome = cmd_lefschetz(ideal_text, Property::SLP, characteristic);
    else if (badprimes->parsed())
      outcome = cmd_badprimes(ideal_text);
    else if (aci->parsed())
      outcome = cmd_aci(params, figure);
    else if (mac->parsed())
      outcome = {{{"a", box[0]},
                  {"b", box[1]},
                  {"c", box[2]},
                  {"value", big(macmahon(box[0], box[1], box[2]))}}};
    else if (frob->parsed())
      outcome = cmd_froberg(vars, degrees, length);
    else if (powers->parsed())
      outcome = cmd_powers(vars, exponents, seed, trials, bound);
    else if (seq->parsed())
      outcome = cmd_seq(check, values);
    else
      outcome = cmd_verify(only, pretty ? out : err);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  report.result = std::move(outcome.result);
  report.seed = outcome.seed;
  if (pretty) {
    if (!verify->parsed())
      print_pretty(report.result, out, 0);
    else
      out << (outcome.code == kExitOk ? "all criteria passed" : "some criteria failed")
          << '\n';
  } else {
    out << json(report).dump(2) << '\n';
  }
  return outcome.code;
}

} // namespace lefschetz
