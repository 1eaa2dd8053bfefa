#include "kuga/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "kuga/asymptotics.hpp"
#include "kuga/cone_lab.hpp"
#include "kuga/cusp_tables.hpp"
#include "kuga/cyclic_rep.hpp"
#include "kuga/reid_tai.hpp"
#include "kuga/report.hpp"
#include "kuga/siegel.hpp"
#include "kuga/symplectic.hpp"

namespace kuga::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  std::int64_t lo = 0, hi = 0;
};

std::int64_t parse_integer(std::string_view text, const std::string& flag) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(flag + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

// "a..b" or "a"
Range parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_integer(text, flag);
    return {v, v};
  }
  Range r{parse_integer(std::string_view(text).substr(0, dots), flag),
          parse_integer(std::string_view(text).substr(dots + 2), flag)};
  if (r.hi < r.lo) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_integer(std::string_view(text).substr(pos, comma - pos), flag));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct Output {
  std::string path;
  std::string format = "json";
};

void add_output_options(CLI::App* sub, Output& o, bool csv_allowed) {
  sub->add_option("--out", o.path, "Write the report to this file instead of standard output");
  auto* fmt = sub->add_option("--format", o.format, "Report format")->capture_default_str();
  fmt->check(csv_allowed ? CLI::IsMember({"json", "csv"}) : CLI::IsMember({"json"}));
}

// ---------------------------------------------------------------- rt-scan

std::string csv_cases(const std::vector<ClassifiedCase>& cases) {
  std::ostringstream os;
  os << "g,n,rep,v_angles,rt,canonical,quasi_reflection\n";
  for (const auto& c : cases) {
    std::string angles;
    for (const auto& a : c.splitting.v_angles) angles += (angles.empty() ? "" : " ") + a.str();
    os << c.g << ',' << c.n << ',' << c.rep.label() << ',' << angles << ',' << c.rt.get_str() << ','
       << (c.is_canonical_cert ? "true" : "false") << ',' << (c.is_quasi_reflection ? "true" : "false") << '\n';
  }
  return os.str();
}

int rt_scan(const std::string& g_text, const std::string& n_text, unsigned threads, const Output& o,
            std::string& report, std::ostream& err) {
  const auto g = parse_range(g_text, "--g");
  const auto n = parse_range(n_text, "--n");
  if (g.lo < 2) throw UsageError("--g: genus must be >= 2");
  if (n.lo < 1) throw UsageError("--n: n must be >= 1");
  err << "scanning g in [" << g.lo << ", " << g.hi << "], n in [" << n.lo << ", " << n.hi << "]\n";
  const auto result = scan(g.lo, g.hi, n.lo, n.hi, threads);
  err << result.cases_examined << " cases examined, " << result.exceptions.size() << " with RT < 1\n";
  if (o.format == "csv") {
    report = csv_cases(result.exceptions);
  } else {
    auto j = scan_to_json(result);
    j["command"] = "rt-scan";
    report = j.dump(2) + "\n";
  }
  if (!result.quasi_reflections.empty()) {
    err << "quasi-reflection found among non-identity cases\n";
    return verification_failed;
  }
  return ok;
}

// --------------------------------------------------------------- rt-check

int rt_check(const std::string& label, std::int64_t g, const std::string& n_text, const Output& o,
             std::string& report) {
  RationalRep rep;
  try {
    rep = parse_rep(label);
  } catch (const RepError& e) {
    throw UsageError(std::string("--rep: ") + e.what());
  }
  if (g != 0 && g != rep.g()) {
    throw UsageError("--g " + std::to_string(g) + " does not match " + rep.label() + " (g = " +
                     std::to_string(rep.g()) + ")");
  }
  const auto n = parse_range(n_text, "--n");
  if (n.lo < 1) throw UsageError("--n: n must be >= 1");

  std::vector<ClassifiedCase> cases;
  for (std::int64_t k = n.lo; k <= n.hi; ++k) {
    for (const auto& s : enumerate_splittings(rep)) cases.push_back(classify(rep.g(), k, rep, s));
  }
  std::sort(cases.begin(), cases.end(), case_less);
  if (o.format == "csv") {
    report = csv_cases(cases);
    return ok;
  }
  mpq_class min_rt = cases.front().rt;
  json jc = json::array();
  for (const auto& c : cases) {
    min_rt = std::min(min_rt, c.rt);
    jc.push_back(case_to_json(c));
  }
  json j{{"command", "rt-check"},
         {"rep", rep.label()},
         {"representation", rep_to_json(rep)},
         {"g", rep.g()},
         {"n_range", {n.lo, n.hi}},
         {"identity", rep.is_identity()},
         {"min_rt", min_rt.get_str()},
         {"canonical", min_rt >= 1},
         {"cases", jc}};
  report = j.dump(2) + "\n";
  return ok;
}

// ------------------------------------------------------ symplectic-verify

int symplectic_verify(std::uint64_t seed, std::int64_t trials, std::int64_t word_length, std::string& report,
                      std::ostream& err) {
  if (trials < 0 || word_length < 0) throw UsageError("--trials and --word-length must be >= 0");
  std::mt19937_64 rng(seed);
  json per_g = json::array();
  bool passed = true;
  for (std::size_t g : {2u, 3u}) {
    std::int64_t scaling = 0, additivity = 0, composition = 0, symmetry = 0, non_symplectic = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      const auto r = check_relations(random_relation_instance(g, rng));
      scaling += !r.scaling;
      additivity += !r.additivity;
      composition += !r.composition;
      symmetry += !r.symmetry;
      non_symplectic += !r.all_symplectic;
      non_symplectic += !is_symplectic(random_word(g, static_cast<std::size_t>(word_length), rng()));
    }
    const bool ok_g = scaling + additivity + composition + symmetry + non_symplectic == 0;
    passed = passed && ok_g;
    err << "g = " << g << ": " << (ok_g ? "all relations hold" : "FAILURES") << "\n";
    per_g.push_back({{"g", g},
                     {"trials", trials},
                     {"failures",
                      {{"scaling", scaling},
                       {"additivity", additivity},
                       {"composition", composition},
                       {"symmetry", symmetry},
                       {"non_symplectic", non_symplectic}}},
                     {"passed", ok_g}});
  }
  json j{{"command", "symplectic-verify"}, {"seed", seed}, {"word_length", word_length}, {"results", per_g},
         {"passed", passed}};
  report = j.dump(2) + "\n";
  return passed ? ok : verification_failed;
}

// ---------------------------------------------------------- siegel-verify

int siegel_verify(std::int64_t g, std::int64_t trials, double tol, std::uint64_t seed, std::string& report) {
  if (g < 1 || trials < 0 || !(tol > 0)) throw UsageError("need --g >= 1, --trials >= 0, --tol > 0");
  const auto r = verify_siegel_identities(g, trials, seed, tol);
  json j{{"command", "siegel-verify"},
         {"g", g},
         {"seed", seed},
         {"tol", tol},
         {"trials", r.trials},
         {"max_cocycle_error", r.max_cocycle_error},
         {"max_metric_error", r.max_metric_error},
         {"max_volume_error", r.max_volume_error},
         {"invalid_images", r.invalid_images},
         {"failures", r.failures},
         {"passed", r.passed()}};
  report = j.dump(2) + "\n";
  return r.passed() ? ok : verification_failed;
}

// ------------------------------------------------------------ asymptotics

struct AsymptoticsArgs {
  std::string model;
  std::int64_t g_prime = 3, rank = 1;
  std::uint64_t seed = 0;
  double t_max = 1e6;
  double a = 0, eps_min = 1e-8;
  std::optional<double> radius;
  std::int64_t nu = 1, m = 1;
  std::size_t points = 40;
};

int asymptotics(const AsymptoticsArgs& args, const Output& o, std::string& report) {
  std::ostringstream csv;
  json j{{"command", "asymptotics"}, {"model", args.model}};
  bool passed = true;

  if (args.model == "flow") {
    if (args.g_prime < 1 || args.rank < 0 || args.rank > args.g_prime) {
      throw UsageError("need 1 <= --gprime and 0 <= --rank <= --gprime");
    }
    if (!(args.t_max >= 1e3)) throw UsageError("--t-max must be >= 1e3");
    std::mt19937_64 rng(args.seed);
    const auto q = random_psd_form(static_cast<std::size_t>(args.g_prime), static_cast<std::size_t>(args.rank), rng);
    const Eigen::MatrixXd im0 = random_siegel_point(args.g_prime, rng).omega().imag();
    const auto steps = static_cast<std::size_t>(std::ceil(8 * std::log10(args.t_max))) + 1;
    auto grid = geometric_grid(1.0, std::pow(args.t_max, 1.0 / static_cast<double>(steps - 1)), steps);
    grid.back() = args.t_max;
    const double exponent = petersson_flow_exponent(im0, form_matrix(q), grid);
    passed = std::abs(exponent - static_cast<double>(args.rank)) <= 0.05;
    csv << "t,det_im,rank,fitted_exponent\n";
    for (double t : grid) {
      csv << format_double(t) << ',' << format_double((im0 + t * form_matrix(q)).determinant()) << ','
          << args.rank << ',' << format_double(exponent) << '\n';
    }
    j["form"] = q.coords();
    j["rank"] = args.rank;
    j["fitted_exponent"] = exponent;
    j["tolerance"] = 0.05;
  } else if (args.model == "boundary") {
    const double radius = args.radius.value_or(0.5);
    if (!(args.eps_min > 0) || !(radius < 1) || !(args.eps_min < radius / 2)) {
      throw UsageError("need 0 < --eps-min < --R / 2 and --R < 1");
    }
    std::vector<double> eps, values;
    for (double e = radius / 2; e >= args.eps_min * (1 - 1e-12); e /= 2) eps.push_back(e);
    json rows = json::array();
    double worst = 0;
    for (double e : eps) {
      const auto b = boundary_integral(args.a, e, radius);
      worst = std::max(worst, b.relative_difference());
      values.push_back(b.quadrature);
      rows.push_back({{"eps", e}, {"quadrature", b.quadrature}, {"closed_form", b.closed_form}});
    }
    const auto growth = eps.back() <= 1e-6 ? classify_growth(eps, values) : GrowthClass{};
    csv << "eps,integral,class,fitted_exponent\n";
    for (std::size_t i = 0; i < eps.size(); ++i) {
      csv << format_double(eps[i]) << ',' << format_double(values[i]) << ',' << to_string(growth.kind) << ','
          << format_double(growth.exponent) << '\n';
    }
    passed = worst <= 1e-6;
    j["a"] = args.a;
    j["R"] = radius;
    j["max_relative_difference"] = worst;
    j["class"] = to_string(growth.kind);
    j["fitted_exponent"] = growth.exponent;
    j["samples"] = rows;
  } else {
    if (args.m < 1 || args.nu < 0) throw UsageError("need --m >= 1 and --nu >= 0");
    const auto grid = geometric_grid(0.5, 0.5, args.points);
    const auto result = pole_model_classify(args.nu, args.m, grid, args.radius.value_or(1.0));
    passed = result.max_relative_difference <= 1e-6;
    csv << "eps,integral,class,fitted_exponent\n";
    json rows = json::array();
    for (const auto& s : result.samples) {
      csv << format_double(s.eps) << ',' << format_double(s.integral) << ',' << to_string(result.growth.kind) << ','
          << format_double(result.growth.exponent) << '\n';
      rows.push_back({{"eps", s.eps}, {"quadrature", s.integral}, {"closed_form", s.closed_form}});
    }
    j["nu"] = args.nu;
    j["m"] = args.m;
    j["class"] = to_string(result.growth.kind);
    j["fitted_exponent"] = result.growth.exponent;
    j["max_relative_difference"] = result.max_relative_difference;
    j["samples"] = rows;
  }
  j["passed"] = passed;
  report = o.format == "csv" ? csv.str() : j.dump(2) + "\n";
  return passed ? ok : verification_failed;
}

// ------------------------------------------------------------- cone-check

int cone_check(const std::string& form_text, const std::string& chi_text, std::string& report) {
  std::optional<QuadForm> q;
  try {
    q.emplace(parse_int_list(form_text, "--form"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (q->is_zero()) throw UsageError("--form: the zero form has no primitivity or dual character");
  const auto membership = cone_membership(*q);
  const bool primitive = is_primitive(*q);
  json j{{"command", "cone-check"},
         {"form", q->coords()},
         {"g_prime", q->g_prime()},
         {"region", to_string(membership.region)},
         {"rank", membership.rank},
         {"primitive", primitive}};
  if (primitive) {
    const auto chi = dual_character(*q);
    j["dual_character"] = chi.coords;
    j["dual_pairing"] = pairing(chi, *q).get_str();
  } else {
    j["dual_character"] = nullptr;
  }
  if (!chi_text.empty()) {
    Character chi{parse_int_list(chi_text, "--chi")};
    if (chi.coords.size() != q->coords().size()) throw UsageError("--chi must have as many entries as --form");
    j["chi"] = chi.coords;
    j["chi_pairing"] = pairing(chi, *q).get_str();
    j["extension"] = to_string(character_extends(chi, *q));
  }
  report = j.dump(2) + "\n";
  return ok;
}

// ----------------------------------------------------------------- tables

int tables(const std::string& g_text, std::string& report) {
  const auto g = parse_range(g_text, "--g");
  if (g.lo < 2 || g.hi > 6) throw UsageError("--g: table covers genus 2..6");
  json rows = json::array();
  bool consistent = true;
  for (std::int64_t k = g.lo; k <= g.hi; ++k) {
    const auto& fact = kodaira_fact(k);
    auto row = cusp_fact_to_json(fact);
    const bool match = weight_of(k, fact.min_n_for_nonneg_kodaira, 1) == fact.min_cusp_weight;
    row["weight_of_min_n"] = weight_of(k, fact.min_n_for_nonneg_kodaira, 1);
    row["consistent"] = match;
    consistent = consistent && match;
    rows.push_back(row);
  }
  json j{{"command", "tables"}, {"rows", rows}, {"consistent", consistent}};
  report = j.dump(2) + "\n";
  return consistent ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reid-Tai singularity scans and verification harnesses for Kuga families", "kuga-sing"};
  app.require_subcommand(1);

  Output o;
  std::string g_text, n_text, label, form_text, chi_text;
  std::int64_t check_g = 0, siegel_g = 2, sym_trials = 1000, siegel_trials = 500, word_length = 8;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  unsigned threads = 0;
  AsymptoticsArgs asym;

  auto* scan_cmd = app.add_subcommand("rt-scan", "List every stabilizer type with Reid-Tai sum below 1");
  scan_cmd->add_option("--g", g_text, "Genus range, e.g. 2..6")->required();
  scan_cmd->add_option("--n", n_text, "Fiber power range, e.g. 1..4")->required();
  scan_cmd->add_option("--threads", threads, "Worker threads (default: KUGA_SING_THREADS or all cores)");
  add_output_options(scan_cmd, o, true);

  auto* check_cmd = app.add_subcommand("rt-check", "Reid-Tai sums for every splitting of one representation");
  check_cmd->add_option("--rep", label, "Representation label, e.g. V6+V1^2")->required();
  check_cmd->add_option("--g", check_g, "Expected genus (checked against the label)");
  n_text = "1";
  check_cmd->add_option("--n", n_text, "Fiber power or range")->capture_default_str();
  add_output_options(check_cmd, o, true);

  auto* sym_cmd = app.add_subcommand("symplectic-verify", "Check the transvection relations on random instances");
  sym_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  sym_cmd->add_option("--trials", sym_trials, "Instances per genus")->capture_default_str();
  sym_cmd->add_option("--word-length", word_length, "Length of random symplectic words")->capture_default_str();
  add_output_options(sym_cmd, o, false);

  auto* siegel_cmd = app.add_subcommand("siegel-verify", "Check automorphy and invariance identities numerically");
  siegel_cmd->add_option("--g", siegel_g, "Genus")->capture_default_str();
  siegel_cmd->add_option("--trials", siegel_trials, "Random trials")->capture_default_str();
  siegel_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  siegel_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  add_output_options(siegel_cmd, o, false);

  auto* asym_cmd = app.add_subcommand("asymptotics", "Boundary growth models");
  asym_cmd->add_option("--model", asym.model, "flow, boundary or pole")
      ->required()
      ->check(CLI::IsMember({"flow", "boundary", "pole"}));
  asym_cmd->add_option("--gprime", asym.g_prime, "flow: size of the form")->capture_default_str();
  asym_cmd->add_option("--rank", asym.rank, "flow: rank of the random semidefinite form")->capture_default_str();
  asym_cmd->add_option("--seed", asym.seed, "flow: PRNG seed")->capture_default_str();
  asym_cmd->add_option("--t-max", asym.t_max, "flow: largest flow time")->capture_default_str();
  asym_cmd->add_option("--a", asym.a, "boundary: exponent of |log r|")->capture_default_str();
  asym_cmd->add_option("--R", asym.radius, "Outer radius (boundary: default 0.5, pole: default 1)");
  asym_cmd->add_option("--eps-min", asym.eps_min, "boundary: smallest eps")->capture_default_str();
  asym_cmd->add_option("--nu", asym.nu, "pole: vanishing order")->capture_default_str();
  asym_cmd->add_option("--m", asym.m, "pole: pluricanonical weight m")->capture_default_str();
  asym_cmd->add_option("--points", asym.points, "pole: grid points from 0.5, ratio 1/2")->capture_default_str();
  add_output_options(asym_cmd, o, true);

  auto* cone_cmd = app.add_subcommand("cone-check", "Cone membership, primitivity and dual character of a form");
  cone_cmd->add_option("--form", form_text, "Upper-triangle coordinates, e.g. 1,0,0")->required();
  cone_cmd->add_option("--chi", chi_text, "Character to test for extension across the boundary");
  add_output_options(cone_cmd, o, false);

  auto* tables_cmd = app.add_subcommand("tables", "Minimal cusp form weights and Kodaira bookkeeping");
  std::string table_g = "2..6";
  tables_cmd->add_option("--g", table_g, "Genus range within 2..6")->capture_default_str();
  add_output_options(tables_cmd, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  std::string report;
  int status = ok;
  try {
    if (*scan_cmd) status = rt_scan(g_text, n_text, threads, o, report, err);
    else if (*check_cmd) status = rt_check(label, check_g, n_text, o, report);
    else if (*sym_cmd) status = symplectic_verify(seed, sym_trials, word_length, report, err);
    else if (*siegel_cmd) status = siegel_verify(siegel_g, siegel_trials, tol, seed, report);
    else if (*asym_cmd) status = asymptotics(asym, o, report);
    else if (*cone_cmd) status = cone_check(form_text, chi_text, report);
    else if (*tables_cmd) status = tables(table_g, report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return verification_failed;
  }

  if (o.path.empty()) {
    out << report;
  } else {
    std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << o.path << " for writing\n";
      return usage_error;
    }
    file << report;
  }
  return status;
}

}  // namespace kuga::cli
