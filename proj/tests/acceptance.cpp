// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run everything
//   acceptance --criterion N   run one criterion; exit status reflects it

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kuga/asymptotics.hpp"
#include "kuga/cli.hpp"
#include "kuga/cone_lab.hpp"
#include "kuga/cusp_tables.hpp"
#include "kuga/cyclic_rep.hpp"
#include "kuga/reid_tai.hpp"
#include "kuga/siegel.hpp"
#include "kuga/symplectic.hpp"

using namespace kuga;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RationalRep exceptional_rep(std::int64_t g) { return RationalRep::make({{6, 1}, {1, 2 * g - 2}}); }

HodgeSplitting exceptional_splitting(std::int64_t g) {
  std::vector<Angle> v{Angle(1, 6)};
  for (std::int64_t i = 1; i < g; ++i) v.emplace_back(0, 1);
  std::sort(v.begin(), v.end());
  return {v};
}

Outcome reid_tai_exceptions() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"rt-scan", "--g", "2..6", "--n", "1..4"}, out, err);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) return {false, "rt-scan exit " + std::to_string(code)};

  const auto j = nlohmann::json::parse(out.str());
  const auto& ex = j.at("exceptions");
  const std::vector<std::tuple<int, int, std::string, std::string>> expected{
      {2, 1, "V6+V1^2", "2/3"}, {2, 2, "V6+V1^2", "5/6"}, {3, 1, "V6+V1^4", "5/6"}};
  bool pass = ex.size() == expected.size() && seconds < 60;
  for (std::size_t i = 0; pass && i < expected.size(); ++i) {
    const auto& [g, n, rep, rt] = expected[i];
    const auto& c = ex[i];
    nlohmann::json angles = nlohmann::json::array();
    for (const auto& a : exceptional_splitting(g).v_angles) angles.push_back(a.str());
    pass = c.at("g") == g && c.at("n") == n && c.at("rep") == rep && c.at("rt") == rt && c.at("v_angles") == angles;
  }
  std::ostringstream d;
  d << ex.size() << " exceptions " << j.at("exceptional_pairs").dump() << ", " << j.at("cases_examined")
    << " cases in " << std::fixed << std::setprecision(2) << seconds << " s";
  return {pass, d.str()};
}

Outcome closed_family() {
  int checked = 0, bad = 0;
  for (std::int64_t g = 2; g <= 8; ++g) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      const auto c = classify(g, n, exceptional_rep(g), exceptional_splitting(g));
      mpq_class expected(2 + g + n - 1, 6);
      expected.canonicalize();
      bad += c.rt != expected;
      bad += (c.rt < 1) != ((g == 2 && n <= 2) || (g == 3 && n == 1));
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " (g, n) pairs, " + std::to_string(bad) + " mismatches"};
}

// Every non-identity (rep, splitting) at genus g, with its tangent cases for n in [1, n_max].
void for_each_case(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_max,
                   const std::function<void(const ClassifiedCase&)>& visit) {
  for (std::int64_t g = g_lo; g <= g_hi; ++g) {
    for (const auto& rep : enumerate_reps(2 * g)) {
      if (rep.is_identity()) continue;
      for (const auto& s : enumerate_splittings(rep)) {
        for (std::int64_t n = 1; n <= n_max; ++n) visit(classify(g, n, rep, s));
      }
    }
  }
}

Outcome no_quasi_reflections() {
  std::uint64_t cases = 0, quasi = 0;
  for_each_case(2, 5, 3, [&](const ClassifiedCase& c) {
    ++cases;
    quasi += c.is_quasi_reflection;
  });
  return {quasi == 0 && cases > 0, std::to_string(cases) + " cases, " + std::to_string(quasi) + " quasi-reflections"};
}

Outcome lemma_cases() {
  std::uint64_t with_v3 = 0, with_v2 = 0, bad = 0;
  for_each_case(2, 6, 4, [&](const ClassifiedCase& c) {
    if (c.rep.multiplicity(3) > 0) {
      ++with_v3;
      bad += c.rt < 1;
    }
    const bool only_1_2 = c.rep.multiplicity(1) + c.rep.multiplicity(2) == 2 * c.g;
    if (only_1_2 && c.rep.multiplicity(2) >= 2) {
      ++with_v2;
      bad += c.rt < 1;
    }
  });
  std::ostringstream d;
  d << with_v3 << " cases with V3, " << with_v2 << " of type V1^2k+V2^2l, " << bad << " below 1";
  return {bad == 0 && with_v3 > 0 && with_v2 > 0, d.str()};
}

Outcome transvections() {
  std::mt19937_64 rng(20240601);
  int bad = 0, instances = 0;
  for (std::size_t g : {2u, 3u}) {
    for (int t = 0; t < 1000; ++t, ++instances) bad += !check_relations(random_relation_instance(g, rng)).all();
  }
  return {bad == 0, std::to_string(instances) + " instances, " + std::to_string(bad) + " failures"};
}

Outcome siegel() {
  bool pass = true;
  std::ostringstream d;
  for (Eigen::Index g : {2, 3}) {
    const auto r = verify_siegel_identities(g, 500, 1000 + static_cast<std::uint64_t>(g), 1e-9);
    pass = pass && r.passed() && r.max_cocycle_error <= 1e-9 && r.max_metric_error <= 1e-9;
    d << "g=" << g << " cocycle " << std::scientific << std::setprecision(1) << r.max_cocycle_error << " metric "
      << r.max_metric_error << (g == 2 ? "; " : "");
  }
  return {pass, d.str()};
}

Outcome flow_exponent() {
  std::mt19937_64 rng(77);
  const auto grid = geometric_grid(1.0, std::pow(10.0, 0.125), 49);
  double worst = 0;
  int cases = 0;
  for (std::size_t gp = 1; gp <= 3; ++gp) {
    for (std::size_t r = 0; r <= gp; ++r) {
      for (int trial = 0; trial < 5; ++trial, ++cases) {
        const auto q = random_psd_form(gp, r, rng);
        const Eigen::MatrixXd im0 = random_siegel_point(static_cast<Eigen::Index>(gp), rng).omega().imag();
        worst = std::max(worst, std::abs(petersson_flow_exponent(im0, form_matrix(q), grid) - static_cast<double>(r)));
      }
    }
  }
  std::ostringstream d;
  d << cases << " forms, worst |exponent - rank| " << std::scientific << std::setprecision(2) << worst;
  return {worst <= 0.05, d.str()};
}

Outcome pole_trichotomy() {
  const auto grid = geometric_grid(0.5, 0.5, 40);
  bool pass = true;
  double worst_quadrature = 0, worst_exponent = 0;
  for (std::int64_t m : {1, 2, 3, 5}) {
    const auto below = pole_model_classify(m - 1, m, grid);
    const auto at = pole_model_classify(m, m, grid);
    const auto above = pole_model_classify(m + 1, m, grid);
    const double rel = std::abs(above.growth.exponent * static_cast<double>(m) / 2 - 1);
    pass = pass && below.growth.kind == GrowthKind::bounded && at.growth.kind == GrowthKind::logarithmic &&
           above.growth.kind == GrowthKind::power && rel <= 0.02;
    worst_exponent = std::max(worst_exponent, rel);
    for (const auto* c : {&below, &at, &above}) worst_quadrature = std::max(worst_quadrature, c->max_relative_difference);
  }
  pass = pass && worst_quadrature <= 1e-6;
  std::ostringstream d;
  d << std::scientific << std::setprecision(1) << "worst exponent error " << worst_exponent << ", quadrature "
    << worst_quadrature;
  return {pass, d.str()};
}

// Taken literally: eps^alpha * int_eps^R |log r|^a dr / r along eps = R/2, R/4, ...
// down to 1e-8. The product vanishes at eps = R and peaks near
// eps = exp(-(a + 1)/alpha), so monotone decay on this grid needs that peak
// to sit above R/2.
Outcome boundary_decay() {
  const double radius = 0.5;
  int combos = 0, monotone = 0;
  std::ostringstream d;
  for (double a : {0.0, 1.0, 3.0, 6.0}) {
    for (double alpha : {0.1, 0.5}) {
      ++combos;
      double previous = INFINITY, peak_value = 0, peak_eps = 0, last = 0;
      bool ok = true;
      for (double eps = radius / 2; eps >= 1e-8; eps /= 2) {
        const double value = std::pow(eps, alpha) * boundary_integral(a, eps, radius).quadrature;
        ok = ok && value < previous;
        if (value > peak_value) peak_value = value, peak_eps = eps;
        previous = last = value;
      }
      ok = ok && last < 1e-3;
      monotone += ok;
      if (!ok) {
        d << (d.tellp() > 0 ? " " : "") << "(a=" << a << ",alpha=" << alpha << " max at eps=" << std::scientific
          << std::setprecision(1) << peak_eps << ", " << last << " at end" << std::defaultfloat << ")";
      }
    }
  }
  return {monotone == combos,
          std::to_string(monotone) + "/" + std::to_string(combos) + " monotone" + (monotone == combos ? "" : "; ") +
              d.str()};
}

Outcome cusp_consistency() {
  const std::int64_t expected[][3] = {{2, 10, 7}, {3, 12, 8}, {4, 8, 3}, {5, 12, 6}, {6, 12, 5}};
  int bad = 0;
  for (const auto& [g, w, n] : expected) {
    const auto& f = kodaira_fact(g);
    bad += f.min_cusp_weight != w || f.min_n_for_nonneg_kodaira != n || n != w - g - 1 || weight_of(g, n, 1) != w;
  }
  int parity_bad = 0;
  for (std::int64_t g = 1; g <= 12; ++g) {
    for (std::int64_t k = 0; k <= 12; ++k) {
      const bool minus_one_acts_as_minus_one = (g * k) % 2 == 1;
      parity_bad += parity_vanishes(g, k, true) != minus_one_acts_as_minus_one;
      parity_bad += parity_vanishes(g, k, false);
    }
  }
  return {bad == 0 && parity_bad == 0,
          "5 rows, " + std::to_string(bad) + " bad; parity " + std::to_string(parity_bad) + " bad over g,k <= 12"};
}

Outcome dual_characters() {
  std::mt19937_64 rng(4242);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const auto q = random_primitive_form(1 + static_cast<std::size_t>(t % 4), 20, rng);
    bad += pairing(dual_character(q), q) != 1;
  }
  int rejected = 0, imprimitive = 0;
  for (int t = 0; t < 100; ++t) {
    auto coords = random_primitive_form(1 + static_cast<std::size_t>(t % 4), 20, rng).coords();
    for (auto& x : coords) x *= 2 + t % 3;
    ++imprimitive;
    try {
      dual_character(QuadForm(coords));
    } catch (const ImprimitiveForm&) {
      ++rejected;
    }
  }
  return {bad == 0 && rejected == imprimitive,
          "100 certificates, " + std::to_string(bad) + " bad; " + std::to_string(rejected) + "/" +
              std::to_string(imprimitive) + " imprimitive rejected"};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion criteria[] = {
    {"rt-scan exceptions for g in 2..6, n in 1..4", reid_tai_exceptions},
    {"closed formula 1/3 + (g+n-1)/6 for the V6 family", closed_family},
    {"no quasi-reflections for g in 2..5, n in 1..3", no_quasi_reflections},
    {"V3 and V1^2k+V2^2l cases have RT >= 1", lemma_cases},
    {"transvection relations on 1000 rational instances per genus", transvections},
    {"Siegel cocycle and Petersson invariance", siegel},
    {"degenerating flow exponent equals rank", flow_exponent},
    {"pole order trichotomy", pole_trichotomy},
    {"eps^alpha times boundary integral decreases to 0", boundary_decay},
    {"cusp table consistency and parity rule", cusp_consistency},
    {"dual character certificates", dual_characters},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  constexpr int count = static_cast<int>(std::size(criteria));
  if (only < 0 || only > count) {
    std::cerr << "criterion must be in 1.." << count << "\n";
    return 2;
  }

  int failed = 0;
  for (int i = 1; i <= count; ++i) {
    if (only != 0 && i != only) continue;
    Outcome o;
    try {
      o = criteria[i - 1].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << i << "  " << criteria[i - 1].name << "  ["
              << o.detail << "]\n";
  }
  return failed == 0 ? 0 : 1;
}
