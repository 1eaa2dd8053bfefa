#include "kuga/reid_tai.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace kuga {

AngleMultiset sym2_angles(std::span<const Angle> v) {
  AngleMultiset out;
  out.reserve(v.size() * (v.size() + 1) / 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) out.push_back(v[i] + v[j]);
  }
  return canonical(std::move(out));
}

TangentSpectrum tangent_spectrum(const HodgeSplitting& splitting, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("tangent_spectrum: n must be >= 1");
  TangentSpectrum spec;
  spec.g = static_cast<std::int64_t>(splitting.v_angles.size());
  spec.n = n;
  for (std::int64_t i = 0; i < n; ++i) {
    spec.angles.insert(spec.angles.end(), splitting.v_angles.begin(), splitting.v_angles.end());
  }
  const auto sym2 = sym2_angles(splitting.v_angles);
  spec.angles.insert(spec.angles.end(), sym2.begin(), sym2.end());
  return spec;
}

mpq_class reid_tai_sum(std::span<const Angle> angles) {
  mpq_class total = 0;
  for (const auto& a : angles) total += a.value();
  return total;
}

bool is_quasi_reflection(std::span<const Angle> angles) {
  return std::count_if(angles.begin(), angles.end(), [](const Angle& a) { return !a.is_zero(); }) == 1;
}

ClassifiedCase classify(std::int64_t g, std::int64_t n, const RationalRep& rep, const HodgeSplitting& splitting) {
  if (rep.two_g() != 2 * g) {
    throw std::invalid_argument("classify: representation " + rep.label() + " has dimension " +
                                std::to_string(rep.two_g()) + ", expected 2g = " + std::to_string(2 * g));
  }
  if (!is_splitting_of(rep, splitting)) {
    throw std::invalid_argument("classify: splitting is not a Hodge splitting of " + rep.label());
  }
  const auto spec = tangent_spectrum(splitting, n);
  ClassifiedCase c{g, n, rep, splitting, reid_tai_sum(spec), false, is_quasi_reflection(spec)};
  c.is_canonical_cert = c.rt >= 1;
  return c;
}

bool case_less(const ClassifiedCase& a, const ClassifiedCase& b) {
  if (a.g != b.g) return a.g < b.g;
  if (a.n != b.n) return a.n < b.n;
  const auto la = a.rep.label();
  const auto lb = b.rep.label();
  if (la != lb) return la < lb;
  return a.splitting < b.splitting;
}

std::vector<std::pair<std::int64_t, std::int64_t>> ScanReport::exceptional_pairs() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& c : exceptions) out.emplace_back(c.g, c.n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("KUGA_SING_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScanReport scan(std::int64_t g_min, std::int64_t g_max, std::int64_t n_min, std::int64_t n_max, unsigned threads) {
  if (g_min < 2 || g_max < g_min) throw std::invalid_argument("scan: need 2 <= g_min <= g_max");
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("scan: need 1 <= n_min <= n_max");
  if (threads == 0) threads = default_worker_count();

  ScanReport report{g_min, g_max, n_min, n_max, 0, {}, {}};
  for (std::int64_t g = g_min; g <= g_max; ++g) {
    std::vector<std::pair<const RationalRep*, HodgeSplitting>> work;
    const auto reps = enumerate_reps(2 * g);
    for (const auto& rep : reps) {
      if (rep.is_identity()) continue;
      for (auto& s : enumerate_splittings(rep)) work.emplace_back(&rep, std::move(s));
    }

    struct Partial {
      std::uint64_t examined = 0;
      std::vector<ClassifiedCase> exceptions, quasi_reflections;
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(work.size())));
    std::vector<Partial> partials(workers);
    auto run = [&](unsigned w) {
      auto& p = partials[w];
      for (std::size_t i = w; i < work.size(); i += workers) {
        for (std::int64_t n = n_min; n <= n_max; ++n) {
          auto c = classify(g, n, *work[i].first, work[i].second);
          ++p.examined;
          if (c.is_quasi_reflection) p.quasi_reflections.push_back(c);
          if (!c.is_canonical_cert) p.exceptions.push_back(std::move(c));
        }
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (auto& p : partials) {
      report.cases_examined += p.examined;
      std::move(p.exceptions.begin(), p.exceptions.end(), std::back_inserter(report.exceptions));
      std::move(p.quasi_reflections.begin(), p.quasi_reflections.end(),
                std::back_inserter(report.quasi_reflections));
    }
  }
  std::sort(report.exceptions.begin(), report.exceptions.end(), case_less);
  std::sort(report.quasi_reflections.begin(), report.quasi_reflections.end(), case_less);
  return report;
}

}  // namespace kuga
