#pragma once

// Reid-Tai sums on tangent spaces  V^n + Sym^2 V  of n-fold Kuga families,
// and the exhaustive scan over cyclic stabilizer types.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kuga/cyclic_rep.hpp"

namespace kuga {

struct TangentSpectrum {
  AngleMultiset angles;
  std::int64_t g = 0;
  std::int64_t n = 0;
};

struct ClassifiedCase {
  std::int64_t g = 0;
  std::int64_t n = 0;
  RationalRep rep;
  HodgeSplitting splitting;
  mpq_class rt;
  bool is_canonical_cert = false;  // rt >= 1
  bool is_quasi_reflection = false;
};

// Pairwise sums (a_i + a_j) mod 1 over i <= j, canonical order.
AngleMultiset sym2_angles(std::span<const Angle> v);

// n copies of the splitting angles followed by their symmetric square.
TangentSpectrum tangent_spectrum(const HodgeSplitting& splitting, std::int64_t n);

mpq_class reid_tai_sum(std::span<const Angle> angles);
inline mpq_class reid_tai_sum(const TangentSpectrum& spec) { return reid_tai_sum(spec.angles); }

// Exactly one nonzero angle: eigenvalues 1, ..., 1, lambda with lambda != 1.
bool is_quasi_reflection(std::span<const Angle> angles);
inline bool is_quasi_reflection(const TangentSpectrum& spec) { return is_quasi_reflection(spec.angles); }

// Throws std::invalid_argument if rep.two_g != 2g, n < 1, or the splitting
// does not belong to rep.
ClassifiedCase classify(std::int64_t g, std::int64_t n, const RationalRep& rep, const HodgeSplitting& splitting);

// Sort key: (g, n, rep label, splitting).
bool case_less(const ClassifiedCase& a, const ClassifiedCase& b);

struct ScanReport {
  std::int64_t g_min = 0, g_max = 0, n_min = 0, n_max = 0;
  std::uint64_t cases_examined = 0;
  std::vector<ClassifiedCase> exceptions;         // non-identity cases with rt < 1
  std::vector<ClassifiedCase> quasi_reflections;  // expected empty

  // Distinct (g, n) with at least one exception, ascending.
  std::vector<std::pair<std::int64_t, std::int64_t>> exceptional_pairs() const;
};

// Worker count from KUGA_SING_THREADS, else hardware concurrency (at least 1).
unsigned default_worker_count();

// Every (g, n, rep, splitting) with g_min <= g <= g_max, n_min <= n <= n_max
// and rep other than V1^{2g}. threads == 0 means default_worker_count().
ScanReport scan(std::int64_t g_min, std::int64_t g_max, std::int64_t n_min, std::int64_t n_max,
                unsigned threads = 0);

}  // namespace kuga
