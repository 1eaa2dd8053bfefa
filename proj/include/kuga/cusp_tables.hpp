#pragma once

// Weight bookkeeping for pluricanonical forms on n-fold Kuga families over
// Siegel modular varieties, and known minimal-weight cusp forms for full
// level in genus 2..6.

#include <cstdint>
#include <span>
#include <string>

namespace kuga {

// m-canonical forms on the n-fold family correspond to weight (g + n + 1) m.
std::int64_t weight_of(std::int64_t g, std::int64_t n, std::int64_t m);

// -1 acts on weight k forms by (-1)^{gk}; when it lies in the group and gk is
// odd, every modular form of weight k vanishes.
bool parity_vanishes(std::int64_t g, std::int64_t k, bool minus_one_in_gamma);

struct CuspFormFact {
  std::int64_t g = 0;
  std::int64_t min_cusp_weight = 0;
  std::int64_t dim_at_min = 0;
  bool dim_is_lower_bound = false;  // dim >= dim_at_min only
  std::int64_t min_n_for_nonneg_kodaira = 0;
  bool kodaira_positive = false;    // kappa > 0 rather than kappa >= 0 from that n on
  std::string source;
};

std::span<const CuspFormFact> cusp_form_table();

// Throws std::out_of_range for g outside [2, 6].
const CuspFormFact& kodaira_fact(std::int64_t g);

}  // namespace kuga
