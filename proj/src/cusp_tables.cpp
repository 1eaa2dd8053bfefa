#include "kuga/cusp_tables.hpp"

#include <array>
#include <stdexcept>

namespace kuga {

namespace {

const std::array<CuspFormFact, 5> kTable{{
    {2, 10, 1, false, 7, false, "Igusa 1962: unique cusp form of weight 10, minimal"},
    {3, 12, 1, false, 8, false, "Tsuyumine: unique cusp form of weight 12, minimal"},
    {4, 8, 1, false, 3, false, "Igusa 1982 (Schottky form); minimality and dim S_8 = 1 by Salvati Manni"},
    {5, 12, 2, false, 6, true, "Neeb-Venkov: dim S_12 = 2; minimality by Poor-Yuen"},
    {6, 12, 3, true, 5, true, "Neeb-Venkov: dim S_12 >= 3"},
}};

}  // namespace

std::int64_t weight_of(std::int64_t g, std::int64_t n, std::int64_t m) {
  if (g < 2 || n < 1 || m < 0) throw std::invalid_argument("weight_of: need g >= 2, n >= 1, m >= 0");
  return (g + n + 1) * m;
}

bool parity_vanishes(std::int64_t g, std::int64_t k, bool minus_one_in_gamma) {
  return minus_one_in_gamma && (g * k) % 2 != 0;
}

std::span<const CuspFormFact> cusp_form_table() { return kTable; }

const CuspFormFact& kodaira_fact(std::int64_t g) {
  for (const auto& row : kTable) {
    if (row.g == g) return row;
  }
  throw std::out_of_range("kodaira_fact: no table entry for g = " + std::to_string(g));
}

}  // namespace kuga
