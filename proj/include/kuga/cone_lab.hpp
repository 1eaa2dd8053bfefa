#pragma once

// Integral quadratic forms on an isotropic lattice I, viewed as points of
// U(I) = Sym^2 I, and characters of the torus U(I)_C / U(I)_Z.
//
// Coordinates are the upper triangle in row-major order:
//   (q_00, q_01, ..., q_0{g'-1}, q_11, ..., q_{g'-1 g'-1})
// and the symmetric matrix has Q_ii = q_ii, Q_ij = Q_ji = q_ij.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kuga {

class QuadForm {
 public:
  // g' is inferred from the coordinate count, which must be triangular.
  explicit QuadForm(std::vector<std::int64_t> coords);
  static QuadForm from_matrix(const std::vector<std::vector<std::int64_t>>& symmetric);

  std::size_t g_prime() const { return g_prime_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t entry(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  std::size_t g_prime_ = 0;
  std::vector<std::int64_t> coords_;
};

// Same coordinate indexing as QuadForm.
struct Character {
  std::vector<std::int64_t> coords;
};

std::size_t triangular_index(std::size_t g_prime, std::size_t i, std::size_t j);

// <chi, Q> = sum over i <= j of chi_ij q_ij, exact.
mpz_class pairing(const Character& chi, const QuadForm& q);

enum class ConeRegion { interior, boundary, outside };
std::string to_string(ConeRegion region);

struct ConeMembership {
  ConeRegion region = ConeRegion::outside;
  std::size_t rank = 0;
};

// Exact fraction-free (Bareiss) rank.
std::size_t exact_rank(const QuadForm& q);
// Exact symmetric-pivot LDL^T test.
bool is_positive_semidefinite(const QuadForm& q);

// interior: positive definite; boundary: semidefinite and singular.
ConeMembership cone_membership(const QuadForm& q);

// gcd of the coordinates is 1. Throws std::invalid_argument for Q = 0.
bool is_primitive(const QuadForm& q);

class ImprimitiveForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A character with <chi, Q> = 1 from extended gcds over the coordinates.
// Throws ImprimitiveForm unless Q is primitive.
Character dual_character(const QuadForm& q);

enum class Extension { extends_nonvanishing, extends_vanishing, does_not_extend };
std::string to_string(Extension e);

// Behaviour of e^chi across the boundary divisor of the ray through Q.
Extension character_extends(const Character& chi, const QuadForm& q);

// B^T B for a random integer r x g' matrix B with entries in [-2, 2],
// redrawn until the exact rank is r.
QuadForm random_psd_form(std::size_t g_prime, std::size_t rank, std::mt19937_64& rng);

// Uniform coordinates in [-bound, bound], redrawn until primitive.
QuadForm random_primitive_form(std::size_t g_prime, std::int64_t bound, std::mt19937_64& rng);

}  // namespace kuga
