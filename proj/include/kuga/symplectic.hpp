#pragma once

// Exact symplectic linear algebra over Q.
//
// Basis convention: e_1..e_g, e_{g+1}..e_{2g} with (e_i, e_{g+i}) = 1 =
// -(e_{g+i}, e_i) and all other pairings zero, so (x, y) = x^T J y with
// J = [[0, I], [-I, 0]]. Vectors are columns; a matrix M acts as v -> M v.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kuga {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalVector apply(std::span<const Rational> v) const;

  // Row-major "p/q" strings.
  std::vector<std::vector<std::string>> to_strings() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t g);

  std::size_t g() const { return g_; }
  std::size_t dim() const { return 2 * g_; }
  const RationalMatrix& gram() const { return gram_; }
  Rational pairing(std::span<const Rational> x, std::span<const Rational> y) const;

 private:
  std::size_t g_;
  RationalMatrix gram_;
};

// (x, y) for vectors of equal even length 2g.
Rational symplectic_pairing(std::span<const Rational> x, std::span<const Rational> y);

// v -> v + (m, v) l + (l, v) m. Requires (m, l) = 0.
RationalMatrix transvection_pair(std::span<const Rational> m, std::span<const Rational> l);

// v -> v + (u, v) u. With u = e_1 this sends e_{g+1} to e_{g+1} + e_1.
RationalMatrix symplectic_transvection(std::span<const Rational> u);

// Exact test M^T J M = J. Throws std::invalid_argument for non-square or odd size.
bool is_symplectic(const RationalMatrix& m);

// The isotropic subspace I = span{e_1..e_k}; its orthogonal I^perp is
// everything with zero e_{g+1}..e_{g+k} coordinates.
struct IsotropicFlag {
  std::size_t g = 2;
  std::size_t k = 2;

  bool in_isotropic(std::span<const Rational> v) const;
  bool in_perp(std::span<const Rational> v) const;
};

struct RelationInstance {
  IsotropicFlag flag;
  RationalVector m, m2;  // in I^perp
  RationalVector l, l2;  // in I
  Rational alpha;        // scalar of the first relation
};

struct RelationReport {
  bool scaling = false;        // T_{a m, l} = T_{m, a l}
  bool additivity = false;     // T_{m,l} T_{m,l'} = T_{m,l+l'}
  bool composition = false;    // T_{m,l} T_{m',l} = T_{l, b l} T_{m+m',l}, b = (m, m')/2
  bool symmetry = false;       // T_{l,l'} = T_{l',l}
  bool all_symplectic = false; // every matrix built along the way

  bool all() const { return scaling && additivity && composition && symmetry && all_symplectic; }
};

// Throws std::invalid_argument if m, m2 are not in I^perp or l, l2 not in I.
RelationReport check_relations(const RelationInstance& instance);

// Random rational instance with entries p/q, |p| <= 3, 1 <= q <= 3, and a
// random isotropic dimension k in [1, g].
RelationInstance random_relation_instance(std::size_t g, std::mt19937_64& rng);

// Product of `length` symplectic transvections with integer vectors drawn
// uniformly from [-2, 2]^{2g}. Deterministic per (g, length, seed).
RationalMatrix random_word(std::size_t g, std::size_t length, std::uint64_t seed);

}  // namespace kuga
