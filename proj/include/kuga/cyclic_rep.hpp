#pragma once

// Rational representations of finite cyclic groups, their eigenvalue angles
// and the Hodge-compatible half-splittings of those eigenvalues.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kuga {

// An element of Q/Z, kept as a reduced fraction in [0, 1).
// The eigenvalue exp(2 pi i a) is identified with its angle a.
class Angle {
 public:
  Angle() = default;
  // Any integer numerator is accepted and reduced modulo 1.
  Angle(std::int64_t num, std::int64_t den);

  static Angle parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  // (1 - a) mod 1, the angle of the complex conjugate eigenvalue.
  Angle conj() const;
  mpq_class value() const { return mpq_class(num_, den_); }
  std::string str() const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b) = default;
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using AngleMultiset = std::vector<Angle>;

// Canonical form of a multiset: ascending order.
AngleMultiset canonical(AngleMultiset angles);
std::vector<std::string> angle_strings(const AngleMultiset& angles);

struct CyclotomicComponent {
  std::int64_t d = 1;
  std::int64_t mult = 1;

  friend auto operator<=>(const CyclotomicComponent&, const CyclotomicComponent&) = default;
};

class RepError : public std::invalid_argument {
 public:
  enum class Kind { syntax, parity, dimension };
  RepError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A rational representation  V_{d_1}^{m_1} + ... + V_{d_r}^{m_r}  of a cyclic
// group, where V_d is the unique faithful irreducible Q-representation of Z/d
// (dimension phi(d)). Components are merged by d and sorted by (d, mult).
class RationalRep {
 public:
  // Validates: positive orders and multiplicities, even multiplicity of V_1 and
  // V_2, total dimension even and at least 4.
  static RationalRep make(std::vector<CyclotomicComponent> components);

  const std::vector<CyclotomicComponent>& components() const { return components_; }
  std::int64_t two_g() const { return two_g_; }
  std::int64_t g() const { return two_g_ / 2; }
  bool is_identity() const;
  std::int64_t multiplicity(std::int64_t d) const;

  // Eigenvalue angles of the whole representation over C, ascending.
  AngleMultiset angles() const;

  // Human readable label, largest order first: "V6+V1^2".
  std::string label() const;

  friend bool operator==(const RationalRep&, const RationalRep&) = default;
  friend auto operator<=>(const RationalRep& a, const RationalRep& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<CyclotomicComponent> components_;
  std::int64_t two_g_ = 0;
};

// The g eigenvalue angles of the (1,0)-part V of a Hodge decomposition
// Lambda_C = V + conj(V) compatible with the group action.
struct HodgeSplitting {
  AngleMultiset v_angles;

  friend bool operator==(const HodgeSplitting&, const HodgeSplitting&) = default;
  friend auto operator<=>(const HodgeSplitting& a, const HodgeSplitting& b) {
    return a.v_angles <=> b.v_angles;
  }
};

std::int64_t euler_phi(std::int64_t d);

// Primitive d-th roots of unity as angles k/d, gcd(k, d) = 1, ascending.
AngleMultiset component_angles(std::int64_t d);

// Every rational representation of total dimension two_g with even
// multiplicity at d = 1, 2, in ascending component order. Throws
// std::invalid_argument for odd or < 4 input.
std::vector<RationalRep> enumerate_reps(std::int64_t two_g);

// All distinct Hodge-compatible splittings of rep.
std::vector<HodgeSplitting> enumerate_splittings(const RationalRep& rep);

// True iff the splitting's angles together with their conjugates give the
// full eigenvalue multiset of rep, with the +-1 eigenspaces halved.
bool is_splitting_of(const RationalRep& rep, const HodgeSplitting& splitting);

// Grammar: V<d>[^<mult>] ('+' V<d>[^<mult>])*
RationalRep parse_rep(std::string_view label);

}  // namespace kuga
