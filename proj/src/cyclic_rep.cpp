#include "kuga/cyclic_rep.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace kuga {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw RepError(RepError::Kind::syntax,
                   "expected integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("angle denominator must be positive");
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Angle(parse_int(text, "angle"), 1);
  }
  return Angle(parse_int(text.substr(0, slash), "angle numerator"),
               parse_int(text.substr(slash + 1), "angle denominator"));
}

Angle Angle::conj() const { return Angle(den_ - num_, den_); }

std::string Angle::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle operator+(const Angle& a, const Angle& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Angle(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

AngleMultiset canonical(AngleMultiset angles) {
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<std::string> angle_strings(const AngleMultiset& angles) {
  std::vector<std::string> out;
  out.reserve(angles.size());
  for (const auto& a : angles) out.push_back(a.str());
  return out;
}

std::int64_t euler_phi(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
  std::int64_t result = d;
  std::int64_t n = d;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

AngleMultiset component_angles(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("component_angles: d must be >= 1");
  AngleMultiset out;
  for (std::int64_t k = 0; k < d; ++k) {
    if (std::gcd(k, d) == 1) out.emplace_back(k, d);
  }
  return out;
}

RationalRep RationalRep::make(std::vector<CyclotomicComponent> components) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& c : components) {
    if (c.d < 1 || c.mult < 1) {
      throw RepError(RepError::Kind::syntax, "component order and multiplicity must be positive");
    }
    merged[c.d] += c.mult;
  }
  RationalRep rep;
  for (const auto& [d, mult] : merged) {
    if ((d == 1 || d == 2) && mult % 2 != 0) {
      throw RepError(RepError::Kind::parity,
                     "multiplicity of V" + std::to_string(d) + " must be even, got " + std::to_string(mult));
    }
    rep.components_.push_back({d, mult});
    rep.two_g_ += mult * euler_phi(d);
  }
  std::sort(rep.components_.begin(), rep.components_.end());
  if (rep.two_g_ % 2 != 0 || rep.two_g_ < 4) {
    throw RepError(RepError::Kind::dimension,
                   "total dimension must be even and >= 4, got " + std::to_string(rep.two_g_));
  }
  return rep;
}

bool RationalRep::is_identity() const {
  return components_.size() == 1 && components_.front().d == 1;
}

std::int64_t RationalRep::multiplicity(std::int64_t d) const {
  for (const auto& c : components_) {
    if (c.d == d) return c.mult;
  }
  return 0;
}

AngleMultiset RationalRep::angles() const {
  AngleMultiset out;
  out.reserve(static_cast<std::size_t>(two_g_));
  for (const auto& c : components_) {
    const auto base = component_angles(c.d);
    for (std::int64_t i = 0; i < c.mult; ++i) out.insert(out.end(), base.begin(), base.end());
  }
  return canonical(std::move(out));
}

std::string RationalRep::label() const {
  std::string out;
  for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
    if (!out.empty()) out += '+';
    out += 'V' + std::to_string(it->d);
    if (it->mult != 1) out += '^' + std::to_string(it->mult);
  }
  return out;
}

std::vector<RationalRep> enumerate_reps(std::int64_t two_g) {
  if (two_g < 4 || two_g % 2 != 0) {
    throw std::invalid_argument("enumerate_reps: two_g must be even and >= 4");
  }
  // phi(d) >= sqrt(d/2), so no order beyond 2 * two_g^2 can fit.
  std::vector<std::pair<std::int64_t, std::int64_t>> orders;  // (d, phi(d))
  for (std::int64_t d = 1; d <= 2 * two_g * two_g; ++d) {
    const auto p = euler_phi(d);
    if (p <= two_g) orders.emplace_back(d, p);
  }

  std::vector<RationalRep> out;
  std::vector<CyclotomicComponent> current;
  auto recurse = [&](auto&& self, std::size_t index, std::int64_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(RationalRep::make(current));
      return;
    }
    if (index == orders.size()) return;
    const auto [d, p] = orders[index];
    const std::int64_t step = (d <= 2) ? 2 : 1;
    self(self, index + 1, remaining);
    for (std::int64_t mult = step; mult * p <= remaining; mult += step) {
      current.push_back({d, mult});
      self(self, index + 1, remaining - mult * p);
      current.pop_back();
    }
  };
  recurse(recurse, 0, two_g);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct SplittingPlan {
  AngleMultiset forced;                          // halves of the 0 and 1/2 eigenspaces
  std::vector<std::pair<Angle, std::int64_t>> pairs;  // a in (0, 1/2) with mult of a in Lambda
};

SplittingPlan plan_splittings(const RationalRep& rep) {
  std::map<Angle, std::int64_t> counts;
  for (const auto& a : rep.angles()) ++counts[a];
  const Angle half(1, 2);
  SplittingPlan plan;
  for (const auto& [a, mult] : counts) {
    if (a.is_zero() || a == half) {
      plan.forced.insert(plan.forced.end(), static_cast<std::size_t>(mult / 2), a);
    } else if (a < half) {
      plan.pairs.emplace_back(a, mult);
    }
  }
  return plan;
}

}  // namespace

std::vector<HodgeSplitting> enumerate_splittings(const RationalRep& rep) {
  const auto plan = plan_splittings(rep);
  std::vector<HodgeSplitting> out;
  std::vector<std::int64_t> choice(plan.pairs.size(), 0);
  while (true) {
    AngleMultiset v = plan.forced;
    for (std::size_t i = 0; i < plan.pairs.size(); ++i) {
      const auto& [a, mult] = plan.pairs[i];
      v.insert(v.end(), static_cast<std::size_t>(choice[i]), a);
      v.insert(v.end(), static_cast<std::size_t>(mult - choice[i]), a.conj());
    }
    out.push_back({canonical(std::move(v))});

    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] <= plan.pairs[i].second) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_splitting_of(const RationalRep& rep, const HodgeSplitting& splitting) {
  if (static_cast<std::int64_t>(splitting.v_angles.size()) != rep.g()) return false;
  std::map<Angle, std::int64_t> lambda;
  for (const auto& a : rep.angles()) ++lambda[a];
  std::map<Angle, std::int64_t> v;
  for (const auto& a : splitting.v_angles) {
    if (!lambda.contains(a)) return false;
    ++v[a];
  }
  const Angle half(1, 2);
  for (const auto& [a, mult] : lambda) {
    const auto here = v.contains(a) ? v.at(a) : 0;
    if (a.is_zero() || a == half) {
      if (2 * here != mult) return false;
    } else {
      const auto there = v.contains(a.conj()) ? v.at(a.conj()) : 0;
      if (here + there != mult) return false;
    }
  }
  return true;
}

RationalRep parse_rep(std::string_view label) {
  std::vector<CyclotomicComponent> components;
  std::size_t pos = 0;
  if (label.empty()) throw RepError(RepError::Kind::syntax, "empty representation label");
  while (pos <= label.size()) {
    const auto end = std::min(label.find('+', pos), label.size());
    const auto term = label.substr(pos, end - pos);
    if (term.size() < 2 || term.front() != 'V') {
      throw RepError(RepError::Kind::syntax, "bad term '" + std::string(term) + "' in '" + std::string(label) + "'");
    }
    const auto caret = term.find('^');
    CyclotomicComponent c;
    c.d = parse_int(term.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), "order");
    c.mult = caret == std::string_view::npos ? 1 : parse_int(term.substr(caret + 1), "multiplicity");
    if (c.d < 1 || c.mult < 1) {
      throw RepError(RepError::Kind::syntax, "order and multiplicity must be positive in '" + std::string(term) + "'");
    }
    components.push_back(c);
    if (end == label.size()) break;
    pos = end + 1;
  }
  return RationalRep::make(std::move(components));
}

}  // namespace kuga
