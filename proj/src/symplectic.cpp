#include "kuga/symplectic.hpp"

#include <stdexcept>

namespace kuga {

namespace {

std::size_t genus_of(std::size_t size) {
  if (size == 0 || size % 2 != 0) throw std::invalid_argument("symplectic vectors must have even positive length");
  return size / 2;
}

// Row covector w -> (x, w), i.e. x^T J.
RationalVector pairing_covector(std::span<const Rational> x) {
  const auto g = genus_of(x.size());
  RationalVector row(2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    row[g + i] = x[i];
    row[i] = -x[g + i];
  }
  return row;
}

// I + a b^T + c d^T
RationalMatrix rank_two_update(std::span<const Rational> a, std::span<const Rational> b,
                               std::span<const Rational> c, std::span<const Rational> d) {
  auto out = RationalMatrix::identity(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t col = 0; col < a.size(); ++col) out(r, col) += a[r] * b[col] + c[r] * d[col];
  }
  return out;
}

RationalVector scaled(std::span<const Rational> v, const Rational& s) {
  RationalVector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

RationalVector sum(std::span<const Rational> a, std::span<const Rational> b) {
  RationalVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).get_str();
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

SymplecticSpace::SymplecticSpace(std::size_t g) : g_(g), gram_(2 * g, 2 * g) {
  if (g < 1) throw std::invalid_argument("symplectic space needs g >= 1");
  for (std::size_t i = 0; i < g; ++i) {
    gram_(i, g + i) = 1;
    gram_(g + i, i) = -1;
  }
}

Rational SymplecticSpace::pairing(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("vector length does not match 2g");
  return symplectic_pairing(x, y);
}

Rational symplectic_pairing(std::span<const Rational> x, std::span<const Rational> y) {
  const auto g = genus_of(x.size());
  if (y.size() != x.size()) throw std::invalid_argument("pairing of vectors of different length");
  Rational out = 0;
  for (std::size_t i = 0; i < g; ++i) out += x[i] * y[g + i] - x[g + i] * y[i];
  return out;
}

RationalMatrix transvection_pair(std::span<const Rational> m, std::span<const Rational> l) {
  if (symplectic_pairing(m, l) != 0) {
    throw std::invalid_argument("transvection_pair: (m, l) must vanish");
  }
  return rank_two_update(l, pairing_covector(m), m, pairing_covector(l));
}

RationalMatrix symplectic_transvection(std::span<const Rational> u) {
  const auto n = 2 * genus_of(u.size());
  auto out = RationalMatrix::identity(n);
  const auto row = pairing_covector(u);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) += u[r] * row[c];
  return out;
}

bool is_symplectic(const RationalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument("is_symplectic: matrix must be square of even size");
  }
  const SymplecticSpace space(m.rows() / 2);
  return m.transpose() * space.gram() * m == space.gram();
}

bool IsotropicFlag::in_isotropic(std::span<const Rational> v) const {
  if (v.size() != 2 * g) return false;
  for (std::size_t i = k; i < 2 * g; ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

bool IsotropicFlag::in_perp(std::span<const Rational> v) const {
  if (v.size() != 2 * g) return false;
  for (std::size_t i = g; i < g + k; ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

RelationReport check_relations(const RelationInstance& in) {
  const auto& f = in.flag;
  if (f.k < 1 || f.k > f.g) throw std::invalid_argument("check_relations: need 1 <= k <= g");
  if (!f.in_perp(in.m) || !f.in_perp(in.m2)) {
    throw std::invalid_argument("check_relations: m and m' must lie in the orthogonal of I");
  }
  if (!f.in_isotropic(in.l) || !f.in_isotropic(in.l2)) {
    throw std::invalid_argument("check_relations: l and l' must lie in I");
  }

  bool symplectic = true;
  auto T = [&](std::span<const Rational> a, std::span<const Rational> b) {
    auto t = transvection_pair(a, b);
    symplectic = symplectic && is_symplectic(t);
    return t;
  };

  RelationReport report;
  report.scaling = T(scaled(in.m, in.alpha), in.l) == T(in.m, scaled(in.l, in.alpha));
  report.additivity = T(in.m, in.l) * T(in.m, in.l2) == T(in.m, sum(in.l, in.l2));
  const Rational beta = symplectic_pairing(in.m, in.m2) / 2;
  report.composition = T(in.m, in.l) * T(in.m2, in.l) == T(in.l, scaled(in.l, beta)) * T(sum(in.m, in.m2), in.l);
  report.symmetry = T(in.l, in.l2) == T(in.l2, in.l);
  report.all_symplectic = symplectic;
  return report;
}

RelationInstance random_relation_instance(std::size_t g, std::mt19937_64& rng) {
  if (g < 1) throw std::invalid_argument("random_relation_instance: g must be >= 1");
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  std::uniform_int_distribution<std::size_t> kdist(1, g);
  auto value = [&] {
    const long p = num(rng);
    Rational q(p, den(rng));
    q.canonicalize();
    return q;
  };

  RelationInstance in;
  in.flag = {g, kdist(rng)};
  auto draw = [&](bool isotropic) {
    RationalVector v(2 * g);
    for (std::size_t i = 0; i < 2 * g; ++i) {
      const bool allowed = isotropic ? i < in.flag.k : !(i >= g && i < g + in.flag.k);
      if (allowed) v[i] = value();
    }
    return v;
  };
  in.m = draw(false);
  in.m2 = draw(false);
  in.l = draw(true);
  in.l2 = draw(true);
  in.alpha = value();
  return in;
}

RationalMatrix random_word(std::size_t g, std::size_t length, std::uint64_t seed) {
  if (g < 1) throw std::invalid_argument("random_word: g must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-2, 2);
  auto word = RationalMatrix::identity(2 * g);
  RationalVector u(2 * g);
  for (std::size_t step = 0; step < length; ++step) {
    for (auto& x : u) x = entry(rng);
    word = word * symplectic_transvection(u);
  }
  return word;
}

}  // namespace kuga
