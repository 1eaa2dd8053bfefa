#include "kuga/cone_lab.hpp"

#include <algorithm>
#include <limits>

namespace kuga {

namespace {

std::size_t g_prime_from_count(std::size_t count) {
  std::size_t g = 0;
  while (g * (g + 1) / 2 < count) ++g;
  if (g == 0 || g * (g + 1) / 2 != count) {
    throw std::invalid_argument("quadratic form needs g'(g'+1)/2 coordinates, got " + std::to_string(count));
  }
  return g;
}

template <typename T>
std::vector<std::vector<T>> full_matrix(const QuadForm& q) {
  const auto n = q.g_prime();
  std::vector<std::vector<T>> m(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = T(static_cast<long>(q.entry(i, j)));
  return m;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("character coordinate does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

QuadForm::QuadForm(std::vector<std::int64_t> coords)
    : g_prime_(g_prime_from_count(coords.size())), coords_(std::move(coords)) {}

QuadForm QuadForm::from_matrix(const std::vector<std::vector<std::int64_t>>& symmetric) {
  const auto n = symmetric.size();
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (symmetric[i].size() != n) throw std::invalid_argument("quadratic form matrix must be square");
    for (std::size_t j = i; j < n; ++j) {
      if (symmetric[i][j] != symmetric[j][i]) throw std::invalid_argument("quadratic form matrix must be symmetric");
      coords.push_back(symmetric[i][j]);
    }
  }
  return QuadForm(std::move(coords));
}

std::size_t triangular_index(std::size_t g_prime, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= g_prime) throw std::out_of_range("quadratic form index out of range");
  // Rows 0..i-1 hold g', g'-1, ..., g'-i+1 entries.
  return i * g_prime - i * (i - 1) / 2 + (j - i);
}

std::int64_t QuadForm::entry(std::size_t i, std::size_t j) const { return coords_[triangular_index(g_prime_, i, j)]; }

bool QuadForm::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

mpz_class pairing(const Character& chi, const QuadForm& q) {
  if (chi.coords.size() != q.coords().size()) throw std::invalid_argument("character and form have different sizes");
  mpz_class total = 0;
  for (std::size_t i = 0; i < chi.coords.size(); ++i) {
    total += mpz_class(static_cast<long>(chi.coords[i])) * mpz_class(static_cast<long>(q.coords()[i]));
  }
  return total;
}

std::string to_string(ConeRegion region) {
  switch (region) {
    case ConeRegion::interior: return "interior";
    case ConeRegion::boundary: return "boundary";
    case ConeRegion::outside: return "outside";
  }
  return "unknown";
}

std::size_t exact_rank(const QuadForm& q) {
  auto a = full_matrix<mpz_class>(q);
  const auto n = a.size();
  mpz_class prev = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t r = k; r < n && pr == n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) break;
    std::swap(a[k], a[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return k;
}

bool is_positive_semidefinite(const QuadForm& q) {
  auto a = full_matrix<mpq_class>(q);
  std::vector<std::size_t> live(a.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  while (!live.empty()) {
    std::size_t pivot = live.size();
    for (std::size_t k = 0; k < live.size(); ++k) {
      const auto& d = a[live[k]][live[k]];
      if (sgn(d) < 0) return false;
      if (sgn(d) > 0 && pivot == live.size()) pivot = k;
    }
    if (pivot == live.size()) {
      // Zero diagonal: semidefinite only if the whole block vanishes.
      for (auto i : live)
        for (auto j : live)
          if (sgn(a[i][j]) != 0) return false;
      return true;
    }
    const auto p = live[pivot];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (auto i : live) {
      const mpq_class factor = a[i][p] / a[p][p];
      for (auto j : live) a[i][j] -= factor * a[p][j];
    }
  }
  return true;
}

ConeMembership cone_membership(const QuadForm& q) {
  ConeMembership out;
  out.rank = exact_rank(q);
  if (!is_positive_semidefinite(q)) {
    out.region = ConeRegion::outside;
  } else {
    out.region = out.rank == q.g_prime() ? ConeRegion::interior : ConeRegion::boundary;
  }
  return out;
}

bool is_primitive(const QuadForm& q) {
  if (q.is_zero()) throw std::invalid_argument("is_primitive: zero form");
  mpz_class g = 0;
  for (auto c : q.coords()) g = gcd(g, mpz_class(static_cast<long>(c)));
  return g == 1;
}

Character dual_character(const QuadForm& q) {
  if (q.is_zero() || !is_primitive(q)) throw ImprimitiveForm("dual_character: form is not primitive");
  const auto& coords = q.coords();
  std::vector<mpz_class> coeff(coords.size(), 0);
  mpz_class g = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const mpz_class c(static_cast<long>(coords[i]));
    if (c == 0) continue;
    mpz_class next, s, t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coeff[j] *= s;
    coeff[i] = t;
    g = next;
  }
  Character chi;
  chi.coords.reserve(coeff.size());
  for (const auto& z : coeff) chi.coords.push_back(to_int64(z));
  if (pairing(chi, q) != 1) throw std::logic_error("dual_character: certificate failed to verify");
  return chi;
}

std::string to_string(Extension e) {
  switch (e) {
    case Extension::extends_nonvanishing: return "extends_nonvanishing";
    case Extension::extends_vanishing: return "extends_vanishing";
    case Extension::does_not_extend: return "does_not_extend";
  }
  return "unknown";
}

Extension character_extends(const Character& chi, const QuadForm& q) {
  const int s = sgn(pairing(chi, q));
  if (s == 0) return Extension::extends_nonvanishing;
  return s > 0 ? Extension::extends_vanishing : Extension::does_not_extend;
}

QuadForm random_psd_form(std::size_t g_prime, std::size_t rank, std::mt19937_64& rng) {
  if (g_prime < 1 || rank > g_prime) throw std::invalid_argument("random_psd_form: need rank <= g' and g' >= 1");
  std::uniform_int_distribution<std::int64_t> entry(-2, 2);
  while (true) {
    std::vector<std::vector<std::int64_t>> b(rank, std::vector<std::int64_t>(g_prime));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    std::vector<std::vector<std::int64_t>> q(g_prime, std::vector<std::int64_t>(g_prime, 0));
    for (std::size_t i = 0; i < g_prime; ++i)
      for (std::size_t j = 0; j < g_prime; ++j)
        for (std::size_t k = 0; k < rank; ++k) q[i][j] += b[k][i] * b[k][j];
    auto form = QuadForm::from_matrix(q);
    if (exact_rank(form) == rank) return form;
  }
}

QuadForm random_primitive_form(std::size_t g_prime, std::int64_t bound, std::mt19937_64& rng) {
  if (g_prime < 1 || bound < 1) throw std::invalid_argument("random_primitive_form: need g' >= 1 and bound >= 1");
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  while (true) {
    std::vector<std::int64_t> coords(g_prime * (g_prime + 1) / 2);
    for (auto& c : coords) c = entry(rng);
    QuadForm q(std::move(coords));
    if (!q.is_zero() && is_primitive(q)) return q;
  }
}

}  // namespace kuga
