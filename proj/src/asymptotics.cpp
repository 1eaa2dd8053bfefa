#include "kuga/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kuga {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr unsigned kQuadDepth = 12;

// Slope of the least-squares line through (x, y).
double fit_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("degenerate regression: all abscissae equal");
  return sxy / sxx;
}

bool is_psd(const Eigen::MatrixXd& m, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return eig.eigenvalues().minCoeff() >= -rel_tol * scale;
}

double pole_exponent(std::int64_t nu, std::int64_t m) {
  return 1.0 - 2.0 * static_cast<double>(nu) / static_cast<double>(m);
}

// Index of the grid point closest to, but not below, factor * eps_grid.back().
std::size_t decade_back(std::span<const double> grid, double factor) {
  const double target = factor * grid.back();
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (grid[i] >= target * (1 - 1e-12)) return i;
  }
  throw std::invalid_argument("eps grid does not span the required decades");
}

}  // namespace

std::string to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::bounded: return "bounded";
    case GrowthKind::logarithmic: return "logarithmic";
    case GrowthKind::power: return "power";
  }
  return "unknown";
}

std::vector<double> geometric_grid(double start, double ratio, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start * std::pow(ratio, static_cast<double>(i)));
  return out;
}

double petersson_flow_exponent(const Eigen::MatrixXd& im_omega0, const Eigen::MatrixXd& q,
                               std::span<const double> t_grid) {
  if (im_omega0.rows() != im_omega0.cols() || q.rows() != q.cols() || q.rows() != im_omega0.rows()) {
    throw std::invalid_argument("petersson_flow_exponent: shape mismatch");
  }
  if (!is_psd(q, 1e-12)) throw std::invalid_argument("petersson_flow_exponent: Q is not positive semidefinite");
  Eigen::LLT<Eigen::MatrixXd> llt(im_omega0);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("petersson_flow_exponent: Im omega0 is not positive definite");
  }
  if (t_grid.size() < 2 || !std::is_sorted(t_grid.begin(), t_grid.end()) || t_grid.front() <= 0 ||
      std::adjacent_find(t_grid.begin(), t_grid.end()) != t_grid.end()) {
    throw std::invalid_argument("petersson_flow_exponent: t grid must be positive and strictly increasing");
  }
  const double t_max = t_grid.back();
  if (t_max < 1e3) throw std::invalid_argument("petersson_flow_exponent: t grid must reach 1e3");

  std::vector<double> x, y;
  for (double t : t_grid) {
    if (t < t_max / 10) continue;
    const Eigen::MatrixXd im = im_omega0 + t * q;
    x.push_back(std::log(t));
    y.push_back(std::log(im.determinant()));
  }
  if (x.size() < 2) throw std::invalid_argument("petersson_flow_exponent: top decade holds fewer than 2 points");
  return fit_slope(x, y);
}

Eigen::MatrixXd form_matrix(const QuadForm& q) {
  const auto n = static_cast<Eigen::Index>(q.g_prime());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = static_cast<double>(q.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return m;
}

double integrate_radial(const std::function<double(double)>& f, double lo, double hi) {
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("integrate_radial: need 0 < lo < hi");
  using boost::math::quadrature::gauss_kronrod;
  // In s = log r every dyadic panel has width log 2, so the error estimate
  // does not degrade as the panels shrink towards 0.
  auto g = [&f](double s) {
    const double r = std::exp(s);
    return f(r) * r;
  };
  const double s_lo = std::log(lo), s_hi = std::log(hi);
  // Equal panels of width at most log 2; a rounding sliver at the end would
  // again defeat the error estimate.
  const auto panels = static_cast<int>(std::max(1.0, std::ceil((s_hi - s_lo) / std::log(2.0) - 1e-9)));
  const double width = (s_hi - s_lo) / panels;
  double total = 0;
  for (int i = 0; i < panels; ++i) {
    const double a = s_lo + i * width, b = i + 1 == panels ? s_hi : s_lo + (i + 1) * width;
    total += gauss_kronrod<double, 61>::integrate(g, a, b, kQuadDepth, kQuadTol);
  }
  return total;
}

double BoundaryIntegral::relative_difference() const {
  const double scale = std::max(std::abs(quadrature), std::abs(closed_form));
  return scale == 0 ? 0.0 : std::abs(quadrature - closed_form) / scale;
}

double boundary_integral_closed_form(double a, double eps, double r) {
  if (!(eps > 0) || !(r > eps) || !(r < 1)) throw std::invalid_argument("boundary integral: need 0 < eps < R < 1");
  const double le = -std::log(eps), lr = -std::log(r);
  if (a == -1.0) return std::log(le) - std::log(lr);
  return (std::pow(le, a + 1) - std::pow(lr, a + 1)) / (a + 1);
}

double boundary_integral_quadrature(double a, double eps, double r) {
  if (!(eps > 0) || !(r > eps) || !(r < 1)) throw std::invalid_argument("boundary integral: need 0 < eps < R < 1");
  return integrate_radial([a](double x) { return std::pow(-std::log(x), a) / x; }, eps, r);
}

BoundaryIntegral boundary_integral(double a, double eps, double r) {
  return {boundary_integral_quadrature(a, eps, r), boundary_integral_closed_form(a, eps, r)};
}

double pole_integral_closed_form(std::int64_t nu, std::int64_t m, double eps, double r) {
  if (m < 1) throw std::invalid_argument("pole integral: m must be >= 1");
  if (!(eps > 0) || !(r > eps)) throw std::invalid_argument("pole integral: need 0 < eps < R");
  // 2 - 2 nu / m == 0 exactly when nu == m.
  if (nu == m) return std::log(r / eps);
  const double p = pole_exponent(nu, m) + 1;
  return (std::pow(r, p) - std::pow(eps, p)) / p;
}

double pole_integral_quadrature(std::int64_t nu, std::int64_t m, double eps, double r) {
  if (m < 1) throw std::invalid_argument("pole integral: m must be >= 1");
  const double delta = pole_exponent(nu, m);
  return integrate_radial([delta](double x) { return std::pow(x, delta); }, eps, r);
}

GrowthClass classify_growth(std::span<const double> eps_grid, std::span<const double> values) {
  if (eps_grid.size() != values.size()) throw std::invalid_argument("classify_growth: size mismatch");
  if (eps_grid.size() < 3) throw std::invalid_argument("classify_growth: grid too short");
  const double ratio = eps_grid[1] / eps_grid[0];
  if (!(ratio > 0 && ratio < 1)) throw std::invalid_argument("classify_growth: grid must decrease");
  for (std::size_t i = 1; i < eps_grid.size(); ++i) {
    if (std::abs(eps_grid[i] / eps_grid[i - 1] - ratio) > 1e-9 * ratio) {
      throw std::invalid_argument("classify_growth: grid is not geometric");
    }
  }
  if (eps_grid.back() > 1e-6) throw std::invalid_argument("classify_growth: grid must reach 1e-6");

  const std::size_t last = eps_grid.size() - 1;
  const std::size_t one = decade_back(eps_grid, 10);
  const std::size_t two = decade_back(eps_grid, 100);

  const double change = std::abs(values[last] - values[one]) / std::abs(values[last]);
  if (change < 1e-3) return {GrowthKind::bounded, 0};

  auto log_inv = [](double eps) { return -std::log(eps); };
  const double slope_last = (values[last] - values[one]) / (log_inv(eps_grid[last]) - log_inv(eps_grid[one]));
  const double slope_prev = (values[one] - values[two]) / (log_inv(eps_grid[one]) - log_inv(eps_grid[two]));
  if (std::abs(slope_last / slope_prev - 1) <= 0.02) return {GrowthKind::logarithmic, 0};

  std::vector<double> x, y;
  for (std::size_t i = one; i <= last; ++i) {
    x.push_back(log_inv(eps_grid[i]));
    y.push_back(std::log(std::abs(values[i])));
  }
  return {GrowthKind::power, fit_slope(x, y)};
}

PoleClassification pole_model_classify(std::int64_t nu, std::int64_t m, std::span<const double> eps_grid, double r) {
  if (m < 1) throw std::invalid_argument("pole_model_classify: m must be >= 1");
  if (!eps_grid.empty() && eps_grid.front() >= r) {
    throw std::invalid_argument("pole_model_classify: grid must lie below R");
  }
  PoleClassification out;
  std::vector<double> values;
  for (double eps : eps_grid) {
    PoleSample s{eps, pole_integral_quadrature(nu, m, eps, r), pole_integral_closed_form(nu, m, eps, r)};
    const double scale = std::max(std::abs(s.integral), std::abs(s.closed_form));
    if (scale > 0) {
      out.max_relative_difference = std::max(out.max_relative_difference, std::abs(s.integral - s.closed_form) / scale);
    }
    values.push_back(s.integral);
    out.samples.push_back(s);
  }
  out.growth = classify_growth(eps_grid, values);
  return out;
}

SncResult snc_convergence(std::int64_t m, std::int64_t k, std::span<const double> delta_exponents) {
  if (m < 1 || k < 1) throw std::invalid_argument("snc_convergence: need m >= 1 and k >= 1");
  std::vector<double> deltas(delta_exponents.begin(), delta_exponents.end());
  if (deltas.empty()) deltas.assign(static_cast<std::size_t>(k), 2.0 / static_cast<double>(m) - 1.0);
  const double lowest = *std::min_element(deltas.begin(), deltas.end());
  return {lowest > -1.0, lowest, lowest + 1.0};
}

}  // namespace kuga
