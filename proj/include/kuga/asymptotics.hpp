#pragma once

// Growth laws near the boundary: the Petersson norm along a degenerating
// flow, log-power annulus integrals, and the radial pole-order model.
// Every estimate here holds only up to a constant, so the checks fit
// exponents and slopes, never absolute values.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kuga/cone_lab.hpp"

namespace kuga {

enum class GrowthKind { bounded, logarithmic, power };

std::string to_string(GrowthKind kind);

struct GrowthClass {
  GrowthKind kind = GrowthKind::bounded;
  double exponent = 0;  // power case only
};

// start, start*ratio, start*ratio^2, ... (count points).
std::vector<double> geometric_grid(double start, double ratio, std::size_t count);

// Least-squares slope of log det(im_omega0 + t Q) against log t, over the
// grid points in the top decade [t_max / 10, t_max]. Throws
// std::invalid_argument if Q is not positive semidefinite, im_omega0 not
// positive definite, or the grid is not increasing with t_max >= 1e3.
double petersson_flow_exponent(const Eigen::MatrixXd& im_omega0, const Eigen::MatrixXd& q,
                               std::span<const double> t_grid);

Eigen::MatrixXd form_matrix(const QuadForm& q);

// Adaptive Gauss-Kronrod on the dyadic panels of [lo, hi], 0 < lo < hi,
// after the substitution r = e^s.
double integrate_radial(const std::function<double(double)>& f, double lo, double hi);

struct BoundaryIntegral {
  double quadrature = 0;
  double closed_form = 0;
  double relative_difference() const;
};

// int_eps^R |log r|^a r^{-1} dr, 0 < eps < R < 1.
double boundary_integral_closed_form(double a, double eps, double r);
double boundary_integral_quadrature(double a, double eps, double r);
BoundaryIntegral boundary_integral(double a, double eps, double r);

// int_eps^R r^{1 - 2 nu / m} dr.
double pole_integral_closed_form(std::int64_t nu, std::int64_t m, double eps, double r);
double pole_integral_quadrature(std::int64_t nu, std::int64_t m, double eps, double r);

// Growth of eps -> values along a decreasing geometric grid whose smallest
// point is <= 1e-6:
//   bounded      relative change < 1e-3 over the last decade
//   logarithmic  slope against log(1/eps) constant to within 2% between the
//                last two decades
//   power        otherwise; exponent fitted in log-log over the last decade
GrowthClass classify_growth(std::span<const double> eps_grid, std::span<const double> values);

struct PoleSample {
  double eps = 0;
  double integral = 0;     // quadrature
  double closed_form = 0;
};

struct PoleClassification {
  GrowthClass growth;
  std::vector<PoleSample> samples;
  double max_relative_difference = 0;  // quadrature vs closed form
};

// classify_growth applied to eps -> int_eps^R r^{1 - 2 nu / m} dr.
PoleClassification pole_model_classify(std::int64_t nu, std::int64_t m, std::span<const double> eps_grid,
                                       double r = 1.0);

struct SncResult {
  bool converges = false;
  double min_exponent = 0;
  double margin = 0;  // min_exponent + 1
};

// Radial exponents of a pluricanonical form with poles of order m - 1 along
// k crossing branches. With no explicit exponents, each branch contributes
// 2/m - 1.
SncResult snc_convergence(std::int64_t m, std::int64_t k, std::span<const double> delta_exponents = {});

}  // namespace kuga
