#pragma once

// Floating-point model of the Siegel upper half space: the action of
// Sp(2g, R), the factor of automorphy, and the invariant metric and volume
// densities in the standard frame.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "kuga/symplectic.hpp"

namespace kuga {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
// Extended precision copy kept alongside: images of long symplectic words can
// have an ill-conditioned imaginary part.
using WideComplexMatrix = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

class SiegelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Complex symmetric g x g matrix with positive definite imaginary part.
class SiegelPoint {
 public:
  // Throws SiegelError unless ||omega - omega^T|| <= 1e-12 and Im omega is
  // positive definite.
  explicit SiegelPoint(ComplexMatrix omega);
  explicit SiegelPoint(WideComplexMatrix omega);

  const ComplexMatrix& omega() const { return omega_; }
  const WideComplexMatrix& wide() const { return wide_; }
  Eigen::Index genus() const { return omega_.rows(); }

 private:
  void validate() const;

  ComplexMatrix omega_;
  WideComplexMatrix wide_;
};

RealMatrix to_real(const RationalMatrix& m);

struct Blocks {
  RealMatrix a, b, c, d;
};
Blocks split_blocks(const RealMatrix& m);

// (A omega + B)(C omega + D)^{-1}. Throws SiegelError if C omega + D has
// condition number >= 1e12.
SiegelPoint moebius_act(const RealMatrix& m, const SiegelPoint& omega);

// det(C omega + D).
std::complex<double> factor_of_automorphy(const RealMatrix& m, const SiegelPoint& omega);

// det Im omega: the Petersson norm of the standard frame section.
double petersson_det_im(const SiegelPoint& omega);

// det(Im omega)^{-(g+1)}: the invariant volume density against the flat one.
double volume_density(const SiegelPoint& omega);

// S + i (B B^T + eps I), S symmetric and B with entries uniform in [-1, 1].
SiegelPoint random_siegel_point(Eigen::Index g, std::mt19937_64& rng, double eps = 0.1);

double relative_error(std::complex<double> lhs, std::complex<double> rhs);

struct SiegelVerifyReport {
  std::int64_t trials = 0;
  double max_cocycle_error = 0;
  double max_metric_error = 0;
  double max_volume_error = 0;
  std::int64_t invalid_images = 0;  // images that left the half space
  std::int64_t failures = 0;        // trials with any error above tolerance

  bool passed() const { return failures == 0 && invalid_images == 0; }
};

// Checks, on random (M, M', omega) with M, M' random symplectic words:
//   j(M M', omega) = j(M, M' omega) j(M', omega)
//   det Im(M omega) |j(M, omega)|^2 = det Im omega
//   density(M omega) = density(omega) |j(M, omega)|^{2(g+1)}
SiegelVerifyReport verify_siegel_identities(Eigen::Index g, std::int64_t trials, std::uint64_t seed,
                                            double tol = 1e-9);

}  // namespace kuga
