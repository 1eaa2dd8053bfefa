#include "kuga/siegel.hpp"

#include <algorithm>
#include <cmath>

namespace kuga {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kMaxCondition = 1e12;

// The solve and determinants run in extended precision: images of long
// symplectic words have real parts far larger than their imaginary parts.
using WideComplex = std::complex<long double>;
using WideMatrix = WideComplexMatrix;

WideMatrix widen(const RealMatrix& m) { return m.cast<long double>().cast<WideComplex>(); }
WideMatrix widen(const ComplexMatrix& m) { return m.cast<WideComplex>(); }

bool positive_definite(const RealMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.info() == Eigen::Success && eig.eigenvalues().minCoeff() > 0;
}

void check_shape(const RealMatrix& m, Eigen::Index g) {
  if (m.rows() != 2 * g || m.cols() != 2 * g) {
    throw std::invalid_argument("symplectic matrix must be 2g x 2g for a genus g point");
  }
}

WideMatrix automorphy_matrix(const RealMatrix& m, const SiegelPoint& omega) {
  check_shape(m, omega.genus());
  const auto blk = split_blocks(m);
  return widen(blk.c) * omega.wide() + widen(blk.d);
}

}  // namespace

SiegelPoint::SiegelPoint(ComplexMatrix omega) : omega_(std::move(omega)), wide_(widen(omega_)) { validate(); }

SiegelPoint::SiegelPoint(WideComplexMatrix omega)
    : omega_(omega.cast<std::complex<double>>()), wide_(std::move(omega)) {
  validate();
}

void SiegelPoint::validate() const {
  if (omega_.rows() != omega_.cols() || omega_.rows() == 0) throw SiegelError("Siegel point must be square");
  if ((omega_ - omega_.transpose()).norm() > kSymmetryTol) throw SiegelError("Siegel point must be symmetric");
  if (!positive_definite(omega_.imag())) throw SiegelError("imaginary part must be positive definite");
}

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

Blocks split_blocks(const RealMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw std::invalid_argument("expected a 2g x 2g matrix");
  const auto g = m.rows() / 2;
  return {m.topLeftCorner(g, g), m.topRightCorner(g, g), m.bottomLeftCorner(g, g), m.bottomRightCorner(g, g)};
}

SiegelPoint moebius_act(const RealMatrix& m, const SiegelPoint& omega) {
  const WideMatrix denom = automorphy_matrix(m, omega);
  Eigen::JacobiSVD<ComplexMatrix> svd(denom.cast<std::complex<double>>());
  const auto& sv = svd.singularValues();
  if (sv.minCoeff() <= 0 || sv.maxCoeff() / sv.minCoeff() >= kMaxCondition) {
    throw SiegelError("C omega + D is numerically singular");
  }
  const auto blk = split_blocks(m);
  const WideMatrix numer = widen(blk.a) * omega.wide() + widen(blk.b);
  // X = numer * denom^{-1}, solved as denom^T X^T = numer^T.
  WideMatrix image = denom.transpose().partialPivLu().solve(numer.transpose()).transpose();
  const long double scale = std::max(1.0L, image.norm());
  if ((image - image.transpose()).norm() > 1e-9L * scale) {
    throw SiegelError("image is not symmetric; is the matrix symplectic?");
  }
  image = (WideComplex(0.5L) * (image + image.transpose())).eval();
  return SiegelPoint(std::move(image));
}

std::complex<double> factor_of_automorphy(const RealMatrix& m, const SiegelPoint& omega) {
  const WideComplex j = automorphy_matrix(m, omega).determinant();
  return {static_cast<double>(j.real()), static_cast<double>(j.imag())};
}

double petersson_det_im(const SiegelPoint& omega) {
  return static_cast<double>(omega.wide().imag().determinant());
}

double volume_density(const SiegelPoint& omega) {
  return std::pow(petersson_det_im(omega), -static_cast<double>(omega.genus() + 1));
}

SiegelPoint random_siegel_point(Eigen::Index g, std::mt19937_64& rng, double eps) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix s(g, g), b(g, g);
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < g; ++j) b(i, j) = u(rng);
    for (Eigen::Index j = i; j < g; ++j) s(i, j) = s(j, i) = u(rng);
  }
  const RealMatrix im = b * b.transpose() + eps * RealMatrix::Identity(g, g);
  ComplexMatrix omega(g, g);
  omega.real() = s;
  omega.imag() = 0.5 * (im + im.transpose());
  return SiegelPoint(std::move(omega));
}

double relative_error(std::complex<double> lhs, std::complex<double> rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

SiegelVerifyReport verify_siegel_identities(Eigen::Index g, std::int64_t trials, std::uint64_t seed, double tol) {
  if (g < 1 || trials < 0) throw std::invalid_argument("verify_siegel_identities: need g >= 1, trials >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 4);
  SiegelVerifyReport report;
  const auto ug = static_cast<std::size_t>(g);
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto len1 = length(rng);
    const auto seed1 = rng();
    const auto len2 = length(rng);
    const auto seed2 = rng();
    const RealMatrix m1 = to_real(random_word(ug, len1, seed1));
    const RealMatrix m2 = to_real(random_word(ug, len2, seed2));
    const auto omega = random_siegel_point(g, rng);
    ++report.trials;
    try {
      const auto image2 = moebius_act(m2, omega);
      const auto image1 = moebius_act(m1, omega);
      const auto cocycle = relative_error(factor_of_automorphy(m1 * m2, omega),
                                          factor_of_automorphy(m1, image2) * factor_of_automorphy(m2, omega));
      const auto j1 = factor_of_automorphy(m1, omega);
      const double metric =
          relative_error(petersson_det_im(image1) * std::norm(j1), petersson_det_im(omega));
      const double volume = relative_error(
          volume_density(image1),
          volume_density(omega) * std::pow(std::norm(j1), static_cast<double>(g + 1)));
      report.max_cocycle_error = std::max(report.max_cocycle_error, cocycle);
      report.max_metric_error = std::max(report.max_metric_error, metric);
      report.max_volume_error = std::max(report.max_volume_error, volume);
      if (cocycle > tol || metric > tol || volume > tol) ++report.failures;
    } catch (const SiegelError&) {
      ++report.invalid_images;
    }
  }
  return report;
}

}  // namespace kuga
