#include <doctest.h>

#include <cmath>

#include "kuga/asymptotics.hpp"
#include "kuga/siegel.hpp"

using namespace kuga;

namespace {

std::vector<double> t_grid(double t_max = 1e6) {
  auto grid = geometric_grid(1.0, std::pow(10.0, 0.125), static_cast<std::size_t>(std::lround(8 * std::log10(t_max))) + 1);
  grid.back() = t_max;
  return grid;
}

std::vector<double> eps_grid() { return geometric_grid(0.5, 0.5, 40); }

}  // namespace

TEST_CASE("petersson_flow_exponent on diagonal forms") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(2, 2);
  q(0, 0) = 1;
  CHECK(petersson_flow_exponent(id, q, t_grid(1e3)) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(petersson_flow_exponent(id, id, t_grid(1e3)) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(petersson_flow_exponent(id, Eigen::MatrixXd::Zero(2, 2), t_grid())) < 1e-12);

  Eigen::MatrixXd indefinite = id;
  indefinite(1, 1) = -1;
  CHECK_THROWS_AS(petersson_flow_exponent(id, indefinite, t_grid()), std::invalid_argument);
  CHECK_THROWS_AS(petersson_flow_exponent(id, q, geometric_grid(1, 2, 5)), std::invalid_argument);
  CHECK_THROWS_AS(petersson_flow_exponent(-id, q, t_grid()), std::invalid_argument);
}

TEST_CASE("petersson_flow_exponent recovers the rank and is congruence invariant") {
  std::mt19937_64 rng(31);
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::size_t r = 0; r <= g; ++r) {
      const auto q = random_psd_form(g, r, rng);
      const Eigen::MatrixXd im0 = random_siegel_point(static_cast<Eigen::Index>(g), rng).omega().imag();
      const double e = petersson_flow_exponent(im0, form_matrix(q), t_grid());
      CHECK(std::abs(e - static_cast<double>(r)) <= 0.05);

      Eigen::MatrixXd change = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g));
      if (g > 1) change(0, g - 1) = 2;
      const Eigen::MatrixXd congruent = change.transpose() * form_matrix(q) * change;
      CHECK(std::abs(petersson_flow_exponent(im0, congruent, t_grid()) - e) <= 0.05);
    }
  }
}

TEST_CASE("boundary integral closed form") {
  CHECK(boundary_integral_closed_form(0, 1e-4, 0.5) == doctest::Approx(std::log(0.5 / 1e-4)));
  const double expected = (std::pow(std::log(1e4), 2) - std::pow(std::log(2.0), 2)) / 2;
  CHECK(boundary_integral_closed_form(1, 1e-4, 0.5) == doctest::Approx(expected));
  CHECK(boundary_integral_closed_form(-1, 1e-4, 0.5) ==
        doctest::Approx(std::log(std::log(1e4)) - std::log(std::log(2.0))));
  CHECK_THROWS_AS(boundary_integral_closed_form(0, 0.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(boundary_integral_closed_form(0, 0.1, 1.5), std::invalid_argument);
}

TEST_CASE("boundary integral quadrature matches the closed form") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> a_dist(0, 6), log_eps(-18, -2), r_dist(0.2, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = a_dist(rng), eps = std::exp(log_eps(rng)), r = r_dist(rng);
    if (eps >= r) continue;
    CHECK(boundary_integral(a, eps, r).relative_difference() <= 1e-6);
  }
  CHECK(boundary_integral(-1, 1e-6, 0.5).relative_difference() <= 1e-6);
}

TEST_CASE("boundary integral is o(eps^-alpha)") {
  // eps^alpha I(eps) only turns down once -log eps passes (a + 1)/alpha, far
  // below double range for a = 6, alpha = 0.1, so follow it in log space.
  const double lr = std::log(2.0);
  for (double a : {0.0, 1.0, 3.0, 6.0}) {
    for (double alpha : {0.1, 0.5}) {
      const double peak = (a + 1) / alpha;
      auto log_value = [&](double l) {
        return -alpha * l + std::log((std::pow(l, a + 1) - std::pow(lr, a + 1)) / (a + 1));
      };
      CHECK(log_value(0.5 * peak) < log_value(peak));
      double previous = INFINITY;
      for (double l = 2 * peak; l <= 40 * peak; l *= 1.5) {
        CHECK(log_value(l) < previous);
        previous = log_value(l);
      }
      CHECK(previous < std::log(1e-6));
    }
  }
  // Where eps is representable the closed form agrees with the log-space form.
  CHECK(std::log(std::pow(1e-8, 0.5) * boundary_integral_closed_form(3, 1e-8, 0.5)) ==
        doctest::Approx(-0.5 * std::log(1e8) + std::log((std::pow(std::log(1e8), 4) - std::pow(lr, 4)) / 4)));
}

TEST_CASE("pole integrals") {
  CHECK(pole_integral_closed_form(2, 2, 1e-3, 1.0) == doctest::Approx(std::log(1e3)));
  CHECK(pole_integral_closed_form(0, 1, 0.0 + 1e-9, 1.0) == doctest::Approx(0.5));
  for (std::int64_t m : {1, 2, 3, 5})
    for (std::int64_t nu = 0; nu <= m + 2; ++nu) {
      const double q = pole_integral_quadrature(nu, m, 1e-9, 1.0);
      const double c = pole_integral_closed_form(nu, m, 1e-9, 1.0);
      CHECK(std::abs(q - c) <= 1e-6 * std::abs(c));
    }
}

TEST_CASE("pole_model_classify trichotomy") {
  for (std::int64_t m : {1, 2, 3, 5}) {
    auto r = pole_model_classify(m - 1, m, eps_grid());
    CHECK(r.growth.kind == GrowthKind::bounded);
    r = pole_model_classify(m, m, eps_grid());
    CHECK(r.growth.kind == GrowthKind::logarithmic);
    r = pole_model_classify(m + 1, m, eps_grid());
    CHECK(r.growth.kind == GrowthKind::power);
    CHECK(std::abs(r.growth.exponent / (2.0 / static_cast<double>(m)) - 1) <= 0.02);
    CHECK(r.max_relative_difference <= 1e-6);
  }
}

TEST_CASE("pole_model_classify is monotone in nu") {
  for (std::int64_t m : {1, 2, 3, 4, 5, 6}) {
    int previous = 0;
    for (std::int64_t nu = 0; nu <= 2 * m; ++nu) {
      const int rank = static_cast<int>(pole_model_classify(nu, m, eps_grid()).growth.kind);
      CHECK(rank >= previous);
      previous = rank;
    }
  }
}

TEST_CASE("pole_model_classify rejects degenerate grids") {
  CHECK_THROWS_AS(pole_model_classify(1, 1, geometric_grid(0.5, 0.5, 10), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pole_model_classify(1, 1, geometric_grid(0.5, 0.5, 2), 1.0), std::invalid_argument);
  auto bent = eps_grid();
  bent[5] *= 1.1;
  CHECK_THROWS_AS(pole_model_classify(1, 1, bent, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pole_model_classify(1, 0, eps_grid(), 1.0), std::invalid_argument);
}

TEST_CASE("snc_convergence") {
  auto r = snc_convergence(1, 3);
  CHECK(r.converges);
  CHECK(r.min_exponent == doctest::Approx(1.0));
  r = snc_convergence(2, 1);
  CHECK(r.converges);
  CHECK(r.min_exponent == doctest::Approx(0.0));
  r = snc_convergence(10, 5);
  CHECK(r.converges);
  CHECK(r.min_exponent == doctest::Approx(-0.8));
  CHECK(r.margin == doctest::Approx(0.2));
  for (std::int64_t m = 1; m <= 50; ++m) CHECK(snc_convergence(m, 2).converges);

  const std::vector<double> divergent{0.5, -1.0};
  CHECK_FALSE(snc_convergence(1, 2, divergent).converges);
  CHECK_THROWS_AS(snc_convergence(0, 1), std::invalid_argument);
}
