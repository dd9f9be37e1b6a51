#include <doctest.h>

#include <array>
#include <cmath>

#include "ballft/ball.hpp"
#include "ballft/classical.hpp"
#include "ballft/errors.hpp"
#include "ballft/quadrature.hpp"

using namespace ballft;

TEST_SUITE("ball") {

TEST_CASE("multi-index basics") {
  const MultiIndex n{1, 0, 2};
  CHECK(n.dimension() == 3);
  CHECK(n.total_degree() == 3);
  CHECK(n.tail_sum(1) == 2);
  CHECK(n.tail_sum(3) == 0);
  CHECK(n.to_string() == "1,0,2");
  CHECK(MultiIndex::parse("1,0,2") == n);
  CHECK(n.without_first() == MultiIndex{0, 2});
  CHECK(n.without_last() == MultiIndex{1, 0});
  CHECK_THROWS_AS(MultiIndex::parse("1,-1"), ParameterError);
  CHECK_THROWS_AS(MultiIndex::parse("1,x"), ParameterError);
}

TEST_CASE("space dimensions") {
  CHECK(ball_space_dim(3, 2) == 4);
  CHECK(ball_space_dim(2, 3) == 6);
  CHECK(ball_space_dim(0, 5) == 1);
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(enumerate_multi_indices(r, n).size() == ball_space_dim(n, r));
    }
  }
  const auto all = enumerate_multi_indices_up_to(2, 2);
  CHECK(all.size() == 6);
}

TEST_CASE("basis values") {
  const std::array<double, 2> x{0.3, 0.4};
  CHECK(ball_basis_eval(MultiIndex{0, 1}, BallParams{1.0}, x) == doctest::Approx(0.8).epsilon(1e-15));
  const std::array<double, 1> t{0.37};
  CHECK(ball_basis_eval(MultiIndex{4}, BallParams{0.8}, t) ==
        doctest::Approx(gegenbauer(4, 0.8, 0.37)).epsilon(1e-14));
  const std::array<double, 2> origin{0.0, 0.0};
  CHECK(ball_basis_eval(MultiIndex{0, 0}, BallParams{0.5}, origin) == 1.0);
}

TEST_CASE("domain") {
  const std::array<double, 2> outside{0.8, 0.7};
  CHECK_THROWS_AS(ball_basis_eval(MultiIndex{1, 1}, BallParams{0.5}, outside), DomainError);
  const std::array<double, 2> edge{std::sqrt(1.0 - 1e-14), 0.0};
  CHECK(std::abs(ball_basis_eval(MultiIndex{0, 2}, BallParams{0.5}, edge)) <= 1e-6);
  CHECK_THROWS_AS(validate(BallParams{0.0}), ParameterError);
  CHECK_THROWS_AS(validate(BallParams{-0.6}), ParameterError);
}

TEST_CASE("norms against quadrature") {
  CHECK(ball_norm(MultiIndex{3}, BallParams{1.3}) == doctest::Approx(gegenbauer_norm(3, 1.3)).epsilon(1e-14));
  for (const auto& n : enumerate_multi_indices_up_to(2, 3)) {
    const BallParams p{1.5};
    CHECK(ball_inner_product_numeric(n, n, p) == doctest::Approx(ball_norm(n, p)).epsilon(1e-10));
  }
  const BallParams p{0.5};
  CHECK(std::abs(ball_inner_product_numeric(MultiIndex{1, 1}, MultiIndex{0, 2}, p)) < 1e-12);
  CHECK(std::abs(ball_inner_product_numeric(MultiIndex{2, 0, 0}, MultiIndex{0, 0, 0}, p)) < 1e-12);
}

TEST_CASE("operator residual") {
  const std::array<double, 2> x{0.1, 0.2};
  CHECK(ball_operator_residual(MultiIndex{1, 1}, BallParams{0.5}, x, 1e-3) <= 1e-5);
  const std::array<double, 3> y{0.2, -0.3, 0.1};
  const double r1 = ball_operator_residual(MultiIndex{0, 3, 0}, BallParams{1.2}, y, 1e-2);
  const double r2 = ball_operator_residual(MultiIndex{0, 3, 0}, BallParams{1.2}, y, 5e-3);
  CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.1));
  const std::array<double, 2> near_edge{0.99, 0.0};
  CHECK_THROWS_AS(ball_operator_residual(MultiIndex{1, 1}, BallParams{0.5}, near_edge, 1e-2), DomainError);
}

}
