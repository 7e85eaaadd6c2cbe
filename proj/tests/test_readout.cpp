#include "doctest.h"

#include "qrc/errors.hpp"
#include "qrc/readout.hpp"

#include <cmath>
#include <random>

using namespace qrc;

namespace {

struct Planted {
  Eigen::MatrixXd x;
  Eigen::VectorXd w;
  double b;
  std::vector<double> y;
};

Planted planted(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  Planted p{Eigen::MatrixXd(rows, cols), Eigen::VectorXd(cols), g(gen), {}};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      p.x(r, c) = g(gen);
  for (int c = 0; c < cols; ++c)
    p.w(c) = g(gen);
  const Eigen::VectorXd y = p.x * p.w + Eigen::VectorXd::Constant(rows, p.b);
  p.y.assign(y.data(), y.data() + rows);
  return p;
}

} // namespace

TEST_CASE("exact single-feature fit") {
  Eigen::MatrixXd x(3, 1);
  x << 1, 2, 3;
  const std::vector<double> y{2, 4, 6};
  const ReadoutModel m = train(x, y);
  CHECK(std::abs(m.weights(0) - 2.0) <= 1e-10);
  CHECK(std::abs(m.bias) <= 1e-10);
}

TEST_CASE("constant targets give zero weights") {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(20, 4);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    x.data()[i] = g(gen);
  const std::vector<double> y(20, 0.42);
  const ReadoutModel m = train(x, y);
  CHECK(m.weights.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(m.bias - 0.42) <= 1e-10);
  for (double p : predict(m, x))
    CHECK(std::abs(p - 0.42) <= 1e-10);
}

TEST_CASE("plant and recover") {
  const Planted p = planted(50, 8, 7);
  const ReadoutModel m = train(p.x, p.y);
  CHECK((m.weights - p.w).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK(std::abs(m.bias - p.b) <= 1e-8);
  const std::vector<double> yhat = predict(m, p.x);
  double resid = 0.0, norm = 0.0;
  for (std::size_t k = 0; k < yhat.size(); ++k) {
    CHECK(std::abs(yhat[k] - p.y[k]) <= 1e-8);
    resid += (yhat[k] - p.y[k]) * (yhat[k] - p.y[k]);
    norm += p.y[k] * p.y[k];
  }
  CHECK(std::sqrt(resid) <= 1e-8 * std::sqrt(norm));
}

TEST_CASE("rank-deficient features still fit realizable targets") {
  Planted p = planted(40, 6, 9);
  p.x.col(5) = p.x.col(0) + p.x.col(1);
  const Eigen::VectorXd y = p.x * p.w + Eigen::VectorXd::Constant(40, p.b);
  const std::vector<double> ys(y.data(), y.data() + 40);
  const ReadoutModel m = train(p.x, ys);
  const std::vector<double> yhat = predict(m, p.x);
  for (std::size_t k = 0; k < ys.size(); ++k)
    CHECK(std::abs(yhat[k] - ys[k]) <= 1e-8);
}

TEST_CASE("ridge shrinks the weights monotonically") {
  const Planted p = planted(60, 10, 11);
  double prev = std::numeric_limits<double>::infinity();
  for (double ridge : {0.0, 1e-6, 1e-3, 0.1, 1.0, 10.0, 1000.0}) {
    const double norm = train(p.x, p.y, ridge).weights.norm();
    CHECK(norm <= prev + 1e-12);
    prev = norm;
  }
}

TEST_CASE("train argument checks") {
  const Planted p = planted(10, 3, 1);
  CHECK_THROWS_AS(train(Eigen::MatrixXd(0, 3), std::vector<double>{}), ArgumentError);
  CHECK_THROWS_AS(train(p.x, std::span<const double>(p.y).first(9)), ArgumentError);
  CHECK_THROWS_AS(train(p.x, p.y, -1.0), ArgumentError);
}

TEST_CASE("predict") {
  Eigen::MatrixXd x(3, 2);
  x << 1, 2, 3, 4, 5, 6;
  const ReadoutModel zero{Eigen::VectorXd::Zero(2), 0.7};
  for (double y : predict(zero, x))
    CHECK(y == 0.7);
  const ReadoutModel one_hot{Eigen::Vector2d(0.0, 1.0), 0.5};
  const std::vector<double> got = predict(one_hot, x);
  CHECK(got == std::vector<double>{2.5, 4.5, 6.5});
  CHECK(predict_row(one_hot, x.row(1)) == 4.5);
  CHECK_THROWS_AS(predict(ReadoutModel{Eigen::VectorXd::Zero(3), 0.0}, x), ArgumentError);
  CHECK_THROWS_AS(predict_row(ReadoutModel{Eigen::VectorXd::Zero(3), 0.0}, x.row(0)), ArgumentError);
}

TEST_CASE("normalized covariance") {
  const std::vector<double> y{0.3, 1.2, -0.5, 2.0, 0.9};
  CHECK(normalized_covariance(y, y) == 1.0);
  std::vector<double> neg;
  for (double v : y)
    neg.push_back(-v + 5.0);
  CHECK(normalized_covariance(y, neg) == -1.0);
  CHECK(normalized_covariance(std::vector<double>{0, 1, 0, 1}, std::vector<double>{0, 1, 1, 0}) == 0.0);

  const std::vector<double> flat(5, 1.0);
  CHECK_THROWS_AS(normalized_covariance(y, flat), DegenerateError);
  CHECK_FALSE(try_normalized_covariance(flat, y).has_value());
  CHECK_THROWS_AS(normalized_covariance(y, std::vector<double>{1, 2}), ArgumentError);
  CHECK_THROWS_AS(normalized_covariance(std::vector<double>{1}, std::vector<double>{1}), ArgumentError);
}

TEST_CASE("normalized covariance is invariant under positive affine maps") {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> g;
  std::vector<double> a(100), b(100);
  for (int k = 0; k < 100; ++k) {
    a[k] = g(gen);
    b[k] = 0.6 * a[k] + g(gen);
  }
  const double c = normalized_covariance(a, b);
  CHECK(c > 0.2);
  CHECK(c < 1.0);
  for (double scale : {1e-3, 0.5, 7.0, 1e3}) {
    std::vector<double> a2, b2;
    for (int k = 0; k < 100; ++k) {
      a2.push_back(scale * a[k] - 3.0);
      b2.push_back(b[k] / scale + 11.0);
    }
    CHECK(std::abs(normalized_covariance(a2, b) - c) <= 1e-12);
    CHECK(std::abs(normalized_covariance(a, b2) - c) <= 1e-12);
  }
}

TEST_CASE("split plan") {
  const SplitPlan s{500, 1500, 500};
  CHECK(s.total() == 2500);
  CHECK(s.check(70));
  const SplitPlan tight{0, 70, 10};
  CHECK_FALSE(tight.check(70));
  const SplitPlan negative{-1, 10, 10};
  CHECK_THROWS_AS(negative.check(3), ArgumentError);
}

TEST_CASE("summarize") {
  const Score s = summarize({0.5, std::nullopt, 0.7, 0.9});
  CHECK(s.n == 3);
  CHECK(s.n_degenerate == 1);
  CHECK(s.mean == doctest::Approx(0.7));
  CHECK(s.std_error == doctest::Approx(0.2 / std::sqrt(3.0)));
  const Score none = summarize({std::nullopt});
  CHECK(none.n == 0);
  CHECK(std::isnan(none.mean));
}
