#include "doctest.h"
#include "oracle.hpp"

#include "qrc/errors.hpp"
#include "qrc/evolve.hpp"
#include "qrc/readout.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/rng.hpp"
#include "qrc/tasks.hpp"

#include <random>

using namespace qrc;

namespace {

SpinChainSpec chain(int n, double alpha, double w, std::uint64_t seed) {
  ChainParams p;
  p.n_qubits = n;
  p.alpha = alpha;
  p.disorder = w;
  p.seed = seed;
  return sample_disorder(p);
}

std::vector<double> uniform_inputs(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<double> out;
  for (int k = 0; k < n; ++k)
    out.push_back(rng.uniform());
  return out;
}

} // namespace

TEST_CASE("initial state is maximally mixed") {
  CHECK((initial_state(3).matrix() - CMatrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("frozen dynamics keep the injected qubit and the mixed rest") {
  const EvolutionPlan plan = make_plan(chain(2, 0.4, 1.0, 1), 1e-12, 3);
  const std::vector<double> zeros(6, 0.0);
  const SignalMatrix sig = drive(plan, zeros);
  REQUIRE(sig.n_steps() == 6);
  REQUIRE(sig.features_per_step() == 6);
  for (Eigen::Index k = 0; k < 6; ++k)
    for (int v = 1; v <= 3; ++v) {
      CHECK(sig.entries(k, feature_index(v, 1, 2)) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(sig.entries(k, feature_index(v, 2, 2)) == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("drive is deterministic") {
  const EvolutionPlan plan = make_plan(chain(4, 0.4, 2.0, 3), 1.0, 4);
  const std::vector<double> inputs = uniform_inputs(40, 8);
  CHECK(drive(plan, inputs).entries == drive(plan, inputs).entries);
  CHECK(drive(plan, inputs, 1e-3, 5).entries == drive(plan, inputs, 1e-3, 5).entries);
  CHECK(drive(plan, inputs, 1e-3, 5).entries != drive(plan, inputs, 1e-3, 6).entries);
}

TEST_CASE("drive matches the Schrödinger-picture oracle") {
  for (int n = 2; n <= 3; ++n) {
    const SpinChainSpec spec = chain(n, 0.5, 2.0, 50 + n);
    const int v_count = 4;
    const EvolutionPlan plan = make_plan(spec, 1.7, v_count);
    const std::vector<double> inputs = uniform_inputs(n == 2 ? 3 : 20, 77);
    const SignalMatrix sig = drive(plan, inputs);
    const auto rows = oracle::schrodinger_drive(spec, 1.7, v_count, inputs);
    double worst = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t f = 0; f < rows[k].size(); ++f)
        worst = std::max(worst, std::abs(sig.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(f)) -
                                         rows[k][f]));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("signals stay inside the noise band") {
  const double sigma = 0.01;
  const EvolutionPlan plan = make_plan(chain(4, 0.4, 1.0, 2), 2.0, 5);
  const SignalMatrix sig = drive(plan, uniform_inputs(200, 3), sigma, 4);
  CHECK(sig.entries.minCoeff() >= -sigma);
  CHECK(sig.entries.maxCoeff() <= 1.0 + sigma);
  CHECK(sig.noise_sigma == sigma);
}

TEST_CASE("drive rejects bad inputs") {
  const EvolutionPlan plan = make_plan(chain(2, 0.4, 1.0, 1), 1.0, 2);
  const std::vector<double> bad{0.2, 1.5};
  CHECK_THROWS_AS(drive(plan, bad), ArgumentError);
  const std::vector<double> ok{0.2};
  CHECK_THROWS_AS(drive(plan, ok, -1.0), ArgumentError);
}

TEST_CASE("washout: drives differing in the first input converge") {
  const EvolutionPlan plan = make_plan(chain(6, 0.4, 1.0, 12), 2.0, 2);
  std::vector<double> a = gen_binary_inputs(100, 4);
  std::vector<double> b = a;
  b[0] = 1.0 - a[0];
  const SignalMatrix sa = drive(plan, a);
  const SignalMatrix sb = drive(plan, b);
  CHECK((sa.entries.row(0) - sb.entries.row(0)).cwiseAbs().maxCoeff() > 0.1);
  CHECK((sa.entries.row(99) - sb.entries.row(99)).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("closed loop examples") {
  const EvolutionPlan plan = make_plan(chain(3, 0.4, 1.0, 5), 1.2, 2);
  const std::vector<double> warm = uniform_inputs(30, 9);

  ReadoutModel constant{Eigen::VectorXd::Zero(6), 0.3};
  for (double y : drive_closed_loop(plan, constant, warm, 5))
    CHECK(y == 0.3);

  // One step of closed loop is the open-loop readout of the last warm row.
  ReadoutModel model{Eigen::VectorXd::LinSpaced(6, -0.2, 0.4), 0.1};
  const SignalMatrix sig = drive(plan, warm);
  const std::vector<double> one = drive_closed_loop(plan, model, warm, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(predict_row(model, sig.entries.row(29))).epsilon(1e-14));

  // Longer closed loops extend the shorter ones.
  const std::vector<double> four = drive_closed_loop(plan, model, warm, 4);
  const std::vector<double> two = drive_closed_loop(plan, model, warm, 2);
  CHECK(four[0] == two[0]);
  CHECK(four[1] == two[1]);

  CHECK_THROWS_AS(drive_closed_loop(plan, ReadoutModel{Eigen::VectorXd::Zero(5), 0.0}, warm, 2), ArgumentError);
  CHECK_THROWS_AS(drive_closed_loop(plan, constant, warm, 0), ArgumentError);
  CHECK_THROWS_AS(drive_closed_loop(plan, constant, std::span<const double>{}, 2), ArgumentError);
}

TEST_CASE("identity readout on frozen dynamics replays a constant input") {
  // Frozen qubit 1 reads (1 + <X_1>)/2 = 1 - s, so y = 1 - column 0 recovers s.
  const EvolutionPlan plan = make_plan(chain(3, 0.4, 1.0, 5), 1e-12, 2);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(6);
  w(feature_index(1, 1, 3)) = -1.0;
  const ReadoutModel identity{w, 1.0};
  const std::vector<double> warm(10, 0.35);
  for (double y : drive_closed_loop(plan, identity, warm, 20))
    CHECK(y == doctest::Approx(0.35).epsilon(1e-9));
}
