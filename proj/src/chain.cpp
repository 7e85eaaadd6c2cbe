#include "qrc/chain.hpp"

#include "qrc/errors.hpp"
#include "qrc/rng.hpp"

#include <cmath>
#include <string>

namespace qrc {

void ChainParams::validate() const {
  if (n_qubits < 2)
    throw ArgumentError("chain needs at least 2 qubits, got " + std::to_string(n_qubits));
  if (n_qubits > kMaxQubits)
    throw CapacityError(std::to_string(n_qubits) + " qubits exceeds the cap of " +
                        std::to_string(kMaxQubits));
  if (!(disorder >= 0.0))
    throw ArgumentError("disorder width must be >= 0");
  if (!(alpha >= 0.0))
    throw ArgumentError("coupling exponent must be >= 0");
  if (!std::isfinite(coupling) || !std::isfinite(field))
    throw ArgumentError("coupling and field must be finite");
}

SpinChainSpec sample_disorder(const ChainParams& params) {
  params.validate();
  const int n = params.n_qubits;

  SpinChainSpec spec{params, std::vector<double>(n, 0.0), RMatrix::Zero(n, n)};
  CounterRng rng(params.seed);
  for (int i = 0; i < n; ++i)
    spec.fields[i] = params.disorder * (rng.uniform() - 0.5);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      spec.couplings(i, j) = params.coupling * std::pow(static_cast<double>(j - i), -params.alpha);
  return spec;
}

RMatrix hamiltonian_matrix(const SpinChainSpec& spec) {
  spec.params.validate();
  const int n = spec.n_qubits();
  if (static_cast<int>(spec.fields.size()) != n || spec.couplings.rows() != n ||
      spec.couplings.cols() != n)
    throw ArgumentError("chain spec arrays do not match n_qubits");

  const Eigen::Index d = dim_of(n);
  RMatrix h = RMatrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    double diag = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double z = (ub & site_mask(i, n)) ? -1.0 : 1.0;
      diag += 0.5 * (spec.params.field + spec.fields[i - 1]) * z;
    }
    h(b, b) = diag;

    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto flipped = ub ^ site_mask(i, n) ^ site_mask(j, n);
        h(static_cast<Eigen::Index>(flipped), b) += spec.couplings(i - 1, j - 1);
      }
  }
  return h;
}

QubitOperator build_hamiltonian(const SpinChainSpec& spec) {
  return QubitOperator(hamiltonian_matrix(spec).cast<Complex>());
}

} // namespace qrc
