// chain.hpp - disordered long-range transverse-field Ising chain
//
//   H = sum_{i<j} J_ij X_i X_j + 1/2 sum_i (B + phi_i) Z_i,   J_ij = J0 |i-j|^-alpha
//
// with phi_i drawn uniformly from (-W/2, W/2).

#pragma once

#include "qrc/qstate.hpp"

#include <cstdint>
#include <vector>

namespace qrc {

struct ChainParams {
  int n_qubits = 2;
  double coupling = 1.0; ///< J0, the energy unit
  double alpha = 0.0;
  double field = 4.0;    ///< B
  double disorder = 0.0; ///< W
  std::uint64_t seed = 0;

  /// Throws ArgumentError / CapacityError.
  void validate() const;
};

struct SpinChainSpec {
  ChainParams params;
  std::vector<double> fields; ///< phi_i, i = 1..N stored at [i-1]
  RMatrix couplings;          ///< J_ij stored at (i-1, j-1) for i < j, zero elsewhere

  int n_qubits() const { return params.n_qubits; }
};

SpinChainSpec sample_disorder(const ChainParams& params);

/// Real symmetric Hamiltonian as a dense real matrix.
RMatrix hamiltonian_matrix(const SpinChainSpec& spec);

QubitOperator build_hamiltonian(const SpinChainSpec& spec);

} // namespace qrc
