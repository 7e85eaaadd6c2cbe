// evolve.hpp - exact propagators and Heisenberg-picture measurement cache
//
// H is diagonalized once per disorder sample. From H = Q diag(E) Q^T the plan
// builds the substep propagator exp(-iH tau/V), the full-step propagator
// exp(-iH tau), and the V*N observables
//
//     X_i(v) = U_sub^-v X_i U_sub^v,   v = 1..V,
//
// so each subinterval signal is a trace against the injected state instead of
// a separate V-fold evolution.

#pragma once

#include "qrc/chain.hpp"
#include "qrc/qstate.hpp"

namespace qrc {

/// Column of the (v, i) signal in a feature row; v and site are 1-based.
constexpr Eigen::Index feature_index(int v, int site, int n_qubits) {
  return static_cast<Eigen::Index>(v - 1) * n_qubits + (site - 1);
}

class EvolutionPlan {
public:
  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return energies_.size(); }
  double tau() const { return tau_; }
  int subintervals() const { return subintervals_; }
  Eigen::Index features_per_step() const { return Eigen::Index{subintervals_} * n_qubits_; }

  /// Eigenvalues of H, ascending, and the matching real orthonormal eigenvectors.
  const Eigen::VectorXd& energies() const { return energies_; }
  const RMatrix& eigenvectors() const { return eigenvectors_; }

  const CMatrix& substep_propagator() const { return u_sub_; }
  const CMatrix& full_step_propagator() const { return u_tau_; }

  /// X_site evolved to the end of subinterval v, as a dense operator.
  QubitOperator heisenberg_x(int v, int site) const;

  /// Packed observables, one column per feature (see pack_hermitian).
  const RMatrix& packed_observables() const { return packed_obs_; }

private:
  friend EvolutionPlan make_plan(const SpinChainSpec&, double, int);

  int n_qubits_ = 0;
  double tau_ = 0.0;
  int subintervals_ = 1;
  Eigen::VectorXd energies_;
  RMatrix eigenvectors_;
  CMatrix u_sub_;
  CMatrix u_tau_;
  RMatrix packed_obs_;
};

/// Real D*D packing of a Hermitian matrix A: diagonal A_ii, upper triangle
/// Re A_ij, lower triangle Im A_ij (i < j), flattened column-major.
/// With `double_offdiag` the off-diagonal entries are doubled, so that
///   Tr[rho A] = pack(rho, true) . pack(A, false).
Eigen::VectorXd pack_hermitian(const CMatrix& a, bool double_offdiag);

/// Inverse of pack_hermitian(a, false).
CMatrix unpack_hermitian(const Eigen::Ref<const Eigen::VectorXd>& packed, Eigen::Index dim);

/// Throws ArgumentError for tau <= 0 or V < 1, NumericalError if the
/// eigendecomposition fails.
EvolutionPlan make_plan(const SpinChainSpec& spec, double tau, int subintervals);

/// U_tau rho U_tau^dagger.
DensityMatrix evolve_full_step(const DensityMatrix& rho, const EvolutionPlan& plan);

/// One full step applied to |psi><psi| ⊗ sigma without materializing the
/// product state; the result is Hermitian by construction.
DensityMatrix evolve_injected(const Eigen::Vector2d& psi, const DensityMatrix& sigma,
                              const EvolutionPlan& plan);

/// Row of V*N signals (1 + Tr[rho X_i(v)])/2, indexed by feature_index.
/// Values within 1e-9 outside [0,1] are clamped; larger excursions throw
/// NumericalError.
Eigen::RowVectorXd measure_subintervals(const DensityMatrix& rho, const EvolutionPlan& plan);

} // namespace qrc
