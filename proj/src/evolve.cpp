#include "qrc/evolve.hpp"

#include "qrc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace qrc {

namespace {

constexpr double kUnitarityTolerance = 1e-10;
constexpr double kSignalSlack = 1e-9;

void check_dims(const DensityMatrix& rho, const EvolutionPlan& plan) {
  if (rho.dim() != plan.dim())
    throw ArgumentError("state dimension " + std::to_string(rho.dim()) +
                        " does not match plan dimension " + std::to_string(plan.dim()));
}

/// Fills the strict lower triangle from the upper one.
void mirror_upper(CMatrix& m) {
  const Eigen::Index d = m.rows();
  for (Eigen::Index j = 0; j < d; ++j) {
    m(j, j) = Complex(m(j, j).real(), 0.0);
    for (Eigen::Index i = 0; i < j; ++i)
      m(j, i) = std::conj(m(i, j));
  }
}

/// Q diag(exp(-i E t)) Q^T using real products.
CMatrix propagator(const RMatrix& q, const Eigen::VectorXd& energies, double t) {
  const Eigen::ArrayXd phase = -energies.array() * t;
  const RMatrix re = (q * phase.cos().matrix().asDiagonal()) * q.transpose();
  const RMatrix im = (q * phase.sin().matrix().asDiagonal()) * q.transpose();
  CMatrix u(q.rows(), q.cols());
  u.real() = re;
  u.imag() = im;
  return u;
}

double unitarity_error(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

} // namespace

Eigen::VectorXd pack_hermitian(const CMatrix& a, bool double_offdiag) {
  const Eigen::Index d = a.rows();
  const double w = double_offdiag ? 2.0 : 1.0;
  Eigen::VectorXd out(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    out(j + j * d) = a(j, j).real();
    for (Eigen::Index i = 0; i < j; ++i) {
      out(i + j * d) = w * a(i, j).real();
      out(j + i * d) = w * a(i, j).imag();
    }
  }
  return out;
}

CMatrix unpack_hermitian(const Eigen::Ref<const Eigen::VectorXd>& packed, Eigen::Index dim) {
  if (packed.size() != dim * dim)
    throw ArgumentError("packed length does not match dimension");
  CMatrix a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    a(j, j) = Complex(packed(j + j * dim), 0.0);
    for (Eigen::Index i = 0; i < j; ++i) {
      const Complex v(packed(i + j * dim), packed(j + i * dim));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

QubitOperator EvolutionPlan::heisenberg_x(int v, int site) const {
  if (v < 1 || v > subintervals_ || site < 1 || site > n_qubits_)
    throw ArgumentError("heisenberg_x index out of range");
  return QubitOperator(unpack_hermitian(packed_obs_.col(feature_index(v, site, n_qubits_)), dim()));
}

EvolutionPlan make_plan(const SpinChainSpec& spec, double tau, int subintervals) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ArgumentError("tau must be positive and finite");
  if (subintervals < 1)
    throw ArgumentError("need at least one subinterval");

  const RMatrix h = hamiltonian_matrix(spec);
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigendecomposition of the " << h.rows() << "x" << h.cols()
        << " Hamiltonian failed (max |H_ij| = " << h.cwiseAbs().maxCoeff()
        << ", asymmetry = " << (h - h.transpose()).cwiseAbs().maxCoeff() << ")";
    throw NumericalError(msg.str());
  }

  EvolutionPlan plan;
  plan.n_qubits_ = spec.n_qubits();
  plan.tau_ = tau;
  plan.subintervals_ = subintervals;
  plan.energies_ = eig.eigenvalues();
  plan.eigenvectors_ = eig.eigenvectors();

  const RMatrix& q = plan.eigenvectors_;
  const Eigen::VectorXd& e = plan.energies_;
  const Eigen::Index d = q.rows();
  const double dt = tau / subintervals;

  plan.u_sub_ = propagator(q, e, dt);
  plan.u_tau_ = propagator(q, e, tau);
  const double err = std::max(unitarity_error(plan.u_sub_), unitarity_error(plan.u_tau_));
  if (err > kUnitarityTolerance) {
    std::ostringstream msg;
    msg << "propagator unitarity error " << err << " (spectral range [" << e.minCoeff() << ", "
        << e.maxCoeff() << "], tau = " << tau << ")";
    throw NumericalError(msg.str());
  }

  const int n = plan.n_qubits_;
  plan.packed_obs_.resize(d * d, Eigen::Index{subintervals} * n);
  std::vector<RMatrix> x_eig;
  x_eig.reserve(n);
  RMatrix xq(d, d);
  for (int site = 1; site <= n; ++site) {
    // X_i Q permutes the rows of Q.
    const std::size_t mask = site_mask(site, n);
    for (Eigen::Index r = 0; r < d; ++r)
      xq.row(r) = q.row(static_cast<Eigen::Index>(static_cast<std::size_t>(r) ^ mask));
    x_eig.push_back(q.transpose() * xq);
  }

  RMatrix tmp(d, d);
  CMatrix evolved(d, d);
  for (int v = 1; v <= subintervals; ++v) {
    // Phase e^{i (E_m - E_n) t} applied entrywise in the eigenbasis.
    const Eigen::ArrayXd theta = e.array() * (v * dt);
    const Eigen::ArrayXXd gap = theta.replicate(1, d) - theta.transpose().replicate(d, 1);
    const Eigen::ArrayXXd cos_gap = gap.cos();
    const Eigen::ArrayXXd sin_gap = gap.sin();
    for (int site = 1; site <= n; ++site) {
      const RMatrix& xe = x_eig[site - 1];
      tmp.noalias() = q * (xe.array() * cos_gap).matrix();
      evolved.real() = tmp * q.transpose();
      tmp.noalias() = q * (xe.array() * sin_gap).matrix();
      evolved.imag() = tmp * q.transpose();
      plan.packed_obs_.col(feature_index(v, site, n)) = pack_hermitian(evolved, false);
    }
  }
  return plan;
}

DensityMatrix evolve_full_step(const DensityMatrix& rho, const EvolutionPlan& plan) {
  check_dims(rho, plan);
  const CMatrix& u = plan.full_step_propagator();
  const CMatrix t = u * rho.matrix();
  CMatrix out(rho.dim(), rho.dim());
  out.triangularView<Eigen::Upper>() = t * u.adjoint();
  mirror_upper(out);
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix evolve_injected(const Eigen::Vector2d& psi, const DensityMatrix& sigma,
                              const EvolutionPlan& plan) {
  const Eigen::Index h = sigma.dim();
  if (2 * h != plan.dim())
    throw ArgumentError("reduced state dimension does not match plan");
  const CMatrix& u = plan.full_step_propagator();
  // U (|psi> ⊗ I) as a D x D/2 block.
  const CMatrix a = psi(0) * u.leftCols(h) + psi(1) * u.rightCols(h);
  const CMatrix t = a * sigma.matrix();
  CMatrix out(plan.dim(), plan.dim());
  out.triangularView<Eigen::Upper>() = t * a.adjoint();
  mirror_upper(out);
  return DensityMatrix::from_matrix(std::move(out));
}

Eigen::RowVectorXd measure_subintervals(const DensityMatrix& rho, const EvolutionPlan& plan) {
  check_dims(rho, plan);
  const Eigen::VectorXd packed = pack_hermitian(rho.matrix(), true);
  Eigen::RowVectorXd row = packed.transpose() * plan.packed_observables();
  for (Eigen::Index k = 0; k < row.size(); ++k) {
    double s = 0.5 * (1.0 + row(k));
    if (s < -kSignalSlack || s > 1.0 + kSignalSlack) {
      std::ostringstream msg;
      msg << "signal " << k << " drifted to " << s << ", outside [0, 1]";
      throw NumericalError(msg.str());
    }
    row(k) = std::clamp(s, 0.0, 1.0);
  }
  return row;
}

} // namespace qrc
