#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/linalg.hpp"

namespace qcasino {

struct PureState {
  std::vector<cdouble> amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  int n_qubits() const { return log2_exact(dim()); }
};

inline PureState make_pure_state(std::vector<cdouble> amplitudes, double tol = 1e-9) {
  if (amplitudes.empty()) throw dimension_error("state vector must be nonempty");
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > tol) throw precondition_error("state vector is not normalized");
  return PureState{std::move(amplitudes)};
}

inline cdouble inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw dimension_error("inner product dimension mismatch");
  cdouble s{};
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

inline double overlap(const PureState& a, const PureState& b) {
  return std::abs(inner_product(a, b));
}

struct DensityMatrix {
  CMatrix rho;

  int dim() const { return rho.rows; }
};

// Validates Hermiticity, unit trace, and positive semidefiniteness.
// Eigenvalues in [-1e-10, 0) are accepted as numerical zeros.
inline DensityMatrix make_density_matrix(CMatrix rho, double tol = 1e-8) {
  if (!rho.is_square()) throw dimension_error("density matrix must be square");
  const double scale = std::max(1.0, max_abs_entry(rho));
  if (!is_hermitian(rho, tol * scale)) {
    throw not_hermitian_error("density matrix must be Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
    throw precondition_error("density matrix must have unit trace");
  }
  HermitianEigen eig = hermitian_eigen(rho);
  for (double lam : eig.eigenvalues) {
    if (lam < -1e-10) throw not_psd_error("density matrix must be positive semidefinite");
  }
  return DensityMatrix{std::move(rho)};
}

inline DensityMatrix projector(const PureState& psi) {
  const int d = psi.dim();
  CMatrix rho(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  }
  return DensityMatrix{std::move(rho)};
}

inline double purity(const DensityMatrix& rho) {
  return (rho.rho * rho.rho).trace().real();
}

struct ProbVector {
  std::vector<double> probs;

  int dim() const { return static_cast<int>(probs.size()); }
};

// Clamps negative entries within -1e-12 to zero and requires the total mass
// to be 1.
inline ProbVector make_prob_vector(std::vector<double> probs, double tol = 1e-8) {
  if (probs.empty()) throw dimension_error("probability vector must be nonempty");
  double sum = 0.0;
  for (double& p : probs) {
    if (p < -1e-12) throw precondition_error("probability vector has a negative entry");
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) throw precondition_error("probability vector does not sum to 1");
  return ProbVector{std::move(probs)};
}

// Bloch ball parameterization of single-qubit mixed states:
// rho = (I + x sx + y sy + z sz) / 2.
inline DensityMatrix bloch_to_state(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r > 1.0 + 1e-10) throw precondition_error("Bloch vector lies outside the unit ball");
  if (r > 1.0) {
    x /= r;
    y /= r;
    z /= r;
  }
  CMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + z);
  rho(1, 1) = 0.5 * (1.0 - z);
  rho(0, 1) = 0.5 * cdouble{x, -y};
  rho(1, 0) = 0.5 * cdouble{x, y};
  return DensityMatrix{std::move(rho)};
}

inline std::array<double, 3> state_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw dimension_error("Bloch coordinates require a single-qubit state");
  const double x = 2.0 * rho.rho(0, 1).real();
  const double y = -2.0 * rho.rho(0, 1).imag();
  const double z = rho.rho(0, 0).real() - rho.rho(1, 1).real();
  return {x, y, z};
}

inline double bloch_radius(const DensityMatrix& rho) {
  const auto r = state_to_bloch(rho);
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

}  // namespace qcasino
