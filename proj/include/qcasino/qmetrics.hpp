#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/linalg.hpp"
#include "qcasino/qstate.hpp"
#include "qcasino/rng.hpp"
#include "qcasino/sampling.hpp"

namespace qcasino {

inline double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// D(r1, r2) = (1/2) Tr |r1 - r2|
inline double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
  if (r1.dim() != r2.dim()) throw dimension_error("trace distance dimension mismatch");
  return 0.5 * trace_norm(r1.rho - r2.rho);
}

// F(r1, r2) = Tr sqrt( sqrt(r1) r2 sqrt(r1) ), the overlap-style fidelity
// that reduces to |<psi1|psi2>| on pure states.
inline double fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
  if (r1.dim() != r2.dim()) throw dimension_error("fidelity dimension mismatch");
  const CMatrix s1 = mat_sqrt_psd(r1.rho);
  const CMatrix inner = s1 * r2.rho * s1;
  const double f = mat_sqrt_psd(inner).trace().real();
  return std::clamp(f, 0.0, 1.0);
}

inline double angle_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
  return std::acos(clamp_unit(fidelity(r1, r2)));
}

// Pure-state shortcuts used by the first-kind casino: the projector trace
// distance has the closed form sqrt(1 - |<a|b>|^2).
inline double pure_trace_distance(const PureState& a, const PureState& b) {
  const double ov = overlap(a, b);
  return std::sqrt(std::max(0.0, 1.0 - ov * ov));
}

inline double pure_angle_distance(const PureState& a, const PureState& b) {
  return std::acos(clamp_unit(overlap(a, b)));
}

inline void require_same_alphabet(const ProbVector& p1, const ProbVector& p2) {
  if (p1.dim() != p2.dim()) throw dimension_error("probability vectors over different alphabets");
}

inline double classical_trace_distance(const ProbVector& p1, const ProbVector& p2) {
  require_same_alphabet(p1, p2);
  double s = 0.0;
  for (int i = 0; i < p1.dim(); ++i) s += std::abs(p1.probs[i] - p2.probs[i]);
  return 0.5 * s;
}

inline double classical_fidelity(const ProbVector& p1, const ProbVector& p2) {
  require_same_alphabet(p1, p2);
  double s = 0.0;
  for (int i = 0; i < p1.dim(); ++i) s += std::sqrt(p1.probs[i] * p2.probs[i]);
  return std::clamp(s, 0.0, 1.0);
}

inline double classical_angle(const ProbVector& p1, const ProbVector& p2) {
  return std::acos(clamp_unit(classical_fidelity(p1, p2)));
}

// Exhaustive max_e |p1(e) - p2(e)| over all events e of a small alphabet;
// the variational reading of the classical trace distance.
inline double classical_event_distance(const ProbVector& p1, const ProbVector& p2) {
  require_same_alphabet(p1, p2);
  const int d = p1.dim();
  if (d > 16) throw precondition_error("event search supports alphabets up to 16 letters");
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    double gap = 0.0;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) gap += p1.probs[i] - p2.probs[i];
    }
    best = std::max(best, std::abs(gap));
  }
  return best;
}

struct VariationalTraceDistance {
  double value = 0.0;
  // Spectral projector onto the positive eigenspace of r1 - r2; the event
  // that realizes the maximal probability gap.
  CMatrix witness;
};

inline VariationalTraceDistance trace_distance_variational(const DensityMatrix& r1,
                                                           const DensityMatrix& r2) {
  if (r1.dim() != r2.dim()) throw dimension_error("trace distance dimension mismatch");
  const CMatrix diff = r1.rho - r2.rho;
  HermitianEigen eig = hermitian_eigen(diff);
  const int d = diff.rows;
  VariationalTraceDistance out;
  out.witness = CMatrix(d, d);
  for (int t = 0; t < d; ++t) {
    if (eig.eigenvalues[t] <= 0.0) continue;
    out.value += eig.eigenvalues[t];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        out.witness(i, j) += eig.eigenvectors(i, t) * std::conj(eig.eigenvectors(j, t));
      }
    }
  }
  return out;
}

struct UhlmannSample {
  double best_overlap = 0.0;
  double fidelity_gap = 0.0;
};

namespace detail {

// Canonical purification of a qubit state on a 2-qubit space:
// sum_j sqrt(lambda_j) |e_j> (x) |j>, eigenpairs taken in descending order.
inline std::vector<cdouble> canonical_purification(const DensityMatrix& rho) {
  HermitianEigen eig = hermitian_eigen(rho.rho);
  std::vector<cdouble> amps(4, cdouble{});
  for (int j = 0; j < 2; ++j) {
    const int src = 1 - j;
    const double lam = std::max(0.0, eig.eigenvalues[src]);
    const double w = std::sqrt(lam);
    for (int i = 0; i < 2; ++i) amps[i * 2 + j] += w * eig.eigenvectors(i, src);
  }
  return amps;
}

}  // namespace detail

// Samples ancilla unitaries over canonical purifications of two qubit states
// and reports the best overlap found; Uhlmann's theorem says the supremum is
// the fidelity, so every sample must sit at or below it.
inline UhlmannSample uhlmann_overlap_sample(const DensityMatrix& r1, const DensityMatrix& r2,
                                            long long trials, std::uint64_t seed) {
  if (r1.dim() != 2 || r2.dim() != 2) throw dimension_error("purification sampling is qubit-only");
  if (trials < 1) throw precondition_error("trials must be at least 1");
  const std::vector<cdouble> psi1 = detail::canonical_purification(r1);
  const std::vector<cdouble> psi2 = detail::canonical_purification(r2);
  SeededRng rng(seed);
  double best = 0.0;
  for (long long t = 0; t < trials; ++t) {
    const CMatrix u = sample_unitary(rng, 2);
    cdouble ov{};
    for (int i = 0; i < 2; ++i) {
      for (int a = 0; a < 2; ++a) {
        cdouble rotated{};
        for (int b = 0; b < 2; ++b) rotated += u(a, b) * psi2[i * 2 + b];
        ov += std::conj(psi1[i * 2 + a]) * rotated;
      }
    }
    best = std::max(best, std::abs(ov));
  }
  UhlmannSample out;
  out.best_overlap = best;
  out.fidelity_gap = fidelity(r1, r2) - best;
  return out;
}

struct QuantumMeasurement {
  std::vector<CMatrix> operators;
  std::vector<std::string> labels;
};

inline void require_complete(const QuantumMeasurement& m) {
  if (m.operators.empty()) throw invalid_measurement_error("measurement has no operators");
  const int d = m.operators.front().rows;
  CMatrix sum(d, d);
  for (const auto& op : m.operators) {
    if (op.rows != d || op.cols != d) {
      throw invalid_measurement_error("measurement operators must share one square dimension");
    }
    sum = sum + op.adjoint() * op;
  }
  const CMatrix gap = sum - CMatrix::identity(d);
  if (max_abs_entry(gap) > 1e-10) {
    throw invalid_measurement_error("measurement operators do not resolve the identity");
  }
}

inline QuantumMeasurement make_measurement(std::vector<CMatrix> operators,
                                           std::vector<std::string> labels) {
  if (labels.size() != operators.size()) {
    throw precondition_error("measurement needs one label per operator");
  }
  QuantumMeasurement m{std::move(operators), std::move(labels)};
  require_complete(m);
  return m;
}

inline QuantumMeasurement computational_basis_measurement(int dim) {
  std::vector<CMatrix> ops;
  std::vector<std::string> labels;
  for (int k = 0; k < dim; ++k) {
    CMatrix p(dim, dim);
    p(k, k) = 1.0;
    ops.push_back(std::move(p));
    labels.push_back(std::to_string(k));
  }
  return QuantumMeasurement{std::move(ops), std::move(labels)};
}

struct MeasurementOutcome {
  std::string label;
  double probability = 0.0;
  // Absent when the branch probability is below 1e-12.
  std::optional<PureState> post_state;
};

inline std::vector<MeasurementOutcome> measure(const QuantumMeasurement& m, const PureState& psi) {
  require_complete(m);
  if (m.operators.front().cols != psi.dim()) {
    throw dimension_error("measurement and state dimensions differ");
  }
  std::vector<MeasurementOutcome> out;
  for (std::size_t r = 0; r < m.operators.size(); ++r) {
    const CMatrix& op = m.operators[r];
    std::vector<cdouble> branch(static_cast<std::size_t>(psi.dim()), cdouble{});
    double p = 0.0;
    for (int i = 0; i < psi.dim(); ++i) {
      cdouble s{};
      for (int j = 0; j < psi.dim(); ++j) s += op(i, j) * psi.amplitudes[j];
      branch[static_cast<std::size_t>(i)] = s;
      p += std::norm(s);
    }
    MeasurementOutcome o;
    o.label = m.labels[r];
    o.probability = p;
    if (p > 1e-12) {
      const double inv = 1.0 / std::sqrt(p);
      for (auto& a : branch) a *= inv;
      o.post_state = PureState{std::move(branch)};
    }
    out.push_back(std::move(o));
  }
  return out;
}

struct SchmidtData {
  // Non-negative, descending; squares sum to 1 for a normalized input.
  std::vector<double> coefficients;
  // Orthonormal columns on the two factors; the state reconstructs as
  // sum_i coefficients[i] basis_a[:,i] (x) basis_b[:,i].
  CMatrix basis_a;
  CMatrix basis_b;
};

inline SchmidtData schmidt(const PureState& psi, int cut_k) {
  const int n = psi.n_qubits();
  if (n < 1) throw shape_error("state is not qubit-shaped");
  if (cut_k < 1 || cut_k > n - 1) throw precondition_error("cut must satisfy 1 <= k <= n-1");
  const int rows = 1 << cut_k;
  const int cols = 1 << (n - cut_k);
  CMatrix c(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int col = 0; col < cols; ++col) {
      c(r, col) = psi.amplitudes[static_cast<std::size_t>(r) * cols + col];
    }
  }
  Svd d = svd(c);
  SchmidtData out;
  out.coefficients = d.singular_values;
  out.basis_a = d.u;
  out.basis_b = CMatrix(d.v.rows, d.v.cols);
  for (int i = 0; i < d.v.rows; ++i) {
    for (int j = 0; j < d.v.cols; ++j) out.basis_b(i, j) = std::conj(d.v(i, j));
  }
  return out;
}

inline constexpr double k_schmidt_rank_rel_tol = 1e-8;

inline int schmidt_number(const PureState& psi, int cut_k) {
  const SchmidtData d = schmidt(psi, cut_k);
  if (d.coefficients.empty()) return 0;
  const double tol = k_schmidt_rank_rel_tol * d.coefficients.front();
  int count = 0;
  for (double c : d.coefficients) {
    if (c > tol) ++count;
  }
  return count;
}

// Largest Schmidt number over all contiguous cuts, minus one; zero exactly
// for product states.
inline int entanglement_degree(const PureState& psi) {
  const int n = psi.n_qubits();
  if (n < 2) throw precondition_error("entanglement degree needs at least 2 qubits");
  int best = 1;
  for (int k = 1; k <= n - 1; ++k) best = std::max(best, schmidt_number(psi, k));
  return best - 1;
}

}  // namespace qcasino
