#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/linalg.hpp"
#include "qcasino/qstate.hpp"
#include "qcasino/rng.hpp"

namespace qcasino {

// All samplers draw from the rng in a pinned order so that fixed seeds
// reproduce identical objects across runs and platforms. The draw orders
// below are part of the reproducibility contract; do not reorder.

// Haar-uniform unit vector: one complex standard normal per amplitude
// (normal_pair gives re then im, amplitudes in index order), then normalize.
inline std::vector<cdouble> sample_state_vector(SeededRng& rng, int dim) {
  if (dim < 1) throw precondition_error("state dimension must be positive");
  std::vector<cdouble> amps(static_cast<std::size_t>(dim));
  double n2 = 0.0;
  for (auto& a : amps) {
    const auto [re, im] = rng.normal_pair();
    a = cdouble{re, im};
    n2 += std::norm(a);
  }
  if (n2 == 0.0) return sample_state_vector(rng, dim);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  return amps;
}

inline PureState sample_pure_state(SeededRng& rng) {
  return PureState{sample_state_vector(rng, 2)};
}

// Uniform density matrix on the solid Bloch ball: draws u1, u2, u3 in order,
// z = 2u1 - 1, azimuth = 2 pi u2, radius = cbrt(u3).
inline DensityMatrix sample_density_matrix(SeededRng& rng) {
  const double z = 2.0 * rng.uniform01() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform01();
  const double r = std::cbrt(rng.uniform01());
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return bloch_to_state(r * s * std::cos(phi), r * s * std::sin(phi), r * z);
}

// 2x2 matrix with every entry's real and imaginary part independent uniform
// on [-edge/2, edge/2]. Draw order: entries row-major, real part then
// imaginary part.
inline CMatrix sample_algebraic_coin(SeededRng& rng, double edge) {
  if (!(edge > 0.0)) throw precondition_error("edge must be positive");
  CMatrix m(2, 2);
  for (auto& e : m.entries) {
    const double re = edge * (rng.uniform01() - 0.5);
    const double im = edge * (rng.uniform01() - 0.5);
    e = cdouble{re, im};
  }
  return m;
}

// Haar-ish random unitary: complex Gaussian matrix (entries row-major,
// normal_pair per entry) followed by modified Gram-Schmidt on the columns.
inline CMatrix sample_unitary(SeededRng& rng, int dim) {
  if (dim < 1) throw precondition_error("unitary dimension must be positive");
  CMatrix m(dim, dim);
  for (auto& e : m.entries) {
    const auto [re, im] = rng.normal_pair();
    e = cdouble{re, im};
  }
  detail::orthonormalize_columns(m);
  return m;
}

}  // namespace qcasino
