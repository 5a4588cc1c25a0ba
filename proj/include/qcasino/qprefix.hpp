#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"
#include "qcasino/linalg.hpp"

namespace qcasino {

// Dense tensor prefixes are kept only up to this many 2x2 factors; after
// that the prefix lives on through its streaming functionals.
inline constexpr int k_dense_cap_qubits = 10;

// A finite prefix a_1 (x) ... (x) a_n of a stream of 2x2 complex letters.
// The running Gram trace prod_i Tr(a_i^H a_i) is held in log space because
// the linear product overflows double well before desk-scale games end.
struct QuantumPrefix {
  int length = 0;
  std::optional<CMatrix> dense;
  std::vector<double> factor_norms;
  double log_trace_gram = 0.0;
  bool gram_zero = false;

  // Linear-scale Gram trace; +infinity once the product has outgrown double.
  double trace_gram() const { return gram_zero ? 0.0 : std::exp(log_trace_gram); }
};

inline QuantumPrefix empty_prefix(bool track_dense = true) {
  QuantumPrefix p;
  if (track_dense) p.dense = CMatrix::identity(1);
  return p;
}

inline QuantumPrefix prefix_extend(const QuantumPrefix& p, const CMatrix& a) {
  if (a.rows != 2 || a.cols != 2) throw dimension_error("prefix letters must be 2x2");
  QuantumPrefix out;
  out.length = p.length + 1;
  double gram_factor = 0.0;
  for (const auto& e : a.entries) gram_factor += std::norm(e);
  out.gram_zero = p.gram_zero || gram_factor == 0.0;
  out.log_trace_gram = out.gram_zero ? 0.0 : p.log_trace_gram + std::log(gram_factor);
  out.factor_norms = p.factor_norms;
  out.factor_norms.push_back(op_norm(a));
  if (p.dense.has_value() && out.length <= k_dense_cap_qubits) {
    out.dense = tensor(*p.dense, a);
  }
  return out;
}

}  // namespace qcasino
