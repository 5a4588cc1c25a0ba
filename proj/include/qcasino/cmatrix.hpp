#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qcasino/common.hpp"

namespace qcasino {

using cdouble = std::complex<double>;

// Hard cap on dense operator dimension: 10 qubits per side.
inline constexpr int k_dense_dim_cap = 1024;

// Dense row-major complex matrix, the workhorse for every operator in the
// library. Sized for small quantum registers, not for sparse work.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cdouble> entries;

  CMatrix() = default;

  CMatrix(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1) throw dimension_error("matrix dimensions must be positive");
    if (r > k_dense_dim_cap || c > k_dense_dim_cap) {
      throw capacity_error("matrix dimension above dense cap");
    }
    entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), cdouble{});
  }

  CMatrix(int r, int c, std::vector<cdouble> vals) : rows(r), cols(c), entries(std::move(vals)) {
    if (r < 1 || c < 1) throw dimension_error("matrix dimensions must be positive");
    if (r > k_dense_dim_cap || c > k_dense_dim_cap) {
      throw capacity_error("matrix dimension above dense cap");
    }
    if (entries.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {
      throw shape_error("entry count does not match rows*cols");
    }
  }

  cdouble& operator()(int r, int c) {
    return entries[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
  }
  const cdouble& operator()(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
  }

  bool is_square() const { return rows == cols; }

  static CMatrix zero(int r, int c) { return CMatrix(r, c); }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  CMatrix adjoint() const {
    CMatrix out(cols, rows);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
  }

  cdouble trace() const {
    if (!is_square()) throw dimension_error("trace requires a square matrix");
    cdouble t{};
    for (int i = 0; i < rows; ++i) t += (*this)(i, i);
    return t;
  }
};

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw dimension_error("matrix sum shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
  return out;
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw dimension_error("matrix difference shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] -= b.entries[i];
  return out;
}

inline CMatrix operator*(const cdouble& s, const CMatrix& a) {
  CMatrix out = a;
  for (auto& e : out.entries) e *= s;
  return out;
}

inline CMatrix operator*(const CMatrix& a, const cdouble& s) { return s * a; }

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols != b.rows) throw dimension_error("matrix product shape mismatch");
  CMatrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      const cdouble f = a(r, k);
      if (f == cdouble{}) continue;
      for (int c = 0; c < b.cols; ++c) out(r, c) += f * b(k, c);
    }
  }
  return out;
}

inline double max_abs_entry(const CMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries) m = std::max(m, std::abs(e));
  return m;
}

inline double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& e : a.entries) s += std::norm(e);
  return std::sqrt(s);
}

inline bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (std::abs(a.entries[i] - b.entries[i]) > tol) return false;
  }
  return true;
}

inline bool is_hermitian(const CMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (int r = 0; r < a.rows; ++r) {
    for (int c = r; c < a.cols; ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

// Kronecker product with the first factor's indices major. Errors when the
// result would exceed the dense cap.
inline CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  if (a.rows > k_dense_dim_cap / b.rows || a.cols > k_dense_dim_cap / b.cols) {
    throw capacity_error("tensor result dimension above dense cap");
  }
  CMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (int ar = 0; ar < a.rows; ++ar) {
    for (int ac = 0; ac < a.cols; ++ac) {
      const cdouble f = a(ar, ac);
      if (f == cdouble{}) continue;
      for (int br = 0; br < b.rows; ++br) {
        for (int bc = 0; bc < b.cols; ++bc) {
          out(ar * b.rows + br, ac * b.cols + bc) = f * b(br, bc);
        }
      }
    }
  }
  return out;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(int n) {
  if (!is_power_of_two(n)) throw shape_error("dimension is not a power of two");
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// Traces out the last n-k qubit factors of an operator on n qubits, leaving
// an operator on the first k.
inline CMatrix partial_trace_keep_first(const CMatrix& m, int keep_k) {
  if (!m.is_square()) throw dimension_error("partial trace requires a square matrix");
  const int n = log2_exact(m.rows);
  if (keep_k <= 0 || keep_k >= n) {
    throw precondition_error("partial trace requires 0 < k < n");
  }
  const int dk = 1 << keep_k;
  const int dt = m.rows >> keep_k;
  CMatrix out(dk, dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      cdouble s{};
      for (int t = 0; t < dt; ++t) s += m(i * dt + t, j * dt + t);
      out(i, j) = s;
    }
  }
  return out;
}

inline CMatrix pauli_x() {
  return CMatrix(2, 2, {cdouble{0, 0}, cdouble{1, 0}, cdouble{1, 0}, cdouble{0, 0}});
}

inline CMatrix pauli_y() {
  return CMatrix(2, 2, {cdouble{0, 0}, cdouble{0, -1}, cdouble{0, 1}, cdouble{0, 0}});
}

inline CMatrix pauli_z() {
  return CMatrix(2, 2, {cdouble{1, 0}, cdouble{0, 0}, cdouble{0, 0}, cdouble{-1, 0}});
}

}  // namespace qcasino
