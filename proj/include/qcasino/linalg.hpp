#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "qcasino/cmatrix.hpp"
#include "qcasino/common.hpp"

namespace qcasino {

// Sentinel for the largest-singular-value (infinity) Schatten order.
inline constexpr unsigned k_schatten_inf = std::numeric_limits<unsigned>::max();

struct HermitianEigen {
  // Real eigenvalues in ascending order.
  std::vector<double> eigenvalues;
  // Unitary matrix whose column j is the eigenvector for eigenvalues[j].
  CMatrix eigenvectors;

  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
};

namespace detail {

inline double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot block
// [[alpha, m*u], [m*conj(u), beta]] is phase-reduced by diag(1, conj(u)) to a
// real symmetric block, rotated with the classic stable tangent, and the two
// factors are recombined into a single unitary applied to a and accumulated
// into v.
inline void jacobi_rotate(CMatrix& a, CMatrix& v, int p, int q) {
  const cdouble g = a(p, q);
  const double m = std::abs(g);
  if (m < 1e-300) return;
  const cdouble u = g / m;
  const cdouble ubar = std::conj(u);
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * m);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.rows;
  for (int j = 0; j < n; ++j) {
    const cdouble ap = a(p, j);
    const cdouble aq = a(q, j);
    a(p, j) = c * ap - s * u * aq;
    a(q, j) = s * ap + c * u * aq;
  }
  for (int i = 0; i < n; ++i) {
    const cdouble ap = a(i, p);
    const cdouble aq = a(i, q);
    a(i, p) = c * ap - s * ubar * aq;
    a(i, q) = s * ap + c * ubar * aq;
  }
  for (int i = 0; i < v.rows; ++i) {
    const cdouble vp = v(i, p);
    const cdouble vq = v(i, q);
    v(i, p) = c * vp - s * ubar * vq;
    v(i, q) = s * vp + c * ubar * vq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cdouble{a(p, p).real(), 0.0};
  a(q, q) = cdouble{a(q, q).real(), 0.0};
}

}  // namespace detail

// Cyclic Jacobi eigensolver for Hermitian matrices.
inline HermitianEigen hermitian_eigen(const CMatrix& a) {
  if (!a.is_square()) throw dimension_error("eigendecomposition requires a square matrix");
  const double scale = std::max(1.0, max_abs_entry(a));
  if (!is_hermitian(a, 1e-8 * scale)) {
    throw not_hermitian_error("eigendecomposition requires a Hermitian matrix");
  }

  const int n = a.rows;
  CMatrix work = a;
  // Symmetrize to kill representation noise before iterating.
  for (int r = 0; r < n; ++r) {
    work(r, r) = cdouble{work(r, r).real(), 0.0};
    for (int c = r + 1; c < n; ++c) {
      const cdouble avg = 0.5 * (work(r, c) + std::conj(work(c, r)));
      work(r, c) = avg;
      work(c, r) = std::conj(avg);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double tol = 1e-13 * std::max(1.0, frobenius_norm(work));

  for (int sweep = 0; sweep < 128; ++sweep) {
    if (detail::off_diagonal_norm(work) <= tol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(work, v, p, q);
    }
    if (sweep == 127) throw error("eigensolver failed to converge");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return work(i, i).real() < work(j, j).real(); });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = work(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

struct Svd {
  // Singular values in descending order.
  std::vector<double> singular_values;
  // a = u * diag(singular_values) * v.adjoint()
  CMatrix u;
  CMatrix v;
};

namespace detail {

inline cdouble column_dot(const CMatrix& m, int ca, int cb) {
  cdouble s{};
  for (int i = 0; i < m.rows; ++i) s += std::conj(m(i, ca)) * m(i, cb);
  return s;
}

inline double column_norm(const CMatrix& m, int c) {
  double s = 0.0;
  for (int i = 0; i < m.rows; ++i) s += std::norm(m(i, c));
  return std::sqrt(s);
}

// Orthogonalizes column c of m against columns [0, c), twice for stability.
// Returns the residual norm without normalizing.
inline double orthogonalize_column(CMatrix& m, int c) {
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < c; ++j) {
      const cdouble proj = column_dot(m, j, c);
      for (int i = 0; i < m.rows; ++i) m(i, c) -= proj * m(i, j);
    }
  }
  return column_norm(m, c);
}

// Makes all columns of m orthonormal. Columns whose residual collapses are
// replaced from the standard basis, so the result is always a full unitary
// frame of m.cols columns (requires m.cols <= m.rows).
inline void orthonormalize_columns(CMatrix& m) {
  for (int c = 0; c < m.cols; ++c) {
    double nrm = orthogonalize_column(m, c);
    if (nrm < 1e-9) {
      for (int k = 0; k < m.rows && nrm < 1e-9; ++k) {
        for (int i = 0; i < m.rows; ++i) m(i, c) = (i == k) ? 1.0 : 0.0;
        nrm = orthogonalize_column(m, c);
      }
      if (nrm < 1e-9) throw error("orthonormal completion failed");
    }
    for (int i = 0; i < m.rows; ++i) m(i, c) /= nrm;
  }
}

}  // namespace detail

// Singular value decomposition via the eigendecomposition of the smaller Gram
// matrix, with the other side recovered column by column and orthonormalized.
// Each singular value is taken as the length of the mapped eigenvector rather
// than sqrt(eigenvalue): the Gram route would leave tiny values at the square
// root of round-off (~1e-8 of the largest), swamping rank decisions.
inline Svd svd(const CMatrix& a) {
  const bool rows_small = a.rows <= a.cols;
  const CMatrix gram = rows_small ? a * a.adjoint() : a.adjoint() * a;
  HermitianEigen eig = hermitian_eigen(gram);

  const int k = gram.rows;
  const int other = rows_small ? a.cols : a.rows;
  // Gram eigenvalues come back ascending; singular values go out descending.
  CMatrix frame(k, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) frame(i, j) = eig.eigenvectors(i, k - 1 - j);
  }

  const CMatrix ah = a.adjoint();
  CMatrix mapped(other, k);
  std::vector<double> sv(static_cast<std::size_t>(k), 0.0);
  for (int j = 0; j < k; ++j) {
    double norm_sq = 0.0;
    for (int i = 0; i < other; ++i) {
      cdouble s{};
      if (rows_small) {
        for (int r = 0; r < a.rows; ++r) s += ah(i, r) * frame(r, j);
      } else {
        for (int c = 0; c < a.cols; ++c) s += a(i, c) * frame(c, j);
      }
      mapped(i, j) = s;
      norm_sq += std::norm(s);
    }
    sv[static_cast<std::size_t>(j)] = std::sqrt(norm_sq);
  }

  // Refinement can flip the order inside numerical ties; restore it.
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sv](int x, int y) { return sv[static_cast<std::size_t>(x)] >
                                                sv[static_cast<std::size_t>(y)]; });

  Svd out;
  out.singular_values.resize(static_cast<std::size_t>(k));
  CMatrix small_frame(k, k);
  CMatrix other_frame(other, k);
  for (int j = 0; j < k; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.singular_values[static_cast<std::size_t>(j)] = sv[static_cast<std::size_t>(src)];
    for (int i = 0; i < k; ++i) small_frame(i, j) = frame(i, src);
    for (int i = 0; i < other; ++i) other_frame(i, j) = mapped(i, src);
  }

  const double sigma_max = out.singular_values.empty() ? 0.0 : out.singular_values[0];
  const double fill_tol = 1e-13 * std::max(1.0, sigma_max);
  for (int j = 0; j < k; ++j) {
    const double s = out.singular_values[static_cast<std::size_t>(j)];
    for (int i = 0; i < other; ++i) {
      other_frame(i, j) = s > fill_tol ? other_frame(i, j) / s : cdouble{};
    }
  }
  detail::orthonormalize_columns(other_frame);

  if (rows_small) {
    out.u = std::move(small_frame);
    out.v = std::move(other_frame);
  } else {
    out.v = std::move(small_frame);
    out.u = std::move(other_frame);
  }
  return out;
}

inline std::vector<double> singular_values(const CMatrix& a) {
  return svd(a).singular_values;
}

// Schatten-n norm from the singular values; pass k_schatten_inf for the
// largest singular value.
inline double op_norm(const CMatrix& a, unsigned n = k_schatten_inf) {
  if (n == 0) throw precondition_error("Schatten order must be at least 1");
  const std::vector<double> sv = singular_values(a);
  if (sv.empty()) return 0.0;
  if (n == k_schatten_inf) return sv.front();
  double s = 0.0;
  for (double x : sv) s += std::pow(x, static_cast<double>(n));
  return std::pow(s, 1.0 / static_cast<double>(n));
}

inline double trace_norm(const CMatrix& a) { return op_norm(a, 1); }

// |a| = sqrt(a^H a), assembled from the right singular frame.
inline CMatrix mat_abs(const CMatrix& a) {
  Svd d = svd(a);
  const CMatrix& f = d.v;
  CMatrix out(a.cols, a.cols);
  for (int i = 0; i < a.cols; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      cdouble s{};
      for (std::size_t t = 0; t < d.singular_values.size(); ++t) {
        s += d.singular_values[t] * f(i, static_cast<int>(t)) * std::conj(f(j, static_cast<int>(t)));
      }
      out(i, j) = s;
    }
  }
  return out;
}

// Principal square root of a positive semidefinite matrix. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything more negative is rejected.
inline CMatrix mat_sqrt_psd(const CMatrix& a) {
  HermitianEigen eig = hermitian_eigen(a);
  for (double& lam : eig.eigenvalues) {
    if (lam < -1e-10) throw not_psd_error("matrix square root requires a positive semidefinite matrix");
    if (lam < 0.0) lam = 0.0;
  }
  const int n = a.rows;
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cdouble s{};
      for (int t = 0; t < n; ++t) {
        s += std::sqrt(eig.eigenvalues[t]) * eig.eigenvectors(i, t) * std::conj(eig.eigenvectors(j, t));
      }
      out(i, j) = s;
    }
  }
  return out;
}

// Eigenvalues of a 2x2 complex matrix from the characteristic polynomial.
inline std::pair<cdouble, cdouble> eigenvalues_2x2(const CMatrix& a) {
  if (a.rows != 2 || a.cols != 2) throw dimension_error("closed form requires a 2x2 matrix");
  const cdouble tr = a(0, 0) + a(1, 1);
  const cdouble det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const cdouble disc = std::sqrt(tr * tr - 4.0 * det);
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

// Largest eigenvalue magnitude. Closed form for 2x2; Jacobi for larger
// Hermitian input. Larger non-normal matrices are out of scope.
inline double spectral_radius(const CMatrix& a) {
  if (!a.is_square()) throw dimension_error("spectral radius requires a square matrix");
  if (a.rows == 1) return std::abs(a(0, 0));
  if (a.rows == 2) {
    auto [l1, l2] = eigenvalues_2x2(a);
    return std::max(std::abs(l1), std::abs(l2));
  }
  const double scale = std::max(1.0, max_abs_entry(a));
  if (!is_hermitian(a, 1e-8 * scale)) {
    throw precondition_error("spectral radius beyond 2x2 requires a Hermitian matrix");
  }
  HermitianEigen eig = hermitian_eigen(a);
  double m = 0.0;
  for (double lam : eig.eigenvalues) m = std::max(m, std::abs(lam));
  return m;
}

}  // namespace qcasino
