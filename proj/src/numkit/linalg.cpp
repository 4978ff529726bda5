#include "gencls/numkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gencls/errors.hpp"

namespace gencls::num {

Vector least_squares_solve(const Matrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (b.size() != n) throw DimensionError("least_squares_solve: rhs length mismatch");
  if (m == 0 || n < m) throw DimensionError("least_squares_solve: need rows >= cols >= 1");

  Matrix r = a;
  Vector qtb = b;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);

  // Squared residual norms of the trailing part of each column, used to pick
  // the pivot at every step.
  Vector col_norm2(m, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) col_norm2[j] += r(i, j) * r(i, j);

  double pivot_max = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t best = k;
    for (std::size_t j = k + 1; j < m; ++j)
      if (col_norm2[j] > col_norm2[best]) best = j;
    if (best != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(r(i, k), r(i, best));
      std::swap(col_norm2[k], col_norm2[best]);
      std::swap(perm[k], perm[best]);
    }

    // Householder reflector annihilating column k below the diagonal.
    double alpha = 0.0;
    for (std::size_t i = k; i < n; ++i) alpha += r(i, k) * r(i, k);
    alpha = std::sqrt(alpha);
    if (r(k, k) > 0.0) alpha = -alpha;

    const double pivot = std::abs(alpha);
    pivot_max = std::max(pivot_max, pivot);
    if (pivot <= 1e-12 * pivot_max) {
      throw SingularSystemError("least_squares_solve: rank-deficient matrix (pivot " +
                                std::to_string(k) + ")");
    }

    Vector v(n - k, 0.0);
    v[0] = r(k, k) - alpha;
    for (std::size_t i = k + 1; i < n; ++i) v[i - k] = r(i, k);
    double vnorm2 = dot(v, v);
    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < n; ++i) r(i, k) = 0.0;
    if (vnorm2 > 0.0) {
      for (std::size_t j = k + 1; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = k; i < n; ++i) s += v[i - k] * r(i, j);
        s *= 2.0 / vnorm2;
        for (std::size_t i = k; i < n; ++i) r(i, j) -= s * v[i - k];
      }
      double s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += v[i - k] * qtb[i];
      s *= 2.0 / vnorm2;
      for (std::size_t i = k; i < n; ++i) qtb[i] -= s * v[i - k];
    }

    for (std::size_t j = k + 1; j < m; ++j) {
      col_norm2[j] -= r(k, j) * r(k, j);
      if (col_norm2[j] < 0.0) col_norm2[j] = 0.0;
    }
  }

  // Back substitution R y = Q^T b, then undo the column permutation.
  Vector y(m, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    double s = qtb[k];
    for (std::size_t j = k + 1; j < m; ++j) s -= r(k, j) * y[j];
    y[k] = s / r(k, k);
  }
  Vector x(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) x[perm[k]] = y[k];
  return x;
}

EigenDecomposition symmetric_eigen(Matrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("symmetric_eigen: matrix not square");

  Matrix v = Matrix::identity(n);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-30 * (1.0 + std::abs(a(0, 0)))) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::abs(apq) <= 1e-300 ||
            std::abs(apq) < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a(p, j);
          const double aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = s * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    out.values[r] = a(order[r], order[r]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(r, i) = v(i, order[r]);
  }
  return out;
}

PcaResult pca_fit(const Matrix& x, std::size_t m) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (n < 2) throw DimensionError("pca_fit: need at least 2 rows");
  if (m < 1 || m > std::min(n - 1, d)) {
    throw DimensionError("pca_fit: m must be in [1, min(n-1, d)], got " +
                         std::to_string(m));
  }

  PcaResult out;
  out.mean.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) out.mean[j] += x(i, j);
  for (std::size_t j = 0; j < d; ++j) out.mean[j] /= static_cast<double>(n);

  Matrix xc(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) xc(i, j) = x(i, j) - out.mean[j];

  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) trace += xc(i, j) * xc(i, j);
  out.total_variance = trace / static_cast<double>(n);

  out.components = Matrix(m, d);
  out.eigenvalues.assign(m, 0.0);

  if (n >= d) {
    // Covariance route: C = (1/n) Xc^T Xc, d x d.
    Matrix c(d, d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* ri = xc.row(i);
      for (std::size_t p = 0; p < d; ++p) {
        const double rip = ri[p];
        if (rip == 0.0) continue;
        double* crow = c.row(p);
        for (std::size_t q = 0; q < d; ++q) crow[q] += rip * ri[q];
      }
    }
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) c(p, q) /= static_cast<double>(n);

    EigenDecomposition eig = symmetric_eigen(c);
    for (std::size_t r = 0; r < m; ++r) {
      out.eigenvalues[r] = std::max(0.0, eig.values[r]);
      for (std::size_t j = 0; j < d; ++j) out.components(r, j) = eig.vectors(r, j);
    }
  } else {
    // Gram route for wide data: G = (1/n) Xc Xc^T shares nonzero eigenvalues
    // with the covariance; components come back through Xc^T.
    Matrix g(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double s = 0.0;
        const double* ri = xc.row(i);
        const double* rj = xc.row(j);
        for (std::size_t p = 0; p < d; ++p) s += ri[p] * rj[p];
        g(i, j) = s / static_cast<double>(n);
        g(j, i) = g(i, j);
      }
    }
    EigenDecomposition eig = symmetric_eigen(g);
    for (std::size_t r = 0; r < m; ++r) {
      const double lambda = std::max(0.0, eig.values[r]);
      out.eigenvalues[r] = lambda;
      if (lambda <= 1e-14 * std::max(1.0, eig.values[0])) {
        throw DimensionError(
            "pca_fit: data rank is below the requested component count " +
            std::to_string(m));
      }
      // v = Xc^T u / sqrt(n * lambda)
      const double inv = 1.0 / std::sqrt(static_cast<double>(n) * lambda);
      for (std::size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xc(i, j) * eig.vectors(r, i);
        out.components(r, j) = s * inv;
      }
    }
  }
  return out;
}

}  // namespace gencls::num
