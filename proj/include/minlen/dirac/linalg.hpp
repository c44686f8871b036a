#pragma once

// Thin wrappers over LAPACKE for the symmetric tridiagonal and banded eigenproblems.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

namespace minlen::dirac::linalg {

/// Symmetric tridiagonal matrix: diagonal d (n), off-diagonal e (n - 1).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Symmetric band matrix in lower storage: lower[r][i] = A(i + r, i), r = 0..kd.
struct SymmetricBand {
  std::size_t n = 0;
  std::size_t kd = 0;
  std::vector<std::vector<double>> lower;

  SymmetricBand(std::size_t size, std::size_t bandwidth)
      : n(size), kd(bandwidth), lower(bandwidth + 1, std::vector<double>(size, 0.0)) {}

  double& at(std::size_t i, std::size_t j) { return i >= j ? lower[i - j][j] : lower[j - i][i]; }

  std::vector<double> multiply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      y[j] += lower[0][j] * x[j];
      for (std::size_t r = 1; r <= kd && j + r < n; ++r) {
        y[j + r] += lower[r][j] * x[j];
        y[j] += lower[r][j] * x[j + r];
      }
    }
    return y;
  }
};

inline void check_info(lapack_int info, const char* routine) {
  if (info != 0) throw std::runtime_error(std::string(routine) + " failed, info = " + std::to_string(info));
}

/// The `count` smallest eigenvalues, ascending.
inline std::vector<double> lowest_eigenvalues(Tridiagonal t, std::size_t count) {
  const auto n = static_cast<lapack_int>(t.size());
  if (count == 0 || count > t.size()) throw std::invalid_argument("eigenvalue count out of range");
  std::vector<double> w(t.size());
  std::vector<lapack_int> support(2 * t.size());
  lapack_int found = 0;
  t.off.resize(t.size());  // dstevr wants n entries of workspace
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n, t.diag.data(), t.off.data(), 0.0,
                                         0.0, 1, static_cast<lapack_int>(count), 0.0, &found, w.data(),
                                         nullptr, 1, support.data());
  check_info(info, "dstevr");
  w.resize(static_cast<std::size_t>(found));
  return w;
}

/// Every eigenvalue, ascending.
inline std::vector<double> all_eigenvalues(Tridiagonal t) {
  const auto n = static_cast<lapack_int>(t.size());
  check_info(LAPACKE_dsterf(n, t.diag.data(), t.off.data()), "dsterf");
  return t.diag;
}

inline std::vector<double> lowest_eigenvalues(SymmetricBand a, std::size_t count) {
  const auto n = static_cast<lapack_int>(a.n);
  const auto kd = static_cast<lapack_int>(a.kd);
  if (count == 0 || count > a.n) throw std::invalid_argument("eigenvalue count out of range");
  // Column-major lower band storage: ab[r + j*(kd+1)] = A(j + r, j).
  std::vector<double> ab((a.kd + 1) * a.n);
  for (std::size_t j = 0; j < a.n; ++j)
    for (std::size_t r = 0; r <= a.kd; ++r) ab[r + j * (a.kd + 1)] = j + r < a.n ? a.lower[r][j] : 0.0;
  std::vector<double> w(a.n);
  std::vector<lapack_int> ifail(a.n);
  lapack_int found = 0;
  double q_unused = 0.0, z_unused = 0.0;
  const lapack_int info =
      LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'N', 'I', 'L', n, kd, ab.data(), kd + 1, &q_unused, 1, 0.0, 0.0, 1,
                     static_cast<lapack_int>(count), 0.0, &found, w.data(), &z_unused, 1, ifail.data());
  check_info(info, "dsbevx");
  w.resize(static_cast<std::size_t>(found));
  return w;
}

/// Eigenvector for the eigenvalue nearest `shift` by inverse iteration with a banded LU
/// solve; returns a unit-norm vector.
inline std::vector<double> inverse_iteration(const SymmetricBand& a, double shift, int iterations = 4) {
  const auto n = static_cast<lapack_int>(a.n);
  const auto kd = static_cast<lapack_int>(a.kd);
  const lapack_int ldab = 2 * kd + kd + 1;
  std::vector<double> x(a.n);
  for (std::size_t i = 0; i < a.n; ++i) x[i] = 1.0 + 0.01 * std::sin(0.37 * double(i));
  double sigma = shift;
  for (int attempt = 0; attempt < 3; ++attempt) {
    bool ok = true;
    for (int it = 0; it < iterations && ok; ++it) {
      std::vector<double> ab(static_cast<std::size_t>(ldab) * a.n, 0.0);
      // General band storage (column major): A(i, j) at ab[kl + ku + i - j + j*ldab].
      auto put = [&](std::size_t i, std::size_t j, double v) {
        ab[static_cast<std::size_t>(2 * kd) + i - j + j * static_cast<std::size_t>(ldab)] = v;
      };
      for (std::size_t j = 0; j < a.n; ++j) {
        put(j, j, a.lower[0][j] - sigma);
        for (std::size_t r = 1; r <= a.kd && j + r < a.n; ++r) {
          put(j + r, j, a.lower[r][j]);
          put(j, j + r, a.lower[r][j]);
        }
      }
      std::vector<lapack_int> pivots(a.n);
      const lapack_int info =
          LAPACKE_dgbsv(LAPACK_COL_MAJOR, n, kd, kd, 1, ab.data(), ldab, pivots.data(), x.data(), n);
      if (info > 0) {
        ok = false;
        break;
      }
      check_info(info, "dgbsv");
      double norm = 0.0;
      for (double v : x) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : x) v /= norm;
    }
    if (ok) return x;
    sigma += 1e-12 * (1.0 + std::abs(sigma));
  }
  throw std::runtime_error("inverse iteration: shifted matrix singular");
}

}  // namespace minlen::dirac::linalg
