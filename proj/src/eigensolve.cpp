#include "sl2lab/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <lapacke.h>
#include <limits>
#include <mutex>
#include <vector>

#include "sl2lab/rng.hpp"

extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace sl2lab {

namespace {

// BLAS threading is pinned to one thread: eigensolves run inside our own
// worker pool, and results must be byte-identical across worker counts.
void pin_blas_threads() {
  static std::once_flag flag;
  std::call_once(flag, []() {
    if (openblas_set_num_threads) openblas_set_num_threads(1);
  });
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

struct LanczosResult {
  double value = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  uint64_t matvecs = 0;
};

// Thick-restart Lanczos with full reorthogonalization for the largest
// eigenvalue of `op` (negated when asked) on the orthogonal complement of
// `locked`. The projected matrix is measured explicitly (full Rayleigh-Ritz):
// a few more dot products than tridiagonal bookkeeping, but robust under
// restarts and exact when the basis exhausts the complement.
LanczosResult lanczos_top(const LinearOperator& op, bool negate,
                          const std::vector<std::vector<double>>& locked, double tol,
                          uint64_t seed, uint64_t matvec_cap) {
  const uint32_t n = op.n;
  const uint32_t complement = n - (uint32_t)locked.size();
  const uint32_t m_max =
      std::max<uint32_t>(2, (uint32_t)std::min<uint64_t>(complement, n > 100000 ? 60 : 80));
  const uint32_t keep = 8;

  std::vector<std::vector<double>> basis;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m_max, m_max);
  std::vector<double> w(n), ritz(n);
  LanczosResult best;
  uint64_t matvecs = 0;

  const auto apply_op = [&](const std::vector<double>& in, std::vector<double>& out) {
    op.apply(in.data(), out.data());
    if (negate) {
      for (double& v : out) v = -v;
    }
    ++matvecs;
  };

  // Two-pass Gram-Schmidt against locked vectors and the basis; first-pass
  // coefficients are the projected-matrix entries when record is set.
  const auto orthogonalize = [&](std::vector<double>& v, bool record, uint32_t col) {
    for (const auto& l : locked) axpy(-dot(v, l), l, v);
    for (uint32_t pass = 0; pass < 2; ++pass) {
      for (uint32_t i = 0; i < basis.size(); ++i) {
        const double c = dot(v, basis[i]);
        if (record && pass == 0) {
          H(i, col) = c;
          H(col, i) = c;
        }
        axpy(-c, basis[i], v);
      }
    }
  };

  SplitMix64 rng(seed);
  // Random direction in the complement; returned unnormalized so callers can
  // detect an exhausted complement.
  const auto fresh_direction = [&]() {
    std::vector<double> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = rng.next_double() - 0.5;
    orthogonalize(v, false, 0);
    return v;
  };

  {
    std::vector<double> v0 = fresh_direction();
    const double nv = norm2(v0);
    if (nv < 1e-12) {
      best.value = negate ? -0.0 : 0.0;
      best.matvecs = matvecs;
      return best;
    }
    for (double& x : v0) x /= nv;
    basis.push_back(std::move(v0));
  }

  while (true) {
    // Grow the basis; processing column j measures H(*, j) and produces the
    // next direction from the orthogonalized image.
    bool exhausted = false;
    while (basis.size() < m_max && matvecs < matvec_cap && !exhausted) {
      const uint32_t j = (uint32_t)basis.size() - 1;
      apply_op(basis[j], w);
      std::vector<double> next = w;
      orthogonalize(next, true, j);
      const double beta = norm2(next);
      if (beta > 1e-13 * std::max(1.0, std::abs(H(j, j)))) {
        for (double& x : next) x /= beta;
        basis.push_back(std::move(next));
      } else if (basis.size() < complement) {
        next = fresh_direction();
        const double nb = norm2(next);
        if (nb < 1e-10) {
          exhausted = true;
        } else {
          for (double& x : next) x /= nb;
          basis.push_back(std::move(next));
        }
      } else {
        exhausted = true;
      }
    }
    // The newest column may not have been measured yet.
    {
      const uint32_t j = (uint32_t)basis.size() - 1;
      apply_op(basis[j], w);
      for (uint32_t i = 0; i < basis.size(); ++i) {
        const double c = dot(w, basis[i]);
        H(i, j) = c;
        H(j, i) = c;
      }
    }

    const uint32_t m = (uint32_t)basis.size();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(m, m));

    std::fill(ritz.begin(), ritz.end(), 0.0);
    for (uint32_t i = 0; i < m; ++i) axpy(es.eigenvectors()(i, m - 1), basis[i], ritz);
    const double rn = norm2(ritz);
    for (double& x : ritz) x /= rn;
    apply_op(ritz, w);
    const double lambda = dot(w, ritz);
    axpy(-lambda, ritz, w);
    const double residual = norm2(w);

    if (residual < best.residual) {
      best.value = negate ? -lambda : lambda;
      best.residual = residual;
    }
    if (residual <= tol || exhausted) {
      best.converged = residual <= tol;
      best.matvecs = matvecs;
      return best;
    }
    if (matvecs >= matvec_cap) {
      best.matvecs = matvecs;
      return best;
    }

    // Thick restart: keep the leading Ritz vectors, re-measure their block,
    // and continue from the residual direction of the top pair.
    const uint32_t k = std::min<uint32_t>(keep, m - 1);
    std::vector<std::vector<double>> kept;
    kept.reserve(k + 1);
    for (uint32_t r = 0; r < k; ++r) {
      std::vector<double> u(n, 0.0);
      for (uint32_t i = 0; i < m; ++i) axpy(es.eigenvectors()(i, m - 1 - r), basis[i], u);
      kept.push_back(std::move(u));
    }
    basis = std::move(kept);
    H.setZero();
    for (uint32_t j = 0; j < basis.size(); ++j) {
      apply_op(basis[j], w);
      for (uint32_t i = 0; i < basis.size(); ++i) {
        const double c = dot(w, basis[i]);
        H(i, j) = c;
        H(j, i) = c;
      }
    }
    apply_op(ritz, w);
    std::vector<double> next = w;
    orthogonalize(next, false, 0);
    double nb = norm2(next);
    if (nb < 1e-12) {
      next = fresh_direction();
      nb = norm2(next);
      if (nb < 1e-10) {
        best.matvecs = matvecs;
        return best;
      }
    }
    for (double& x : next) x /= nb;
    basis.push_back(std::move(next));
  }
}

}  // namespace

SpectrumReport spectrum_extremes(const LinearOperator& op, double tol, SolveMethod method,
                                 uint64_t seed) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  pin_blas_threads();
  const uint32_t n = op.n;
  SpectrumReport report;
  report.tol = tol;

  const bool dense = (method == SolveMethod::Dense) ||
                     (method == SolveMethod::Auto && n <= kDenseThreshold);
  if (dense) {
    Eigen::MatrixXd M(n, n);
    std::vector<double> e(n, 0.0), col(n);
    for (uint32_t j = 0; j < n; ++j) {
      e[j] = 1.0;
      op.apply(e.data(), col.data());
      e[j] = 0.0;
      for (uint32_t i = 0; i < n; ++i) M(i, j) = col[i];
    }
    std::vector<double> evals(n);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', (int)n, M.data(), (int)n,
                                    evals.data());
    if (info != 0) throw std::runtime_error("dsyevd failed: info=" + std::to_string(info));
    report.method = "dense";
    report.lambda2 = evals[n - 2];
    report.lambda_min = evals[0];
    const auto pair_residual = [&](uint32_t colidx, double lambda) {
      std::vector<double> v(n), r(n);
      for (uint32_t i = 0; i < n; ++i) v[i] = M(i, colidx);
      op.apply(v.data(), r.data());
      double s = 0.0;
      for (uint32_t i = 0; i < n; ++i) {
        const double d = r[i] - lambda * v[i];
        s += d * d;
      }
      return std::sqrt(s);
    };
    report.residual = std::max(pair_residual(n - 2, report.lambda2),
                               pair_residual(0, report.lambda_min));
    report.converged = report.residual <= tol;
    report.matvecs = 0;
  } else {
    std::vector<std::vector<double>> locked(1, std::vector<double>(n, 1.0 / std::sqrt((double)n)));
    const uint64_t cap = (uint64_t)(50.0 * std::sqrt((double)n)) + 160;
    const auto top = lanczos_top(op, false, locked, tol, derive_seed(seed, 0xa11ce), cap);
    const auto bottom = lanczos_top(op, true, locked, tol, derive_seed(seed, 0xb0b), cap);
    report.method = "iterative";
    report.lambda2 = top.value;
    report.lambda_min = bottom.value;
    report.residual = std::max(top.residual, bottom.residual);
    report.converged = top.converged && bottom.converged;
    report.matvecs = top.matvecs + bottom.matvecs;
  }

  report.lambda2 = std::clamp(report.lambda2, -1.0, 1.0);
  report.lambda_min = std::clamp(report.lambda_min, -1.0, report.lambda2);
  report.gap = 1.0 - report.lambda2;
  report.two_sided_gap = 1.0 - std::max(report.lambda2, std::abs(report.lambda_min));
  return report;
}

}  // namespace sl2lab
