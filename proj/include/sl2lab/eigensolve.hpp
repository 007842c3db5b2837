#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace sl2lab {

/// A symmetric operator given by its action; dense assembly is done by
/// applying it to unit vectors when the dense path is selected.
struct LinearOperator {
  uint32_t n = 0;
  std::function<void(const double*, double*)> apply;
};

enum class SolveMethod { Auto, Dense, Iterative };

struct SpectrumReport {
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double gap = 0.0;            // 1 - lambda2 (one-sided, the primary figure)
  double two_sided_gap = 0.0;  // 1 - max(lambda2, |lambda_min|)
  double residual = 0.0;       // max l2 residual of the two returned eigenpairs
  double tol = 0.0;
  std::string method;          // "dense" | "iterative"
  bool converged = false;
  uint64_t matvecs = 0;
};

/// Group order at or below which Auto picks the dense eigensolver.
inline constexpr uint32_t kDenseThreshold = 2000;
inline constexpr uint64_t kDefaultEigSeed = 1;

/// Second-largest and smallest eigenvalue of a self-adjoint Markov operator
/// (top eigenvalue 1 with the constant eigenvector is deflated, not
/// computed). Dense: LAPACK dsyevd on the assembled matrix. Iterative:
/// thick-restart Lanczos with full reorthogonalization, seeded start vector
/// and a matvec budget of 50*sqrt(n) per extremal end; non-convergence is
/// reported via the flag, with the best estimate retained.
SpectrumReport spectrum_extremes(const LinearOperator& op, double tol,
                                 SolveMethod method = SolveMethod::Auto,
                                 uint64_t seed = kDefaultEigSeed);

}  // namespace sl2lab
