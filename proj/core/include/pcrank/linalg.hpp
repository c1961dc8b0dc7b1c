// Dense linear algebra kernel: direct solves and power iteration.
#pragma once

#include <cstddef>
#include <span>

#include "pcrank/dense_matrix.hpp"

namespace pcrank {

/// Pivots with magnitude at or below this fraction of the matrix max-norm
/// are treated as zero.
inline constexpr double kSingularPivotRatio = 1e-12;

/// Lower-triangular Cholesky factor L with A = L L^T.
class Cholesky {
public:
    /// Throws SingularMatrix if A is not numerically positive definite.
    explicit Cholesky(const DenseMatrix& a);
    Vector solve(std::span<const double> rhs) const;
    const DenseMatrix& factor() const noexcept { return lower_; }

private:
    DenseMatrix lower_;
};

/// PA = LU with partial pivoting, packed in one matrix.
class PivotedLU {
public:
    /// Throws SingularMatrix on a pivot at or below the threshold.
    explicit PivotedLU(const DenseMatrix& a);
    Vector solve(std::span<const double> rhs) const;

private:
    DenseMatrix packed_;
    std::vector<std::size_t> permutation_;
};

/// Solves A x = rhs. With spd_hint a Cholesky factorization is used,
/// otherwise LU with partial pivoting.
/// Throws DimensionMismatch or SingularMatrix.
Vector solve(const DenseMatrix& a, std::span<const double> rhs, bool spd_hint = false);

struct PowerIterationOptions {
    double tol = 1e-12;
    std::size_t max_iter = 100'000;
};

struct EigenPair {
    double eigenvalue = 0.0;
    Vector vector;  // strictly positive, unit 1-norm
    std::size_t iterations = 0;
    double residual = 0.0;  // ||A v - lambda v||_inf / (lambda ||v||_inf)
};

/// Dominant eigenpair of a nonnegative irreducible matrix, started from the
/// uniform vector and renormalized to unit 1-norm every step.
/// Throws NoConvergence, or DimensionMismatch for non-square input.
EigenPair power_iteration(const DenseMatrix& a, const PowerIterationOptions& options = {});

}  // namespace pcrank
