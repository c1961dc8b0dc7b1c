#include "pcrank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "pcrank/error.hpp"

namespace pcrank {

namespace {

void require_system(const DenseMatrix& a, std::size_t rhs_size) {
    if (!a.is_square()) {
        throw DimensionMismatch("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                ", expected square");
    }
    if (rhs_size != a.rows()) {
        throw DimensionMismatch("right-hand side has length " + std::to_string(rhs_size) + ", expected " +
                                std::to_string(a.rows()));
    }
}

}  // namespace

Cholesky::Cholesky(const DenseMatrix& a) : lower_(a.rows(), a.cols()) {
    require_system(a, a.rows());
    const std::size_t n = a.rows();
    const double threshold = kSingularPivotRatio * a.max_norm();
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= lower_(j, k) * lower_(j, k);
        if (!(diag > threshold)) throw SingularMatrix(j, diag, threshold);
        const double ljj = std::sqrt(diag);
        lower_(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double sum = a(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= lower_(i, k) * lower_(j, k);
            lower_(i, j) = sum / ljj;
        }
    }
}

Vector Cholesky::solve(std::span<const double> rhs) const {
    require_system(lower_, rhs.size());
    const std::size_t n = lower_.rows();
    Vector y(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= lower_(i, k) * y[k];
        y[i] /= lower_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) y[i] -= lower_(k, i) * y[k];
        y[i] /= lower_(i, i);
    }
    return y;
}

PivotedLU::PivotedLU(const DenseMatrix& a) : packed_(a), permutation_(a.rows()) {
    require_system(a, a.rows());
    const std::size_t n = a.rows();
    const double threshold = kSingularPivotRatio * a.max_norm();
    for (std::size_t i = 0; i < n; ++i) permutation_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(packed_(i, k)) > std::abs(packed_(pivot_row, k))) pivot_row = i;
        }
        const double pivot = packed_(pivot_row, k);
        if (!(std::abs(pivot) > threshold)) throw SingularMatrix(k, pivot, threshold);
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(packed_(k, j), packed_(pivot_row, j));
            std::swap(permutation_[k], permutation_[pivot_row]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = packed_(i, k) / pivot;
            packed_(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) packed_(i, j) -= factor * packed_(k, j);
        }
    }
}

Vector PivotedLU::solve(std::span<const double> rhs) const {
    require_system(packed_, rhs.size());
    const std::size_t n = packed_.rows();
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = rhs[permutation_[i]];
        for (std::size_t k = 0; k < i; ++k) sum -= packed_(i, k) * x[k];
        x[i] = sum;
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) x[i] -= packed_(i, k) * x[k];
        x[i] /= packed_(i, i);
    }
    return x;
}

Vector solve(const DenseMatrix& a, std::span<const double> rhs, bool spd_hint) {
    require_system(a, rhs.size());
    if (spd_hint) return Cholesky(a).solve(rhs);
    return PivotedLU(a).solve(rhs);
}

EigenPair power_iteration(const DenseMatrix& a, const PowerIterationOptions& options) {
    if (!a.is_square() || a.rows() == 0) throw DimensionMismatch("power iteration needs a non-empty square matrix");
    const std::size_t n = a.rows();

    EigenPair result;
    result.vector.assign(n, 1.0 / static_cast<double>(n));
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
        Vector next = a * result.vector;
        const double lambda = norm_1(next);  // ||v||_1 == 1 and v >= 0
        if (!(lambda > 0.0) || !std::isfinite(lambda)) throw NoConvergence(iter, residual);

        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(next[i] - lambda * result.vector[i]));
        residual = worst / (lambda * norm_inf(result.vector));

        result.eigenvalue = lambda;
        result.iterations = iter;
        result.residual = residual;
        if (residual <= options.tol) return result;

        for (double& x : next) x /= lambda;
        result.vector = std::move(next);
    }
    throw NoConvergence(options.max_iter, residual);
}

}  // namespace pcrank
