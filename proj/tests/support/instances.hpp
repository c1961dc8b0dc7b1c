// Random instance generators and brute-force oracles for tests. Nothing
// here calls the solvers under test.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"

namespace pcrank::testing {

using Rng = std::mt19937_64;

/// Union-find connectivity over the present pairs.
inline bool connected_by_union_find(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (auto [a, b] : edges) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components <= 1;
}

inline bool connected_by_union_find(const PCMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.present(i, j)) edges.emplace_back(i, j);
    return connected_by_union_find(m.size(), edges);
}

/// Reciprocal matrix with entries log-uniform in [1/9, 9]; each unordered
/// pair deleted with probability p_delete; resampled until connected.
inline PCMatrix random_instance(Rng& rng, std::size_t n, double p_delete) {
    std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
    std::bernoulli_distribution drop(p_delete);
    while (true) {
        std::vector<Entry> e(n * n, kMissing);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (drop(rng)) continue;
                const double c = std::exp(log_entry(rng));
                e[i * n + j] = c;
                e[j * n + i] = 1.0 / c;
            }
        }
        PCMatrix m(n, std::move(e));
        if (connected_by_union_find(m)) return m;
    }
}

inline std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<double> random_positive(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> log_w(-3.0, 3.0);
    std::vector<double> v(n);
    for (double& x : v) x = std::exp(log_w(rng));
    return v;
}

/// c_ij = v_i / v_j, with pairs deleted as in random_instance.
inline PCMatrix consistent_instance(Rng& rng, const std::vector<double>& v, double p_delete) {
    const std::size_t n = v.size();
    std::bernoulli_distribution drop(p_delete);
    while (true) {
        std::vector<Entry> e(n * n, kMissing);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (p_delete > 0.0 && drop(rng)) continue;
                e[i * n + j] = v[i] / v[j];
                e[j * n + i] = v[j] / v[i];
            }
        }
        PCMatrix m(n, std::move(e));
        if (connected_by_union_find(m)) return m;
    }
}

inline std::vector<double> sum_normalized(std::vector<double> v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= s;
    return v;
}

/// Row geometric means of a complete matrix, normalized to sum one.
inline std::vector<double> row_geometric_means(const PCMatrix& c) {
    std::vector<double> g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        double log_sum = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) log_sum += std::log(c.value(i, j));
        g[i] = std::exp(log_sum / static_cast<double>(c.size()));
    }
    return sum_normalized(g);
}

/// Solves the geometric-mean fixed point directly: each ŵ_i becomes the
/// mean log of row i of the current completion, until nothing moves.
inline std::vector<double> gm_fixed_point(const PCMatrix& c, std::size_t max_sweeps = 200000) {
    const std::size_t n = c.size();
    std::vector<double> lw(n, 0.0);
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += c.present(i, j) ? std::log(c.value(i, j)) : lw[i] - lw[j];
            }
            next[i] = acc / static_cast<double>(n);
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - lw[i]));
        lw = std::move(next);
        if (delta < 1e-15) break;
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(lw[i]);
    return sum_normalized(w);
}

/// S*(C) evaluated straight from the definition over raw weights.
inline double s_star_oracle(const PCMatrix& c, const std::vector<double>& w) {
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c.present(i, j)) {
                const double d = std::log(c.value(i, j)) - std::log(w[i]) + std::log(w[j]);
                total += d * d;
            }
    return total;
}

/// Leibniz expansion; exact for the small integer matrices it is used on.
inline double leibniz_determinant(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double det = 0.0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        double term = inversions % 2 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Principal eigenvector of a complete matrix from Eigen's general
/// eigensolver, normalized to sum one.
inline std::vector<double> eigen_principal_vector(const PCMatrix& c, double* lambda = nullptr) {
    const auto n = static_cast<Eigen::Index>(c.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = c.value(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < n; ++k)
        if (solver.eigenvalues()[k].real() > solver.eigenvalues()[best].real()) best = k;
    if (lambda) *lambda = solver.eigenvalues()[best].real();
    std::vector<double> v(c.size());
    for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, best).real();
    if (v[0] < 0) for (double& x : v) x = -x;
    return sum_normalized(v);
}

/// The worked 4x4 example: c14 = c34 = 2, c23 = 3 and reciprocals.
inline PCMatrix worked_example() {
    return PCMatrix::from_rows({{1.0, kMissing, kMissing, 2.0},
                                {kMissing, 1.0, 3.0, kMissing},
                                {kMissing, 1.0 / 3.0, 1.0, 2.0},
                                {0.5, kMissing, 0.5, 1.0}});
}

inline PCMatrix permuted(const PCMatrix& c, const std::vector<std::size_t>& perm) {
    // Row i of the result is alternative perm[i] of c.
    const std::size_t n = c.size();
    std::vector<Entry> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = c.at(perm[i], perm[j]);
    return PCMatrix(n, std::move(e));
}

}  // namespace pcrank::testing
