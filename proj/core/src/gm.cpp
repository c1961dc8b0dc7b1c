#include "pcrank/gm.hpp"

#include <cmath>
#include <stdexcept>

#include "pcrank/graph.hpp"
#include "pcrank/linalg.hpp"

namespace pcrank {

GmSystem build_system(const PCMatrix& c, double reciprocity_tol) {
    require_rankable(c, reciprocity_tol);
    const std::size_t n = c.size();

    GmSystem sys{DenseMatrix(n, n), Vector(n, 0.0), std::vector<std::size_t>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        sys.missing_counts[i] = c.missing_in_row(i);
        sys.m(i, i) = static_cast<double>(n - sys.missing_counts[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (c.missing(i, j)) {
                sys.m(i, j) = 1.0;
            } else {
                sys.r[i] += std::log(c.value(i, j));
            }
        }
    }

    if (sys.m != laplacian(graph_of(c)) + DenseMatrix::ones(n, n)) {
        throw std::logic_error("geometric-mean system differs from Laplacian + J");
    }
    return sys;
}

Vector gm_log_weights(const PCMatrix& c, double reciprocity_tol) {
    const GmSystem sys = build_system(c, reciprocity_tol);
    return solve(sys.m, sys.r, /*spd_hint=*/true);
}

PriorityVector rank_gm(const PCMatrix& c, Normalization normalization, double reciprocity_tol) {
    return PriorityVector::from_log_weights(gm_log_weights(c, reciprocity_tol), normalization);
}

PCMatrix complete_matrix(const PCMatrix& c, double reciprocity_tol) {
    const std::size_t n = c.size();
    if (c.is_complete()) {
        require_rankable(c, reciprocity_tol);
        return c;
    }
    const Vector lw = gm_log_weights(c, reciprocity_tol);
    std::vector<Entry> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Entry& e = c.at(i, j);
            entries.push_back(e ? e : Entry(std::exp(lw[i] - lw[j])));
        }
    }
    return PCMatrix(n, std::move(entries), c.labels());
}

}  // namespace pcrank
