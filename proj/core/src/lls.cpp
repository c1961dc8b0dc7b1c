#include "pcrank/lls.hpp"

#include <cmath>

#include "pcrank/error.hpp"
#include "pcrank/graph.hpp"
#include "pcrank/linalg.hpp"

namespace pcrank {

LlsSystem build_lls(const PCMatrix& c, std::size_t anchor, double reciprocity_tol) {
    const std::size_t n = c.size();
    if (anchor >= n) throw IndexError("anchor " + std::to_string(anchor) + " out of range for n=" + std::to_string(n));
    require_rankable(c, reciprocity_tol);

    LlsSystem sys{laplacian(graph_of(c)), Vector(n, 0.0), anchor};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && c.present(i, j)) sys.b[i] += std::log(c.value(i, j));
        }
    }
    return sys;
}

Vector lls_log_weights(const PCMatrix& c, std::size_t anchor, double reciprocity_tol) {
    const LlsSystem sys = build_lls(c, anchor, reciprocity_tol);
    const std::size_t n = c.size();

    Vector reduced_rhs;
    reduced_rhs.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != anchor) reduced_rhs.push_back(sys.b[i]);
    }
    const Vector reduced = solve(sys.laplacian.without(anchor), reduced_rhs, /*spd_hint=*/true);

    Vector lw(n, 0.0);
    for (std::size_t i = 0, k = 0; i < n; ++i) {
        if (i != anchor) lw[i] = reduced[k++];
    }
    return lw;
}

PriorityVector rank_lls(const PCMatrix& c, Normalization normalization, std::size_t anchor,
                        double reciprocity_tol) {
    return PriorityVector::from_log_weights(lls_log_weights(c, anchor, reciprocity_tol), normalization);
}

}  // namespace pcrank
