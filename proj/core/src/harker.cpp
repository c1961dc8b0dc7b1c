#include "pcrank/harker.hpp"

namespace pcrank {

HarkerSystem build_harker(const PCMatrix& c, double reciprocity_tol) {
    require_rankable(c, reciprocity_tol);
    const std::size_t n = c.size();
    HarkerSystem sys{DenseMatrix(n, n), std::vector<std::size_t>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        sys.missing_counts[i] = c.missing_in_row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                sys.b(i, j) = static_cast<double>(sys.missing_counts[i] + 1);
            } else if (c.present(i, j)) {
                sys.b(i, j) = c.value(i, j);
            }
        }
    }
    return sys;
}

HarkerSolution solve_harker(const PCMatrix& c, Normalization normalization, const PowerIterationOptions& options,
                            double reciprocity_tol) {
    const HarkerSystem sys = build_harker(c, reciprocity_tol);
    EigenPair pair = power_iteration(sys.b, options);
    return {PriorityVector::normalized(pair.vector, normalization), pair.eigenvalue, pair.iterations,
            pair.residual};
}

PriorityVector rank_harker(const PCMatrix& c, Normalization normalization, double reciprocity_tol) {
    return solve_harker(c, normalization, {}, reciprocity_tol).weights;
}

}  // namespace pcrank
