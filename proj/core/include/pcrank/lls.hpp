// Logarithmic least squares over the present comparisons.
//
// Minimizing the sum of (ln c_ij - ŵ_i + ŵ_j)^2 over present entries gives
// the normal equations L ŵ = b, with L the comparison-graph Laplacian and
// b_i the sum of ln c_ij over present entries of row i. L is singular along
// the all-ones direction, so one alternative is pinned at ŵ = 0 and its row
// and column are removed, leaving an SPD system for connected graphs.
#pragma once

#include <cstddef>

#include "pcrank/dense_matrix.hpp"
#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"
#include "pcrank/validation.hpp"

namespace pcrank {

struct LlsSystem {
    DenseMatrix laplacian;
    Vector b;
    std::size_t anchored_index = 0;
};

/// Throws DisconnectedGraph, InvalidMatrix, or IndexError for a bad anchor.
LlsSystem build_lls(const PCMatrix& c, std::size_t anchor = 0,
                    double reciprocity_tol = kDefaultReciprocityTolerance);

/// Log-weights with ŵ[anchor] == 0.
Vector lls_log_weights(const PCMatrix& c, std::size_t anchor = 0,
                       double reciprocity_tol = kDefaultReciprocityTolerance);

PriorityVector rank_lls(const PCMatrix& c, Normalization normalization = Normalization::SumToOne,
                        std::size_t anchor = 0, double reciprocity_tol = kDefaultReciprocityTolerance);

}  // namespace pcrank
