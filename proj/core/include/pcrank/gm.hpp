// Geometric-mean ranking for incomplete PC matrices.
//
// Every missing c_ij is replaced by the unknown ratio w_i / w_j and each
// w_i is required to equal the geometric mean of row i of the completed
// matrix. Taking logarithms turns that fixed point into the linear system
//
//     M ŵ = r,   ŵ_i = ln w_i,
//
// with m_ii = n - S_i (S_i missing entries in row i), m_ij = 1 where c_ij
// is missing, 0 where it is present, and r_i the sum of ln c_ij over the
// present entries of row i. M equals L + J, the Laplacian of the
// comparison graph plus the all-ones matrix, which is positive definite
// whenever the graph is connected.
#pragma once

#include <cstddef>
#include <vector>

#include "pcrank/dense_matrix.hpp"
#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"
#include "pcrank/validation.hpp"

namespace pcrank {

struct GmSystem {
    DenseMatrix m;
    Vector r;
    std::vector<std::size_t> missing_counts;
};

/// Builds M and r. Throws DisconnectedGraph or InvalidMatrix when the
/// input fails validation at the given reciprocity tolerance.
GmSystem build_system(const PCMatrix& c, double reciprocity_tol = kDefaultReciprocityTolerance);

/// Solution ŵ of M ŵ = r (natural-log weights, unnormalized).
Vector gm_log_weights(const PCMatrix& c, double reciprocity_tol = kDefaultReciprocityTolerance);

PriorityVector rank_gm(const PCMatrix& c, Normalization normalization = Normalization::SumToOne,
                       double reciprocity_tol = kDefaultReciprocityTolerance);

/// C* with each missing c_ij replaced by exp(ŵ_i - ŵ_j); present entries
/// are copied unchanged.
PCMatrix complete_matrix(const PCMatrix& c, double reciprocity_tol = kDefaultReciprocityTolerance);

}  // namespace pcrank
