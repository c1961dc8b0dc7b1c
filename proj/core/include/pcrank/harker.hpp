// Harker's eigenvector method for incomplete PC matrices.
#pragma once

#include <cstddef>
#include <vector>

#include "pcrank/dense_matrix.hpp"
#include "pcrank/linalg.hpp"
#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"
#include "pcrank/validation.hpp"

namespace pcrank {

/// b_ij = c_ij for present off-diagonal entries, 0 for missing ones, and
/// b_ii = s_i + 1 where s_i counts the missing entries of row i. For a
/// complete matrix B == C.
struct HarkerSystem {
    DenseMatrix b;
    std::vector<std::size_t> missing_counts;
};

HarkerSystem build_harker(const PCMatrix& c, double reciprocity_tol = kDefaultReciprocityTolerance);

struct HarkerSolution {
    PriorityVector weights;
    double lambda_max;
    std::size_t iterations;
    double residual;
};

/// Principal eigenpair of B. Throws DisconnectedGraph, InvalidMatrix or NoConvergence.
HarkerSolution solve_harker(const PCMatrix& c, Normalization normalization = Normalization::SumToOne,
                            const PowerIterationOptions& options = {},
                            double reciprocity_tol = kDefaultReciprocityTolerance);

PriorityVector rank_harker(const PCMatrix& c, Normalization normalization = Normalization::SumToOne,
                           double reciprocity_tol = kDefaultReciprocityTolerance);

}  // namespace pcrank
