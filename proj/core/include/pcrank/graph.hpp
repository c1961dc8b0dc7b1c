// Comparison graph of an incomplete PC matrix and its matrix forms.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pcrank/dense_matrix.hpp"
#include "pcrank/pc_matrix.hpp"

namespace pcrank {

/// Undirected simple graph on vertices 0..n-1; one vertex per alternative,
/// one edge per present comparison.
class ComparisonGraph {
public:
    explicit ComparisonGraph(std::size_t n);

    /// Adds the unordered edge {i, j}. Self-loops and duplicates are ignored.
    void add_edge(std::size_t i, std::size_t j);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool has_edge(std::size_t i, std::size_t j) const;
    const std::vector<std::size_t>& neighbors(std::size_t i) const;

    /// Edges as (i, j) with i < j, lexicographically ordered.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Edge {i,j} for every i != j with c_ij or c_ji present.
ComparisonGraph graph_of(const PCMatrix& m);

/// Number of neighbours of vertex i; IndexError if i is out of range.
std::size_t degree(const ComparisonGraph& g, std::size_t i);

DenseMatrix degree_matrix(const ComparisonGraph& g);
DenseMatrix adjacency_matrix(const ComparisonGraph& g);
/// degree_matrix(g) - adjacency_matrix(g).
DenseMatrix laplacian(const ComparisonGraph& g);

/// Connected components by breadth-first search, each sorted, ordered by
/// smallest member.
std::vector<std::vector<std::size_t>> connected_components(const ComparisonGraph& g);
bool is_connected(const ComparisonGraph& g);

}  // namespace pcrank
