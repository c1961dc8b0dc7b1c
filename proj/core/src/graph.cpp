#include "pcrank/graph.hpp"

#include <algorithm>
#include <queue>

#include "pcrank/error.hpp"

namespace pcrank {

ComparisonGraph::ComparisonGraph(std::size_t n) : adjacency_(n) {}

void ComparisonGraph::add_edge(std::size_t i, std::size_t j) {
    if (i >= vertex_count() || j >= vertex_count()) {
        throw IndexError("edge {" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
    }
    if (i == j || has_edge(i, j)) return;
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
    ++edge_count_;
}

bool ComparisonGraph::has_edge(std::size_t i, std::size_t j) const {
    const auto& adj = neighbors(i);
    return std::find(adj.begin(), adj.end(), j) != adj.end();
}

const std::vector<std::size_t>& ComparisonGraph::neighbors(std::size_t i) const {
    if (i >= vertex_count()) throw IndexError("vertex " + std::to_string(i) + " out of range");
    return adjacency_[i];
}

std::vector<std::pair<std::size_t, std::size_t>> ComparisonGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        for (std::size_t j : adjacency_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ComparisonGraph graph_of(const PCMatrix& m) {
    ComparisonGraph g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m.present(i, j) || m.present(j, i)) g.add_edge(i, j);
        }
    }
    return g;
}

std::size_t degree(const ComparisonGraph& g, std::size_t i) { return g.neighbors(i).size(); }

DenseMatrix degree_matrix(const ComparisonGraph& g) {
    DenseMatrix d(g.vertex_count(), g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) d(i, i) = static_cast<double>(degree(g, i));
    return d;
}

DenseMatrix adjacency_matrix(const ComparisonGraph& g) {
    DenseMatrix p(g.vertex_count(), g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (std::size_t j : g.neighbors(i)) p(i, j) = 1.0;
    }
    return p;
}

DenseMatrix laplacian(const ComparisonGraph& g) { return degree_matrix(g) - adjacency_matrix(g); }

std::vector<std::vector<std::size_t>> connected_components(const ComparisonGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        auto& component = components.emplace_back();
        std::queue<std::size_t> frontier;
        frontier.push(start);
        seen[start] = true;
        while (!frontier.empty()) {
            const std::size_t v = frontier.front();
            frontier.pop();
            component.push_back(v);
            for (std::size_t u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    frontier.push(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
    }
    return components;
}

bool is_connected(const ComparisonGraph& g) { return connected_components(g).size() <= 1; }

}  // namespace pcrank
