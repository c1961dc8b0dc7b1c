#include "pcrank/error.hpp"

#include <sstream>

namespace pcrank {

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& what) {
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << what;
    return out.str();
}

std::string describe_components(const std::vector<std::vector<std::size_t>>& components) {
    std::ostringstream out;
    out << "disconnected comparison graph: components ";
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c > 0) out << ',';
        out << '{';
        for (std::size_t k = 0; k < components[c].size(); ++k) {
            if (k > 0) out << ',';
            out << 'a' << components[c][k] + 1;
        }
        out << '}';
    }
    return out.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : Error(located(line, column, what)), line_(line), column_(column) {}

ValueError::ValueError(std::size_t line, std::size_t column, const std::string& what)
    : Error(located(line, column, what)), line_(line), column_(column) {}

SingularMatrix::SingularMatrix(std::size_t pivot_index, double pivot, double threshold)
    : Error("singular matrix: pivot " + std::to_string(pivot) + " at index " +
            std::to_string(pivot_index) + " is below threshold " + std::to_string(threshold)),
      pivot_index_(pivot_index),
      pivot_(pivot) {}

NoConvergence::NoConvergence(std::size_t iterations, double residual)
    : Error("power iteration did not converge after " + std::to_string(iterations) +
            " iterations (residual " + std::to_string(residual) + ")"),
      iterations_(iterations),
      residual_(residual) {}

DisconnectedGraph::DisconnectedGraph(std::vector<std::vector<std::size_t>> components)
    : Error(describe_components(components)), components_(std::move(components)) {}

}  // namespace pcrank
