// Exception hierarchy shared by every pcrank module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcrank {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input-format errors. The CLI maps all of these to exit status 2.

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ValueError : public Error {
public:
    ValueError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Numerical and domain errors.

class IndexError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix(std::size_t pivot_index, double pivot, double threshold);
    std::size_t pivot_index() const noexcept { return pivot_index_; }
    double pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_index_;
    double pivot_;
};

class NoConvergence : public Error {
public:
    NoConvergence(std::size_t iterations, double residual);
    std::size_t iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

class IncompleteInput : public Error {
public:
    using Error::Error;
};

/// Thrown by the solvers when the comparison graph has more than one
/// connected component. Components hold 0-based alternative indices.
class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(std::vector<std::vector<std::size_t>> components);
    const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

private:
    std::vector<std::vector<std::size_t>> components_;
};

}  // namespace pcrank
