// Structural checks on incomplete PC matrices.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcrank/error.hpp"
#include "pcrank/pc_matrix.hpp"

namespace pcrank {

inline constexpr double kDefaultReciprocityTolerance = 1e-9;

enum class ViolationKind {
    NonPositive,
    DiagonalNotOne,
    NonReciprocal,
    AsymmetricMissingness,
    Disconnected,
    RowAllMissing,
};

std::string_view to_string(ViolationKind kind);

/// One failed rule. Indices are 0-based; Disconnected carries no pair and
/// RowAllMissing uses i == j == the row.
struct Violation {
    ViolationKind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Components of the comparison graph, filled in whether or not it is connected.
    std::vector<std::vector<std::size_t>> components;
    /// Unordered pairs {i,j}, i<j, with at least one side present.
    std::size_t present_pairs = 0;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const;
};

/// Reports every violation of positivity, unit diagonal, reciprocity
/// (|c_ij c_ji - 1| > tol, or a one-sided `?`), row emptiness and graph
/// connectivity. Never throws for bad data.
///
/// The effective reciprocity threshold is max(tol, 4 eps) so that tol = 0
/// still accepts pairs such as 49 and 1/49 whose product rounds off 1.
ValidationReport validate(const PCMatrix& m, double tol = kDefaultReciprocityTolerance);

/// Raised by the solvers when validation fails for a reason other than
/// disconnection.
class InvalidMatrix : public Error {
public:
    explicit InvalidMatrix(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Validates and throws InvalidMatrix or DisconnectedGraph on failure.
void require_rankable(const PCMatrix& m, double tol = kDefaultReciprocityTolerance);

}  // namespace pcrank
