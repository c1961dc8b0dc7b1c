// Error functionals and ranking comparison.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"

namespace pcrank {

inline constexpr double kTieTolerance = 1e-9;

/// Sum over all i, j of (ln c_ij - ln(w_i / w_j))^2. Throws IncompleteInput
/// if any entry is missing.
double s_complete(const PCMatrix& c, const PriorityVector& w);

/// The same sum restricted to present entries.
double s_star(const PCMatrix& c, const PriorityVector& w);

/// Alternatives from most to least preferred. Each group holds indices whose
/// weights lie within kTieTolerance (relative) of the group's first member.
struct OrdinalRanking {
    std::vector<std::vector<std::size_t>> groups;
    friend bool operator==(const OrdinalRanking&, const OrdinalRanking&) = default;
};

OrdinalRanking ordinal_ranking(const PriorityVector& w, double tie_tol = kTieTolerance);

/// "a2 > a1 = a3 > a4"
std::string format_ranking(const OrdinalRanking& ranking, const std::vector<std::string>& labels);

struct RankingComparison {
    double max_abs_diff = 0.0;
    bool ordinal_equal = true;
};

/// Throws DimensionMismatch on differing lengths.
RankingComparison compare_rankings(const PriorityVector& a, const PriorityVector& b);

struct MethodReport {
    std::string method;
    std::optional<PriorityVector> weights;  // empty when the method failed
    double s_star = 0.0;
    OrdinalRanking ranking;
    std::map<std::string, double> diagnostics;
    std::string error;  // set when the method failed

    bool ok() const noexcept { return weights.has_value(); }
};

MethodReport make_report(std::string method, const PCMatrix& c, PriorityVector weights);

}  // namespace pcrank
