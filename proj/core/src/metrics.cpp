#include "pcrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcrank/error.hpp"

namespace pcrank {

namespace {

void require_length(const PCMatrix& c, const PriorityVector& w) {
    if (w.size() != c.size()) {
        throw DimensionMismatch("priority vector has " + std::to_string(w.size()) + " weights for " +
                                std::to_string(c.size()) + " alternatives");
    }
}

double squared_log_error(double cij, double wi, double wj) {
    const double d = std::log(cij) - std::log(wi / wj);
    return d * d;
}

}  // namespace

double s_complete(const PCMatrix& c, const PriorityVector& w) {
    if (!c.is_complete()) throw IncompleteInput("S(C) needs a complete matrix");
    return s_star(c, w);
}

double s_star(const PCMatrix& c, const PriorityVector& w) {
    require_length(c, w);
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c.present(i, j)) total += squared_log_error(c.value(i, j), w[i], w[j]);
        }
    }
    return total;
}

OrdinalRanking ordinal_ranking(const PriorityVector& w, double tie_tol) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&w](std::size_t a, std::size_t b) { return w[a] > w[b]; });

    OrdinalRanking ranking;
    for (std::size_t idx : order) {
        if (!ranking.groups.empty()) {
            const double head = w[ranking.groups.back().front()];
            if (head - w[idx] <= tie_tol * head) {
                ranking.groups.back().push_back(idx);
                continue;
            }
        }
        ranking.groups.push_back({idx});
    }
    for (auto& group : ranking.groups) std::sort(group.begin(), group.end());
    return ranking;
}

std::string format_ranking(const OrdinalRanking& ranking, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
        if (g > 0) out += " > ";
        for (std::size_t k = 0; k < ranking.groups[g].size(); ++k) {
            if (k > 0) out += " = ";
            out += labels.at(ranking.groups[g][k]);
        }
    }
    return out;
}

RankingComparison compare_rankings(const PriorityVector& a, const PriorityVector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("cannot compare rankings of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    RankingComparison result;
    for (std::size_t i = 0; i < a.size(); ++i) {
        result.max_abs_diff = std::max(result.max_abs_diff, std::abs(a[i] - b[i]));
    }
    result.ordinal_equal = ordinal_ranking(a) == ordinal_ranking(b);
    return result;
}

MethodReport make_report(std::string method, const PCMatrix& c, PriorityVector weights) {
    MethodReport report;
    report.method = std::move(method);
    report.s_star = s_star(c, weights);
    report.ranking = ordinal_ranking(weights);
    report.weights = std::move(weights);
    return report;
}

}  // namespace pcrank
