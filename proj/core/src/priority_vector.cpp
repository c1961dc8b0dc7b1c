#include "pcrank/priority_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcrank/error.hpp"

namespace pcrank {

std::string_view to_string(Normalization n) {
    switch (n) {
        case Normalization::SumToOne: return "sum";
        case Normalization::MaxToOne: return "max";
        case Normalization::Unscaled: return "none";
    }
    return "unknown";
}

std::optional<Normalization> parse_normalization(std::string_view name) {
    if (name == "sum") return Normalization::SumToOne;
    if (name == "max") return Normalization::MaxToOne;
    if (name == "none") return Normalization::Unscaled;
    return std::nullopt;
}

PriorityVector::PriorityVector(std::vector<double> weights, Normalization normalization)
    : weights_(std::move(weights)), normalization_(normalization) {
    if (weights_.empty()) throw ValueError(0, 0, "priority vector is empty");
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) throw ValueError(0, 0, "priority weights must be positive and finite");
    }
}

PriorityVector PriorityVector::normalized(std::span<const double> weights, Normalization normalization) {
    std::vector<double> w(weights.begin(), weights.end());
    double scale = 1.0;
    switch (normalization) {
        case Normalization::SumToOne: scale = std::accumulate(w.begin(), w.end(), 0.0); break;
        case Normalization::MaxToOne: scale = w.empty() ? 1.0 : *std::max_element(w.begin(), w.end()); break;
        case Normalization::Unscaled: break;
    }
    for (double& x : w) x /= scale;
    return PriorityVector(std::move(w), normalization);
}

PriorityVector PriorityVector::from_log_weights(std::span<const double> log_weights, Normalization normalization) {
    std::vector<double> w(log_weights.size());
    // Unscaled keeps e^{log w} as is; the other modes are shift-invariant.
    const double shift = normalization == Normalization::Unscaled || log_weights.empty()
                             ? 0.0
                             : *std::max_element(log_weights.begin(), log_weights.end());
    std::transform(log_weights.begin(), log_weights.end(), w.begin(),
                   [shift](double lw) { return std::exp(lw - shift); });
    return normalized(w, normalization);
}

PriorityVector PriorityVector::renormalized(Normalization normalization) const {
    return normalized(weights_, normalization);
}

}  // namespace pcrank
