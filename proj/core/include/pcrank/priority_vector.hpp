// Positive weight vectors that define a ranking.
#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pcrank {

enum class Normalization { SumToOne, MaxToOne, Unscaled };

std::string_view to_string(Normalization n);
std::optional<Normalization> parse_normalization(std::string_view name);

/// n positive weights w(a_i). Only ratios carry meaning; the normalization
/// records which representative of the ray is stored.
class PriorityVector {
public:
    /// Throws ValueError unless every weight is positive and finite.
    PriorityVector(std::vector<double> weights, Normalization normalization);

    /// Normalizes positive weights.
    static PriorityVector normalized(std::span<const double> weights, Normalization normalization);
    /// Exponentiates log-weights, shifting by their maximum first so that
    /// large magnitudes cannot overflow.
    static PriorityVector from_log_weights(std::span<const double> log_weights, Normalization normalization);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const& noexcept { return weights_; }
    std::vector<double> weights() && noexcept { return std::move(weights_); }
    Normalization normalization() const noexcept { return normalization_; }

    PriorityVector renormalized(Normalization normalization) const;

private:
    std::vector<double> weights_;
    Normalization normalization_;
};

}  // namespace pcrank
