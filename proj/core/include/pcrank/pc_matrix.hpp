// Incomplete pairwise-comparison matrices and their text format.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcrank {

/// A single comparison c_ij. An empty optional marks a missing comparison.
using Entry = std::optional<double>;

inline constexpr Entry kMissing = std::nullopt;

/// n x n grid of comparison ratios over alternatives a1..an.
///
/// Construction checks only the shape (square, n >= 2, one label per
/// alternative). Positivity, unit diagonal, reciprocity and connectivity
/// are checked by validate(), which reports instead of throwing, so a
/// matrix holding bad data can still be built and inspected.
class PCMatrix {
public:
    PCMatrix(std::size_t n, std::vector<Entry> entries, std::vector<std::string> labels = {});

    /// Row-wise construction; throws ShapeError on ragged or non-square input.
    static PCMatrix from_rows(const std::vector<std::vector<Entry>>& rows,
                              std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return n_; }

    const Entry& at(std::size_t i, std::size_t j) const;
    bool present(std::size_t i, std::size_t j) const { return at(i, j).has_value(); }
    bool missing(std::size_t i, std::size_t j) const { return !present(i, j); }
    /// Value of a present entry; throws IncompleteInput if missing.
    double value(std::size_t i, std::size_t j) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// True when the labels differ from the generated a1..an names.
    bool has_custom_labels() const;

    /// Number of missing off-diagonal entries in row i.
    std::size_t missing_in_row(std::size_t i) const;
    bool is_complete() const;

    friend bool operator==(const PCMatrix&, const PCMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Entry> entries_;
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

/// Reads the comma-separated matrix format. Fields are `?`, a positive
/// decimal (optionally with exponent) or `INT/INT`. `#` lines are comments;
/// a leading `# labels: x,y,...` comment names the alternatives.
///
/// Throws SyntaxError, ShapeError or ValueError. Performs no semantic
/// validation beyond positivity and finiteness of each numeral.
PCMatrix parse_matrix(std::string_view text);
PCMatrix parse_matrix(std::istream& in);

/// Writes the matrix in the format read by parse_matrix. Values use 17
/// significant digits so that re-parsing reproduces every entry exactly.
std::string serialize_matrix(const PCMatrix& m);

/// Fills every one-sided gap c_ji = ? next to a present c_ij with 1/c_ij.
PCMatrix repair_reciprocal(const PCMatrix& m);

}  // namespace pcrank
