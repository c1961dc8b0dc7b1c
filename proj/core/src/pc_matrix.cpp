#include "pcrank/pc_matrix.hpp"

#include "pcrank/error.hpp"

namespace pcrank {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
    return labels;
}

PCMatrix::PCMatrix(std::size_t n, std::vector<Entry> entries, std::vector<std::string> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
    if (n_ < 2) {
        throw ShapeError("a comparison matrix needs at least 2 alternatives, got " +
                         std::to_string(n_));
    }
    if (entries_.size() != n_ * n_) {
        throw ShapeError("expected " + std::to_string(n_ * n_) + " entries, got " +
                         std::to_string(entries_.size()));
    }
    if (labels_.empty()) {
        labels_ = default_labels(n_);
    } else if (labels_.size() != n_) {
        throw ShapeError("expected " + std::to_string(n_) + " labels, got " +
                         std::to_string(labels_.size()));
    }
}

PCMatrix PCMatrix::from_rows(const std::vector<std::vector<Entry>>& rows,
                             std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    std::vector<Entry> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ShapeError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " fields, expected " +
                             std::to_string(n));
        }
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return PCMatrix(n, std::move(entries), std::move(labels));
}

const Entry& PCMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for n=" + std::to_string(n_));
    }
    return entries_[i * n_ + j];
}

double PCMatrix::value(std::size_t i, std::size_t j) const {
    const Entry& e = at(i, j);
    if (!e) {
        throw IncompleteInput("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is missing");
    }
    return *e;
}

bool PCMatrix::has_custom_labels() const { return labels_ != default_labels(n_); }

std::size_t PCMatrix::missing_in_row(std::size_t i) const {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if (j != i && missing(i, j)) ++count;
    }
    return count;
}

bool PCMatrix::is_complete() const {
    for (const Entry& e : entries_) {
        if (!e) return false;
    }
    return true;
}

PCMatrix repair_reciprocal(const PCMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Entry> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Entry e = m.at(i, j);
            if (!e && i != j && m.present(j, i) && *m.at(j, i) != 0.0) e = 1.0 / *m.at(j, i);
            entries.push_back(e);
        }
    }
    return PCMatrix(n, std::move(entries), m.labels());
}

}  // namespace pcrank
