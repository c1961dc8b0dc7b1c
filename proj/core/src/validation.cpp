#include "pcrank/validation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pcrank/graph.hpp"

namespace pcrank {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NonPositive: return "NonPositive";
        case ViolationKind::DiagonalNotOne: return "DiagonalNotOne";
        case ViolationKind::NonReciprocal: return "NonReciprocal";
        case ViolationKind::AsymmetricMissingness: return "Asymmetric-Missingness";
        case ViolationKind::Disconnected: return "Disconnected";
        case ViolationKind::RowAllMissing: return "RowAllMissing";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

bool usable(const Entry& e) { return e && std::isfinite(*e) && *e > 0.0; }

}  // namespace

ValidationReport validate(const PCMatrix& m, double tol) {
    ValidationReport report;
    const std::size_t n = m.size();
    const double threshold = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon());
    auto add = [&report](ViolationKind kind, std::size_t i, std::size_t j, std::string detail) {
        report.violations.push_back({kind, i, j, std::move(detail)});
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Entry& e = m.at(i, j);
            if (e && !usable(e)) add(ViolationKind::NonPositive, i, j, fmt(*e) + " is not a positive finite ratio");
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Entry& d = m.at(i, i);
        if (!d) {
            add(ViolationKind::DiagonalNotOne, i, i, "diagonal entry is missing");
        } else if (*d != 1.0) {
            add(ViolationKind::DiagonalNotOne, i, i, fmt(*d) + " ≠ 1");
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Entry& a = m.at(i, j);
            const Entry& b = m.at(j, i);
            if (a || b) ++report.present_pairs;
            if (a.has_value() != b.has_value()) {
                add(ViolationKind::AsymmetricMissingness, i, j,
                    a ? "c_ji is missing while c_ij is present" : "c_ij is missing while c_ji is present");
            } else if (usable(a) && usable(b) && std::abs(*a * *b - 1.0) > threshold) {
                add(ViolationKind::NonReciprocal, i, j, fmt(*a) + " × " + fmt(*b) + " ≠ 1");
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (m.missing_in_row(i) == n - 1) {
            add(ViolationKind::RowAllMissing, i, i, "every off-diagonal comparison in the row is missing");
        }
    }

    report.components = connected_components(graph_of(m));
    if (report.components.size() > 1) {
        add(ViolationKind::Disconnected, 0, 0, DisconnectedGraph(report.components).what());
    }
    return report;
}

InvalidMatrix::InvalidMatrix(ValidationReport report)
    : Error([&report] {
          std::ostringstream out;
          out << "invalid comparison matrix";
          for (const Violation& v : report.violations) {
              out << "; " << to_string(v.kind) << " (" << v.i + 1 << "," << v.j + 1 << "): " << v.detail;
          }
          return out.str();
      }()),
      report_(std::move(report)) {}

void require_rankable(const PCMatrix& m, double tol) {
    ValidationReport report = validate(m, tol);
    if (report.ok()) return;
    const bool only_connectivity = std::all_of(
        report.violations.begin(), report.violations.end(), [](const Violation& v) {
            return v.kind == ViolationKind::Disconnected || v.kind == ViolationKind::RowAllMissing;
        });
    if (only_connectivity) throw DisconnectedGraph(std::move(report.components));
    throw InvalidMatrix(std::move(report));
}

}  // namespace pcrank
