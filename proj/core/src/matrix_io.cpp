#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <iterator>
#include <sstream>

#include "pcrank/error.hpp"
#include "pcrank/pc_matrix.hpp"

namespace pcrank {

namespace {

constexpr std::string_view kLabelsPrefix = "labels:";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Splits on commas, trims each field and remembers where it starts.
std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
        std::string_view raw = line.substr(start, end - start);
        std::size_t offset = 0;
        while (offset < raw.size() && is_space(raw[offset])) ++offset;
        fields.push_back({trim(raw), start + offset + 1});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

double to_double(std::string_view s, std::size_t line, std::size_t column) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) {
        throw ValueError(line, column, "numeral '" + std::string(s) + "' is out of range");
    }
    if (ec != std::errc() || ptr != last) {
        throw SyntaxError(line, column, "invalid token '" + std::string(s) + "'");
    }
    return value;
}

Entry parse_field(const Field& field, std::size_t line) {
    const std::string_view s = field.text;
    if (s.empty()) throw SyntaxError(line, field.column, "empty field");
    if (s == "?") return kMissing;

    double value = 0.0;
    if (const std::size_t slash = s.find('/'); slash != std::string_view::npos) {
        const std::string_view num = s.substr(0, slash);
        const std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw SyntaxError(line, field.column,
                              "invalid fraction '" + std::string(s) + "', expected INT/INT");
        }
        const double d = to_double(den, line, field.column);
        if (d == 0.0) throw ValueError(line, field.column, "zero denominator in '" + std::string(s) + "'");
        value = to_double(num, line, field.column) / d;
    } else {
        // from_chars would accept "inf" and "nan"; only plain numerals are allowed here.
        const char c0 = s.front() == '-' && s.size() > 1 ? s[1] : s.front();
        if (!((c0 >= '0' && c0 <= '9') || c0 == '.')) {
            throw SyntaxError(line, field.column, "invalid token '" + std::string(s) + "'");
        }
        value = to_double(s, line, field.column);
    }
    if (!std::isfinite(value)) {
        throw ValueError(line, field.column, "non-finite value '" + std::string(s) + "'");
    }
    if (value <= 0.0) {
        throw ValueError(line, field.column, "comparison '" + std::string(s) + "' must be positive");
    }
    return value;
}

std::vector<std::string> parse_labels(std::string_view rest) {
    std::vector<std::string> labels;
    for (const Field& f : split_fields(rest)) labels.emplace_back(f.text);
    return labels;
}

}  // namespace

PCMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Entry>> rows;
    std::vector<std::size_t> row_lines;
    std::vector<std::string> labels;
    bool seen_comment = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        const std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        const std::string_view body = trim(line);
        if (body.empty()) {
            if (nl == std::string_view::npos) break;
            continue;
        }
        if (body.front() == '#') {
            if (!seen_comment && rows.empty()) {
                const std::string_view comment = trim(body.substr(1));
                if (comment.substr(0, kLabelsPrefix.size()) == kLabelsPrefix) {
                    labels = parse_labels(comment.substr(kLabelsPrefix.size()));
                }
            }
            seen_comment = true;
            if (nl == std::string_view::npos) break;
            continue;
        }

        std::vector<Entry> row;
        for (const Field& field : split_fields(line)) row.push_back(parse_field(field, line_no));
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ShapeError("line " + std::to_string(line_no) + ": row has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
        if (nl == std::string_view::npos) break;
    }

    if (rows.empty()) throw ShapeError("no matrix rows found");
    if (rows.size() != rows.front().size()) {
        throw ShapeError("matrix has " + std::to_string(rows.size()) + " rows but " +
                         std::to_string(rows.front().size()) + " columns");
    }
    if (!labels.empty() && labels.size() != rows.size()) {
        throw ShapeError("labels line names " + std::to_string(labels.size()) +
                         " alternatives but the matrix has " + std::to_string(rows.size()));
    }
    return PCMatrix::from_rows(rows, std::move(labels));
}

PCMatrix parse_matrix(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_matrix(std::string_view(text));
}

std::string serialize_matrix(const PCMatrix& m) {
    std::ostringstream out;
    out << std::setprecision(17);
    if (m.has_custom_labels()) {
        out << "# labels: ";
        for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m.labels()[i];
        out << '\n';
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) out << ',';
            const Entry& e = m.at(i, j);
            if (e) {
                out << *e;
            } else {
                out << '?';
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pcrank
