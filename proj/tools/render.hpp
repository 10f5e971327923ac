#pragma once

// Output rendering for the wheelwalk CLI: one result set, three formats.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wheelwalk::cli {

enum class Format { table, json, csv };

inline Format parse_format(std::string_view s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("format must be table, json or csv");
}

// Rows of already-formatted cells plus the JSON document for the same data.
struct ResultSet {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json document;
    // Print only the value cells, without a header, when there is exactly one row.
    bool bare_single_row = true;
    std::vector<std::string> footer;  // extra table-only lines
};

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string render_csv(const ResultSet& r) {
    std::ostringstream os;
    for (std::size_t j = 0; j < r.columns.size(); ++j) os << (j ? "," : "") << csv_cell(r.columns[j]);
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
        os << '\n';
    }
    return os.str();
}

inline std::string render_table(const ResultSet& r) {
    std::ostringstream os;
    if (r.bare_single_row && r.rows.size() == 1) {
        // Key columns (ell, root, ...) precede "value"; print from "value" on.
        const auto it = std::find(r.columns.begin(), r.columns.end(), "value");
        std::size_t first = it == r.columns.end() ? 0 : static_cast<std::size_t>(it - r.columns.begin());
        const auto& row = r.rows.front();
        for (std::size_t j = first; j < row.size(); ++j) {
            if (r.columns[j] == "method") continue;
            os << (j > first ? "  " : "") << row[j];
        }
        os << '\n';
    } else {
        std::vector<std::size_t> width(r.columns.size());
        for (std::size_t j = 0; j < r.columns.size(); ++j) width[j] = r.columns[j].size();
        for (const auto& row : r.rows)
            for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (j) s += "  ";
                s += cells[j];
                if (j + 1 < cells.size()) s.append(width[j] - cells[j].size(), ' ');
            }
            s.erase(s.find_last_not_of(' ') + 1);
            os << s << '\n';
        };
        line(r.columns);
        for (const auto& row : r.rows) line(row);
    }
    for (const auto& f : r.footer) os << f << '\n';
    return os.str();
}

inline std::string render(const ResultSet& r, Format f) {
    switch (f) {
        case Format::json: return r.document.dump(2) + "\n";
        case Format::csv: return render_csv(r);
        case Format::table: break;
    }
    return render_table(r);
}

}  // namespace wheelwalk::cli
