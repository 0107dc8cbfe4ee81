#pragma once

// Deterministic emission for the CLI: tabular CSV/JSON with fixed float
// formatting (17 significant digits, '.' decimal separator, '\n' line
// endings) so identical manifests produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wignerlab {

/// Round-trip-safe decimal rendering, locale independent.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

using ParamValue = std::variant<std::string, double, long long>;

/// One emitted table: ordered parameter metadata plus numeric rows.
/// NaN cells mean "no value" (empty separability window); they render as
/// "nan" in CSV and null in JSON.
struct Table {
    std::string subcommand;
    std::vector<std::pair<std::string, ParamValue>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("to_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string json_value(const ParamValue& v) {
    if (std::holds_alternative<std::string>(v))
        return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    if (std::holds_alternative<double>(v))
        return format_double(std::get<double>(v));
    return std::to_string(std::get<long long>(v));
}

/// Hand-rolled serializer: key order and number formatting are part of the
/// output contract (schemas/table.schema.json).
inline std::string to_json(const Table& table) {
    std::string out = "{\n";
    out += "  \"schema\": \"wignerlab-table-v1\",\n";
    out += "  \"subcommand\": \"" + json_escape(table.subcommand) + "\",\n";
    out += "  \"params\": {";
    for (std::size_t i = 0; i < table.params.size(); ++i) {
        if (i)
            out += ", ";
        out += "\"" + json_escape(table.params[i].first) + "\": " + json_value(table.params[i].second);
    }
    out += "},\n";
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out += ", ";
        out += "\"" + json_escape(table.columns[i]) + "\"";
    }
    out += "],\n";
    out += "  \"rows\": [\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.columns.size())
            throw std::invalid_argument("to_json: row width does not match header");
        out += "    [";
        for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i)
                out += ", ";
            out += std::isnan(table.rows[r][i]) ? "null" : format_double(table.rows[r][i]);
        }
        out += r + 1 < table.rows.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string render(const Table& table, const std::string& format) {
    if (format == "csv")
        return to_csv(table);
    if (format == "json")
        return to_json(table);
    throw std::invalid_argument("render: format must be csv or json");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f)
        throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace wignerlab
