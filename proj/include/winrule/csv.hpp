#ifndef WINRULE_CSV_HPP
#define WINRULE_CSV_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "winrule/core.hpp"

// Dataset files: comma-separated, no quoting, no missing values.
//
// The first line declares the columns, each as
//     name:symbolic(v1|v2|...)   declared domain, in order
//     name:numeric
//     name:symbolic | name       domain taken from observed values
// The last column is the binary class and must be symbolic.

namespace winrule {

class DataError : public Error {
public:
    using Error::Error;
};

namespace csv_detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Column {
    Attribute attribute;
    bool declared = true;
};

inline Column parse_declaration(std::string_view token, std::size_t column) {
    auto fail = [&](const std::string& why) {
        return DataError("header column " + std::to_string(column + 1) + ": " + why);
    };
    const auto colon = token.find(':');
    const std::string name(trim(token.substr(0, colon)));
    if (name.empty()) throw fail("empty attribute name");
    if (colon == std::string_view::npos) return {Attribute{name, AttributeKind::symbolic, {}}, false};
    const auto type = trim(token.substr(colon + 1));
    if (type == "numeric") return {Attribute::numeric(name), true};
    if (type == "symbolic") return {Attribute{name, AttributeKind::symbolic, {}}, false};
    if (type.starts_with("symbolic(") && type.ends_with(")")) {
        auto body = type.substr(9, type.size() - 10);
        std::vector<std::string> values;
        for (auto v : split(body, '|')) {
            if (v.empty()) throw fail("empty value in the domain of '" + name + "'");
            values.emplace_back(v);
        }
        return {Attribute::symbolic(name, std::move(values)), true};
    }
    throw fail("unknown type '" + std::string(type) + "' for '" + name + "'");
}

inline bool is_missing(std::string_view token) { return token.empty() || token == "?"; }

}  // namespace csv_detail

/// Parses a dataset. `positive_class` names the positive label; when absent
/// the first class value (declared, or first observed) is positive.
inline Dataset read_csv(std::istream& in, const std::optional<std::string>& positive_class = {}) {
    using namespace csv_detail;
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!trim(line).empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw DataError("empty file: missing header line");

    std::vector<Column> columns;
    {
        const auto tokens = split(line, ',');
        for (std::size_t c = 0; c < tokens.size(); ++c)
            columns.push_back(parse_declaration(tokens[c], c));
    }
    if (columns.size() < 2) throw DataError("header needs at least one attribute and a class");
    if (columns.back().attribute.is_numeric()) throw DataError("class column must be symbolic");

    const std::size_t width = columns.size() - 1;
    std::vector<std::vector<double>> rows;
    std::vector<int> class_codes;
    auto code_of = [&](Column& col, std::string_view token) -> int {
        int code = col.attribute.value_code(token);
        if (code >= 0) return code;
        if (col.declared) return -1;
        col.attribute.values.emplace_back(token);
        return static_cast<int>(col.attribute.values.size()) - 1;
    };

    while (next_line()) {
        const auto tokens = split(line, ',');
        auto where = [&](std::size_t c) {
            return "line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) + " ('" +
                   columns[c].attribute.name + "')";
        };
        if (tokens.size() != columns.size())
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(columns.size()) + " values, found " +
                            std::to_string(tokens.size()));
        std::vector<double> values(width);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto token = tokens[c];
            if (is_missing(token))
                throw DataError(where(c) + ": missing values are not supported");
            auto& col = columns[c];
            double v = 0.0;
            if (col.attribute.is_numeric()) {
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
                if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v))
                    throw DataError(where(c) + ": '" + std::string(token) + "' is not a number");
            } else {
                const int code = code_of(col, token);
                if (code < 0)
                    throw DataError(where(c) + ": value '" + std::string(token) +
                                    "' is not in the declared domain");
                v = code;
            }
            if (c < width) values[c] = v;
            else class_codes.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(values));
    }

    const auto& class_attr = columns.back().attribute;
    if (class_attr.values.size() != 2)
        throw DataError("class '" + class_attr.name + "' must have exactly two values, found " +
                        std::to_string(class_attr.values.size()));
    int positive = 0;
    if (positive_class) {
        positive = class_attr.value_code(*positive_class);
        if (positive < 0)
            throw DataError("positive class '" + *positive_class + "' is not a value of '" +
                            class_attr.name + "'");
    }

    std::vector<Attribute> attrs;
    for (std::size_t c = 0; c < width; ++c) {
        if (columns[c].attribute.is_symbolic() && columns[c].attribute.values.empty())
            throw DataError("attribute '" + columns[c].attribute.name + "' has no values");
        attrs.push_back(columns[c].attribute);
    }
    Dataset data(Schema(std::move(attrs)), class_attr.name,
                 {class_attr.values[0], class_attr.values[1]}, positive);
    data.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        data.push_back(rows[r], class_codes[r] == positive ? Label::positive : Label::negative);
    return data;
}

inline Dataset load_csv(const std::string& path,
                        const std::optional<std::string>& positive_class = {}) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    try {
        return read_csv(in, positive_class);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline void write_csv(const Dataset& data, std::ostream& out) {
    auto check_token = [](const std::string& s) {
        if (s.empty() || s.find_first_of(",|():\n\r") != std::string::npos || s == "?")
            throw DataError("'" + s + "' cannot be written as a CSV token");
    };
    const Schema& schema = data.schema();
    auto declare = [&](const std::string& name, const std::vector<std::string>& values) {
        check_token(name);
        out << name << ":symbolic(";
        for (std::size_t v = 0; v < values.size(); ++v) {
            check_token(values[v]);
            out << (v ? "|" : "") << values[v];
        }
        out << ')';
    };
    for (const auto& a : schema) {
        if (a.is_numeric()) {
            check_token(a.name);
            out << a.name << ":numeric";
        } else {
            declare(a.name, a.values);
        }
        out << ',';
    }
    const auto& cn = data.class_names();
    declare(data.class_attribute(), {cn[0], cn[1]});
    out << '\n';

    for (ExampleIndex i = 0; i < data.size(); ++i) {
        auto e = data[i];
        for (std::size_t a = 0; a < schema.size(); ++a) {
            if (schema[a].is_numeric()) out << format_number(e.values[a]);
            else out << schema[a].values[static_cast<std::size_t>(e.values[a])];
            out << ',';
        }
        out << data.label_name(e.label) << '\n';
    }
}

inline void save_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_csv(data, out);
    if (!out) throw DataError("write to '" + path + "' failed");
}

inline std::string to_csv(const Dataset& data) {
    std::ostringstream s;
    write_csv(data, s);
    return s.str();
}

inline Dataset from_csv(const std::string& text,
                        const std::optional<std::string>& positive_class = {}) {
    std::istringstream s(text);
    return read_csv(s, positive_class);
}

}  // namespace winrule

#endif  // WINRULE_CSV_HPP
