#include "optonet/csv.hpp"

#include <istream>
#include <iterator>

#include "optonet/errors.hpp"

namespace optonet::csv {

std::vector<Row> read(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    std::size_t pos = 0;
    if (text.size() >= 3 && text.compare(0, 3, "\xef\xbb\xbf") == 0) pos = 3;

    std::vector<Row> rows;
    std::size_t line = 1;

    while (pos < text.size()) {
        Row row;
        row.line = line;
        std::string field;
        bool quoted = false;       // currently inside quotes
        bool field_started = false;
        bool any_field = false;

        for (;;) {
            if (pos >= text.size()) {
                if (quoted) throw ParseError("unterminated quote", row.line, "csv record never closed");
                break;
            }
            char c = text[pos];
            if (quoted) {
                if (c == '"') {
                    if (pos + 1 < text.size() && text[pos + 1] == '"') {
                        field += '"';
                        pos += 2;
                    } else {
                        quoted = false;
                        ++pos;
                    }
                } else {
                    if (c == '\n') ++line;
                    field += c;
                    ++pos;
                }
                continue;
            }
            if (c == '"') {
                if (field_started && !field.empty()) {
                    throw ParseError("stray quote", line, "quote inside unquoted field");
                }
                quoted = true;
                field_started = true;
                ++pos;
                continue;
            }
            if (c == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                field_started = false;
                any_field = true;
                ++pos;
                continue;
            }
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
                pos += 2;
                ++line;
                break;
            }
            if (c == '\n') {
                ++pos;
                ++line;
                break;
            }
            field += c;
            field_started = true;
            ++pos;
        }

        if (any_field || field_started) {
            row.fields.push_back(std::move(field));
            rows.push_back(std::move(row));
        }
        // else: blank line, skipped.
    }
    return rows;
}

std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string write_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace optonet::csv
