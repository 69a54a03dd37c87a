#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace optonet::csv {

struct Row {
    std::vector<std::string> fields;
    // 1-based line of the record's first character, for error messages.
    std::size_t line = 0;
};

// RFC-4180-flavoured reader: handles LF and CRLF records, an optional UTF-8
// BOM, quoted fields with embedded commas/quotes/newlines. Blank lines are
// skipped. Throws InputError on an unterminated quote or a stray quote in
// the middle of an unquoted field.
std::vector<Row> read(std::istream& in);

// Quote a field iff it needs quoting.
std::string escape(std::string_view field);

// Join + escape one record (no trailing newline).
std::string write_row(const std::vector<std::string>& fields);

}  // namespace optonet::csv
