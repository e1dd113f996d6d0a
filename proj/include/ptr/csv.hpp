#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptr {

// Minimal RFC4180-style CSV: quoted fields with "" escapes, no embedded
// newlines inside fields. Enough for the history/label/export formats.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based line number in the source file for each row (for error messages).
    std::vector<std::size_t> line_numbers;

    int column(std::string_view name) const;  // -1 if absent
};

CsvTable parse_csv(std::string_view text);

std::string csv_escape(std::string_view field);
std::string join_csv_row(const std::vector<std::string>& fields);

}  // namespace ptr
