#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ptr {

// Accepts integer epoch seconds or ISO-8601 (YYYY-MM-DDTHH:MM:SS with
// optional 'Z' or +hh:mm offset; a space may stand in for 'T').
std::int64_t parse_timestamp(std::string_view s);

// Epoch seconds -> "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso(std::int64_t epoch_seconds);

}  // namespace ptr
