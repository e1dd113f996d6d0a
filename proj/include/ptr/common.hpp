#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptr {

// Raised for malformed or inconsistent input data. The CLI maps this to
// exit code 2; usage errors exit with 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// FNV-1a 64-bit over raw bytes. Used for artifact fingerprints so stale
// upstream files are detected before stages get silently mixed.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string hash_hex(std::string_view bytes) { return to_hex(fnv1a64(bytes)); }

// %.17g survives a double -> text -> double round trip and is stable
// across runs, which the byte-determinism guarantees rely on.
inline std::string fmt_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void warn(const std::string& msg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

}  // namespace ptr
