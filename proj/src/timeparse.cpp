#include "ptr/timeparse.hpp"

#include <cctype>
#include <cstdio>

#include "ptr/common.hpp"

namespace ptr {

// Civil-calendar conversions (Hinnant's algorithms), valid across the
// full int64 range we care about.
static std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

static void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

static bool all_digits_or_sign(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::int64_t parse_timestamp(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw DataError("empty timestamp");
    if (all_digits_or_sign(s)) {
        return std::stoll(std::string(s));
    }
    int y, mo, d, h, mi, sec;
    char sep;
    int n = std::sscanf(std::string(s).c_str(), "%d-%d-%d%c%d:%d:%d", &y, &mo, &d, &sep, &h, &mi,
                        &sec);
    if (n != 7 || (sep != 'T' && sep != 't' && sep != ' '))
        throw DataError("unparseable timestamp: " + std::string(s));
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec > 60)
        throw DataError("timestamp out of range: " + std::string(s));
    std::int64_t t = days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + sec;
    // optional trailing zone: Z or +hh:mm / -hh:mm
    std::size_t tail = s.find_last_of("Zz+-");
    if (tail != std::string_view::npos && tail >= 10) {  // past the date part
        char c = s[tail];
        if (c == '+' || c == '-') {
            int zh = 0, zm = 0;
            if (std::sscanf(std::string(s.substr(tail + 1)).c_str(), "%d:%d", &zh, &zm) >= 1) {
                std::int64_t off = zh * 3600 + zm * 60;
                t += (c == '-') ? off : -off;
            }
        }
    }
    return t;
}

std::string format_iso(std::int64_t t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60));
    return buf;
}

}  // namespace ptr
