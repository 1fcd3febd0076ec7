#include "hmnc/format_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "hmnc/errors.hpp"

namespace hmnc::detail {

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

int significant_digits(const std::string& s) {
    int digits = 0;
    bool leading_zero = true;
    for (char c : s) {
        if (c == 'e' || c == 'E') {
            break;
        }
        if (c < '0' || c > '9') {
            continue;
        }
        if (c == '0' && leading_zero) {
            continue;
        }
        leading_zero = false;
        ++digits;
    }
    return digits;
}

}  // namespace

std::string decimal(double x, int min_sig) {
    std::string s = shortest(x);
    if (significant_digits(s) >= min_sig) {
        return s;
    }
    char buf[64];
    // '#' keeps the trailing zeros; the value is already exact at this width.
    std::snprintf(buf, sizeof(buf), "%#.*g", min_sig, x);
    return buf;
}

double round_to(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::llround(x * scale) / scale;
}

std::string fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, round_to(x, decimals));
    return buf;
}

double parse_double(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw InputError("not a number: '" + token + "'");
    }
    return value;
}

}  // namespace hmnc::detail
