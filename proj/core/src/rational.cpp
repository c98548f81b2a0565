#include "moldsched/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace moldsched {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

} // namespace

Rat parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad(text);

    Rat value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        value = Rat(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
        if (value.get_den() == 0) bad(text);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) bad(text);
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class digits(std::string(whole) + std::string(frac), 10);
        value = Rat(digits, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) bad(text);
        value = Rat(mpz_class(std::string(body), 10));
    }
    return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rat& value) { return value.get_d(); }

} // namespace moldsched
