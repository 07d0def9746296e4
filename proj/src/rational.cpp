#include "aglab/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace aglab {

Rat::Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    __int128 l = static_cast<__int128>(num) * o.den;
    __int128 r = static_cast<__int128>(o.num) * den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat Rat::operator+(const Rat& o) const {
    return Rat(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
    return Rat(num * o.den - o.num * den, den * o.den);
}

bool Rat::in_unit_interval() const {
    return num >= 0 && num <= den;
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    return v;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 17)
            throw std::invalid_argument("bad decimal literal: '" + std::string(text) + "'");
        std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        std::int64_t f = parse_int(frac);
        if (f < 0)
            throw std::invalid_argument("bad decimal literal: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t n = w * scale + (neg ? -f : f);
        return Rat(n, scale);
    }
    return Rat(parse_int(text), 1);
}

} // namespace aglab
