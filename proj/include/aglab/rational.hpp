#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace aglab {

/*
 * Exact nonnegative rational. Always stored in lowest terms with den > 0.
 * Grades live in [0,1]; sums of two grades are the largest values ever
 * formed, so int64 components with 128-bit cross multiplication never
 * overflow at the magnitudes this library produces.
 */
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rat() = default;
    Rat(std::int64_t n, std::int64_t d); // normalizes; throws on d == 0

    static constexpr Rat zero() { return {}; }
    static Rat one() { return Rat(1, 1); }

    bool operator==(const Rat&) const = default;
    std::strong_ordering operator<=>(const Rat& o) const;

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;

    bool in_unit_interval() const; // 0 <= value <= 1

    // "p/q", or just "p" when q == 1.
    std::string str() const;

    // Accepts "p/q", "p", and decimals like "0.25" (normalized to 1/4).
    // Throws std::invalid_argument on anything else.
    static Rat parse(std::string_view text);
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace aglab
