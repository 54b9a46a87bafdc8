#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qmetro {

__extension__ typedef __int128 Int128;

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error when a result does not fit.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "p", "p/q" and finite decimals such as "-1.25".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "p" or "p/q".
    std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Builds a reduced rational from 128-bit parts.
    static Rational from_wide(Int128 num, Int128 den);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace qmetro
