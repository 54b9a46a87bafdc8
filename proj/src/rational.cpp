#include "qmetro/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace qmetro {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(Int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Rational Rational::from_wide(Int128 num, Int128 den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const bool negative = text.front() == '-';
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 17) {
            throw std::invalid_argument("too many decimal places in '" + std::string(text) + "'");
        }
        Int128 scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        const std::string_view digits_whole = (negative || whole.starts_with('+')) ? whole.substr(1) : whole;
        const Int128 w = digits_whole.empty() ? 0 : parse_int(digits_whole);
        const Int128 f = frac.empty() ? 0 : parse_int(frac);
        if (w < 0 || f < 0) {
            throw std::invalid_argument("invalid decimal '" + std::string(text) + "'");
        }
        const Int128 num = w * scale + f;
        return from_wide(negative ? -num : num, scale);
    }
    return Rational(parse_int(text));
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<Int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<Int128>(a.num_) * b.den_ + static_cast<Int128>(b.num_) * a.den_,
                               static_cast<Int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<Int128>(a.num_) * b.num_, static_cast<Int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<Int128>(a.num_) * b.den_, static_cast<Int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
    const Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace qmetro
