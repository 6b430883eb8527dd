#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "xreval/errors.hpp"

namespace xreval {

/// Exact rational number kept in canonical form (reduced, denominator > 0).
/// Used wherever rounding must not silently change a result: crossover
/// points and questionnaire scores.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Smallest integer >= value.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_,
                       static_cast<__int128>(a.den_) * b.den_);
    }

    /// "42" when integral, "num/den" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational from128(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a != 0) { num /= a; den /= a; }
        Rational r;
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw ArithmeticOverflowError();
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void normalize() {
        if (den_ == 0) throw InvalidArgumentError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Fixed-point decimal rendering with round-half-away-from-zero, e.g.
/// format_fixed(500/15, 2) == "33.33". Decimal count must be in [0, 18].
inline std::string format_fixed(const Rational& r, int decimals) {
    if (decimals < 0 || decimals > 18)
        throw InvalidArgumentError("decimals out of range [0,18]");
    bool neg = r.num() < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-static_cast<__int128>(r.num()))
                                : static_cast<unsigned __int128>(r.num());
    unsigned __int128 den = static_cast<unsigned __int128>(r.den());
    unsigned __int128 scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    unsigned __int128 scaled = mag * scale;
    unsigned __int128 q = scaled / den;
    unsigned __int128 rem = scaled % den;
    if (2 * rem >= den) ++q;

    auto to_dec = [](unsigned __int128 v) {
        if (v == 0) return std::string("0");
        std::string s;
        while (v > 0) { s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10))); v /= 10; }
        return s;
    };

    std::string out;
    if (neg && q != 0) out += '-';
    out += to_dec(q / scale);
    if (decimals > 0) {
        std::string frac = to_dec(q % scale);
        out += '.';
        out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace xreval
