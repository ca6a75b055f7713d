#pragma once

// Exact rational numbers over 64-bit integers. Every operation is checked:
// results that do not fit in int64 raise std::overflow_error instead of
// wrapping silently.

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affchar {

/// Raised when the caller violates a documented precondition.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("affchar: 64-bit integer overflow");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("affchar: 64-bit integer overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("affchar: 64-bit integer overflow");
    return r;
}

inline __int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    std::int64_t g = std::gcd(a, b);
    return checked_mul(a / g, b < 0 ? -b : b);
}

} // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by intent
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    std::int64_t to_integer() const
    {
        if (den_ != 1) throw usage_error("affchar: rational " + str() + " is not an integer");
        return num_;
    }

    /// Largest integer <= *this.
    std::int64_t floor() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational inverse() const
    {
        if (num_ == 0) throw std::domain_error("affchar: division by zero");
        return Rational(den_, num_);
    }

    Rational operator-() const
    {
        Rational r;
        r.num_ = detail::narrow(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.den_ == b.den_) return from128(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (a.num_ == 0 || b.num_ == 0) return {};
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" or a finite decimal such as "-1.25".
    static Rational parse(std::string_view s)
    {
        auto bad = [&]() { return usage_error("affchar: cannot parse rational '" + std::string(s) + "'"); };
        auto parse_int = [&](std::string_view t) -> std::int64_t {
            if (t.empty()) throw bad();
            std::size_t i = 0;
            bool neg = false;
            if (t[0] == '-' || t[0] == '+') {
                neg = t[0] == '-';
                i = 1;
            }
            if (i == t.size()) throw bad();
            __int128 v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') throw bad();
                v = v * 10 + (t[i] - '0');
                if (v > INT64_MAX) throw bad();
            }
            return static_cast<std::int64_t>(neg ? -v : v);
        };
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            std::int64_t d = parse_int(s.substr(slash + 1));
            if (d == 0) throw bad();
            return Rational(parse_int(s.substr(0, slash)), d);
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string digits(s.substr(0, dot));
            std::string frac(s.substr(dot + 1));
            if (frac.empty() || frac.size() > 17) throw bad();
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            bool neg = !digits.empty() && digits[0] == '-';
            std::int64_t whole = (digits.empty() || digits == "-" || digits == "+") ? 0 : parse_int(digits);
            std::int64_t f = parse_int(frac);
            Rational r = Rational(whole) + Rational(f, scale) * Rational(neg ? -1 : 1);
            return r;
        }
        return Rational(parse_int(s));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void assign(std::int64_t n, std::int64_t d)
    {
        if (d == 0) throw std::domain_error("affchar: zero denominator");
        *this = from128(n, d);
    }

    static Rational from128(__int128 n, __int128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow(n);
        r.den_ = detail::narrow(d);
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace affchar

template <>
struct std::hash<affchar::Rational> {
    std::size_t operator()(const affchar::Rational& r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
