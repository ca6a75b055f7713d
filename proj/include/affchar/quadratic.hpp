#pragma once

// Elements a + b sqrt(m) of a real or imaginary quadratic field Q(sqrt m),
// m a squarefree integer != 1. Numbers with b = 0 are compatible with every m.

#include <affchar/rational.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace affchar {

class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(std::int64_t a) : a_(a) {} // NOLINT: implicit by intent
    QuadraticNumber(const Rational& a) : a_(a) {} // NOLINT: implicit by intent
    QuadraticNumber(const Rational& a, const Rational& b, std::int64_t m) : a_(a), b_(b), m_(m)
    {
        if (!b_.is_zero() && (m == 0 || m == 1)) throw usage_error("affchar: quadratic field needs squarefree m != 0, 1");
        if (b_.is_zero()) m_ = 0;
    }

    /// sqrt(d) for a rational d, rational when d is a square.
    static QuadraticNumber sqrt(const Rational& d)
    {
        if (d.is_zero()) return {};
        // sqrt(p/q) = sqrt(p q) / q; write p q = k^2 m with m squarefree.
        __int128 pq = static_cast<__int128>(d.num()) * d.den();
        std::int64_t sign = pq < 0 ? -1 : 1;
        __int128 rest = pq < 0 ? -pq : pq;
        std::int64_t k = 1;
        for (std::int64_t f = 2; static_cast<__int128>(f) * f <= rest; ++f)
            while (rest % (static_cast<__int128>(f) * f) == 0) {
                rest /= static_cast<__int128>(f) * f;
                k = detail::checked_mul(k, f);
            }
        std::int64_t m = detail::narrow(rest * sign);
        Rational coeff(k, d.den());
        if (m == 1) return QuadraticNumber(coeff);
        return QuadraticNumber(Rational(0), coeff, m);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    std::int64_t radicand() const { return m_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, m_); }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        std::int64_t m = common(x, y);
        return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m);
    }
    QuadraticNumber inverse() const
    {
        Rational norm = a_ * a_ - b_ * b_ * Rational(m_);
        if (norm.is_zero()) throw std::domain_error("affchar: division by zero in quadratic field");
        return QuadraticNumber(a_ / norm, -b_ / norm, m_);
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) { return x * y.inverse(); }

    QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
    QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
    QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.m_ == y.m_);
    }

    /// "a", "b*sqrt(m)" or "a+b*sqrt(m)" with exact rationals.
    std::string str() const
    {
        if (b_.is_zero()) return a_.str();
        std::string rad = (b_ == Rational(1) ? "" : b_ == Rational(-1) ? "-" : b_.str() + "*") + "sqrt(" + std::to_string(m_) + ")";
        if (a_.is_zero()) return rad;
        return a_.str() + (rad[0] == '-' ? "" : "+") + rad;
    }

private:
    static std::int64_t common(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        if (x.b_.is_zero()) return y.m_;
        if (y.b_.is_zero()) return x.m_;
        if (x.m_ != y.m_) throw usage_error("affchar: mixing different quadratic fields");
        return x.m_;
    }

    Rational a_;
    Rational b_;
    std::int64_t m_ = 0;
};

} // namespace affchar
