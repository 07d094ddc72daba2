#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "opgf/errors.hpp"

namespace opgf {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. The ground field for every coefficient in the
/// library. Backed by boost::multiprecision; this wrapper fixes the error
/// behaviour (division by zero throws) and the text format ("p/q").
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero();
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    /// Parses "p" or "p/q" with optional sign; q must be nonzero.
    static Rational parse(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }

    /// Value as long long; precondition: is_integer() and in range.
    long long as_int() const {
        return static_cast<long long>(numerator());
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(denominator(), numerator());
    }

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw InvalidParameters("cannot parse rational: '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    auto to_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) bad();
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') bad();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(to_int(s));
    BigInt num = to_int(s.substr(0, slash));
    BigInt den = to_int(s.substr(slash + 1));
    return Rational(num, den);
}

/// Integer power; e < 0 requires a nonzero base.
inline Rational pow(const Rational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc = 1, b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace opgf
