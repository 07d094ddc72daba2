#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opgf/rational.hpp"

namespace opgf {

/// Dense univariate polynomial over Rational, coefficients ascending in the
/// power of x. Trailing zeros are stripped; the zero polynomial is the empty
/// coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c0) {
        if (!c0.is_zero()) c_.push_back(c0);
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly x() { return monomial(1); }
    static Poly monomial(int k, const Rational& c = Rational(1)) {
        if (c.is_zero()) return Poly();
        std::vector<Rational> v(static_cast<size_t>(k) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the degree).
    const Rational& coeff(int i) const {
        static const Rational zero;
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero()) return Poly();
        Poly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// m-th derivative.
    Poly derivative(int m = 1) const {
        Poly r = *this;
        for (int k = 0; k < m && !r.is_zero(); ++k) {
            std::vector<Rational> v;
            v.reserve(r.c_.size());
            for (size_t i = 1; i < r.c_.size(); ++i)
                v.push_back(r.c_[i] * Rational(static_cast<long long>(i)));
            r = Poly(std::move(v));
        }
        return r;
    }

    /// Horner evaluation at a rational point.
    Rational eval(const Rational& v) const {
        Rational acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    /// p(inner(x)), Horner over Poly arithmetic.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
        return acc;
    }

    /// Canonical rendering: nonzero terms ascending, "c", "c*x", "c*x^k";
    /// the zero polynomial renders as "0".
    std::string str(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i == 1)
                out += "*" + std::string(var);
            else if (i > 1)
                out += "*" + std::string(var) + "^" + std::to_string(i);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// p(x + a).
inline Poly shift_x(const Poly& p, const Rational& a) {
    return p.compose(Poly(std::vector<Rational>{a, Rational(1)}));
}

}  // namespace opgf
