#pragma once

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "opgf/poly.hpp"
#include "opgf/rational.hpp"

namespace opgf {

/// Coefficient-ring glue for Series<C>. C is Rational (univariate series)
/// or Poly (series in t with polynomial-in-x coefficients).
template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static bool is_unit(const Rational& c) { return !c.is_zero(); }
    static Rational invert(const Rational& c) {
        if (c.is_zero()) throw NonUnitConstantTerm();
        return c.inverse();
    }
    static Rational scale(const Rational& c, const Rational& s) { return c * s; }
};

template <>
struct ring_traits<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly from_rational(const Rational& r) { return Poly(r); }
    static bool is_zero(const Poly& c) { return c.is_zero(); }
    static bool is_unit(const Poly& c) { return c.degree() == 0; }
    static Poly invert(const Poly& c) {
        if (c.degree() != 0) throw NonUnitConstantTerm();
        return Poly(c.coeff(0).inverse());
    }
    static Poly scale(const Poly& c, const Rational& s) { return c * s; }
};

/// Truncated formal power series in t over C: coefficients stored for
/// t^0 .. t^order, all arithmetic exact modulo t^(order+1). Operations on
/// inputs of different orders truncate to the minimum order.
template <class C>
class Series {
public:
    explicit Series(int order) : order_(order), c_(static_cast<size_t>(order) + 1, ring_traits<C>::zero()) {}

    static Series constant(int order, const C& c) {
        Series s(order);
        s.c_[0] = c;
        return s;
    }
    static Series one(int order) { return constant(order, ring_traits<C>::one()); }

    /// The series t.
    static Series identity(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = ring_traits<C>::one();
        return s;
    }

    static Series from_coeffs(int order, std::vector<C> coeffs) {
        Series s(order);
        for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i)
            s.c_[i] = std::move(coeffs[i]);
        return s;
    }

    int order() const { return order_; }

    const C& coeff(int i) const {
        static const C zero = ring_traits<C>::zero();
        if (i < 0 || i > order_) return zero;
        return c_[static_cast<size_t>(i)];
    }

    void set_coeff(int i, C v) {
        if (i >= 0 && i <= order_) c_[static_cast<size_t>(i)] = std::move(v);
    }

    Series truncated(int new_order) const {
        Series s(new_order);
        for (int i = 0; i <= std::min(new_order, order_); ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return s;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!ring_traits<C>::is_zero(c)) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.order_ != b.order_) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = ring_traits<C>::scale(c, Rational(-1));
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
        return r;
    }

    /// Cauchy product truncated at the minimum order.
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            if (ring_traits<C>::is_zero(a.coeff(i))) continue;
            for (int j = 0; i + j <= r.order_; ++j) {
                if (ring_traits<C>::is_zero(b.coeff(j))) continue;
                r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return r;
    }

    friend Series operator*(const Series& a, const Rational& s) {
        Series r = a;
        for (auto& c : r.c_) c = ring_traits<C>::scale(c, s);
        return r;
    }
    friend Series operator*(const Rational& s, const Series& a) { return a * s; }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend std::ostream& operator<<(std::ostream& os, const Series& s) {
        os << "[";
        for (int i = 0; i <= s.order_; ++i) {
            if (i) os << ", ";
            os << s.coeff(i);
        }
        return os << "]";
    }

private:
    int order_;
    std::vector<C> c_;
};

template <class C>
Series<C> series_mul(const Series<C>& f, const Series<C>& g) {
    return f * g;
}

/// h with h*g = f modulo t^(N+1); g(0) must be a unit.
template <class C>
Series<C> series_div(const Series<C>& f, const Series<C>& g) {
    const int n = std::min(f.order(), g.order());
    const C inv = ring_traits<C>::invert(g.coeff(0));
    Series<C> h(n);
    for (int i = 0; i <= n; ++i) {
        C acc = f.coeff(i);
        for (int j = 1; j <= i; ++j) acc = acc - g.coeff(j) * h.coeff(i - j);
        h.set_coeff(i, acc * inv);
    }
    return h;
}

/// Termwise derivative; order drops by one.
template <class C>
Series<C> series_derivative(const Series<C>& f) {
    Series<C> r(std::max(f.order() - 1, 0));
    for (int i = 1; i <= f.order(); ++i)
        r.set_coeff(i - 1, ring_traits<C>::scale(f.coeff(i), Rational(i)));
    return r;
}

/// Antiderivative with zero constant term, same order as the input; the
/// input's top coefficient would land at order+1 and is dropped.
template <class C>
Series<C> series_integrate(const Series<C>& f) {
    Series<C> r(f.order());
    for (int i = 0; i < f.order(); ++i)
        r.set_coeff(i + 1, ring_traits<C>::scale(f.coeff(i), Rational(1, i + 1)));
    return r;
}

/// f(u(t)) by Horner accumulation; u(0) must vanish.
template <class C>
Series<C> series_compose(const Series<C>& f, const Series<C>& u) {
    if (!ring_traits<C>::is_zero(u.coeff(0))) throw InnerConstantTermNonzero();
    const int n = std::min(f.order(), u.order());
    Series<C> acc = Series<C>::constant(n, f.coeff(n));
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * u;
        acc.set_coeff(0, acc.coeff(0) + f.coeff(i));
    }
    return acc;
}

/// exp(u) via the coefficient recursion of y' = u'y, y(0) = 1; u(0) must vanish.
template <class C>
Series<C> series_exp(const Series<C>& u) {
    if (!ring_traits<C>::is_zero(u.coeff(0))) throw InnerConstantTermNonzero();
    const int n = u.order();
    Series<C> y = Series<C>::one(n);
    for (int i = 1; i <= n; ++i) {
        C acc = ring_traits<C>::zero();
        for (int j = 1; j <= i; ++j)
            acc += ring_traits<C>::scale(u.coeff(j), Rational(j)) * y.coeff(i - j);
        y.set_coeff(i, ring_traits<C>::scale(acc, Rational(1, i)));
    }
    return y;
}

/// log(f) for f(0) = 1, via integration of f'/f.
template <class C>
Series<C> series_log(const Series<C>& f) {
    if (!(f.coeff(0) == ring_traits<C>::one())) throw ConstantTermNotOne();
    const int n = f.order();
    if (n == 0) return Series<C>(0);
    const Series<C> q = series_div(series_derivative(f), f.truncated(n - 1));
    Series<C> r(n);
    for (int i = 1; i <= n; ++i)
        r.set_coeff(i, ring_traits<C>::scale(q.coeff(i - 1), Rational(1, i)));
    return r;
}

/// f^e for any rational e, as exp(e*log f); f(0) must be 1. Coincides with
/// the generalized binomial series when f = 1 - u.
template <class C>
Series<C> series_powq(const Series<C>& f, const Rational& e) {
    if (!(f.coeff(0) == ring_traits<C>::one())) throw ConstantTermNotOne();
    if (e.is_zero()) return Series<C>::one(f.order());
    return series_exp(series_log(f) * e);
}

inline Series<Poly> lift(const Series<Rational>& f) {
    Series<Poly> r(f.order());
    for (int i = 0; i <= f.order(); ++i) r.set_coeff(i, Poly(f.coeff(i)));
    return r;
}

/// Plain polynomial evaluation of p at a series value (any constant term).
template <class C>
Series<C> eval_poly_at(const Poly& p, const Series<C>& v) {
    Series<C> acc(v.order());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * v;
        acc.set_coeff(0, acc.coeff(0) + ring_traits<C>::from_rational(p.coeff(i)));
    }
    return acc;
}

/// True when every odd-index coefficient vanishes.
template <class C>
bool is_even_series(const Series<C>& f) {
    for (int i = 1; i <= f.order(); i += 2)
        if (!ring_traits<C>::is_zero(f.coeff(i))) return false;
    return true;
}

}  // namespace opgf
