#pragma once

#include <vector>

#include "opgf/rational.hpp"
#include "opgf/series.hpp"

namespace opgf {

/// Shifted factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int n) {
    Rational acc = 1;
    for (int k = 0; k < n; ++k) acc *= a + Rational(k);
    return acc;
}

inline Rational factorial(int n) {
    Rational acc = 1;
    for (int k = 2; k <= n; ++k) acc *= Rational(k);
    return acc;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Generalized hypergeometric series pFq(num; den; t) truncated at `order`:
/// c_0 = 1, c_{n+1} = c_n * prod(mu_i + n) / (prod(nu_j + n) * (n+1)).
/// Purely formal; no convergence requirement (2F0 is fine).
inline Series<Rational> hypergeometric_series(const std::vector<Rational>& num,
                                              const std::vector<Rational>& den,
                                              int order) {
    for (const auto& nu : den) {
        // nu + n = 0 for some 0 <= n < order would divide by zero below.
        if (nu.is_integer() && nu <= Rational(0) && -nu < Rational(order))
            throw DenominatorParameterPole(static_cast<int>((-nu).as_int()));
    }
    Series<Rational> f(order);
    Rational c = 1;
    f.set_coeff(0, c);
    for (int n = 0; n < order; ++n) {
        for (const auto& mu : num) c *= mu + Rational(n);
        for (const auto& nu : den) c /= nu + Rational(n);
        c /= Rational(n + 1);
        f.set_coeff(n + 1, c);
    }
    return f;
}

/// The unique series G with G(0) = 0 and G'(t) = 2*exp(-2*rho*t + t^2).
/// This is the rational-coefficient avatar of
/// sqrt(pi)*exp(-rho^2)*(erfi(rho) - erfi(rho - t)).
inline Series<Rational> erfi_kernel(const Rational& rho, int order) {
    Series<Rational> u(order);
    u.set_coeff(1, Rational(-2) * rho);
    u.set_coeff(2, Rational(1));
    return series_integrate(series_exp(u) * Rational(2));
}

}  // namespace opgf
