#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opgf/hypergeometric.hpp"
#include "opgf/poly.hpp"

namespace opgf {

enum class FamilyId {
    hermite,
    associated_hermite,  // parameter c
    ultraspherical,      // parameter lambda
    chebyshev_t,
    chebyshev_u,
    jacobi,              // parameters alpha, beta
    laguerre,            // parameter alpha
    bessel,              // parameter alpha
};

/// A classical monic family: its recurrence parameter rules beta_n, omega_n
/// (x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1}) plus parameter validity.
class FamilySpec {
public:
    static FamilySpec hermite() { return FamilySpec(FamilyId::hermite); }
    static FamilySpec associated_hermite(const Rational& c) {
        FamilySpec s(FamilyId::associated_hermite);
        s.p1_ = c;
        return s;
    }
    static FamilySpec ultraspherical(const Rational& lambda) {
        FamilySpec s(FamilyId::ultraspherical);
        s.p1_ = lambda;
        return s;
    }
    static FamilySpec chebyshev_t() { return FamilySpec(FamilyId::chebyshev_t); }
    static FamilySpec chebyshev_u() { return FamilySpec(FamilyId::chebyshev_u); }
    static FamilySpec jacobi(const Rational& alpha, const Rational& beta) {
        FamilySpec s(FamilyId::jacobi);
        s.p1_ = alpha;
        s.p2_ = beta;
        return s;
    }
    static FamilySpec laguerre(const Rational& alpha) {
        FamilySpec s(FamilyId::laguerre);
        s.p1_ = alpha;
        return s;
    }
    static FamilySpec bessel(const Rational& alpha) {
        FamilySpec s(FamilyId::bessel);
        s.p1_ = alpha;
        return s;
    }

    FamilyId id() const { return id_; }
    const Rational& param1() const { return p1_; }
    const Rational& param2() const { return p2_; }

    /// beta_n; symmetric families have beta == 0.
    Rational beta(int n) const {
        switch (id_) {
            case FamilyId::hermite:
            case FamilyId::associated_hermite:
            case FamilyId::ultraspherical:
            case FamilyId::chebyshev_t:
            case FamilyId::chebyshev_u:
                return Rational(0);
            case FamilyId::jacobi: {
                const Rational &a = p1_, &b = p2_;
                const Rational h = (a + b) / Rational(2);
                const Rational d1 = Rational(n) + h, d2 = Rational(n) + h + Rational(1);
                if (d1.is_zero() || d2.is_zero())
                    throw ParameterPole(n, "jacobi beta_n pole at n=" + std::to_string(n));
                return (b * b - a * a) / (Rational(4) * d1 * d2);
            }
            case FamilyId::laguerre:
                return Rational(2 * n) + p1_ + Rational(1);
            case FamilyId::bessel: {
                const Rational& a = p1_;
                if (n == 0) {
                    if (a.is_zero()) throw ParameterPole(0, "bessel beta_0 pole");
                    return Rational(-2) / a;
                }
                const Rational d1 = Rational(2 * n) + a, d2 = Rational(2 * n) + a - Rational(2);
                if (d1.is_zero() || d2.is_zero())
                    throw ParameterPole(n, "bessel beta_n pole at n=" + std::to_string(n));
                return Rational(2) * (Rational(2) - a) / (d1 * d2);
            }
        }
        throw ParameterPole(n, "unreachable");
    }

    /// omega_n for n >= 1 (omega_0 = 0 by convention).
    Rational omega(int n) const {
        if (n == 0) return Rational(0);
        switch (id_) {
            case FamilyId::hermite:
                return Rational(n, 2);
            case FamilyId::associated_hermite:
                return (Rational(n) + p1_) / Rational(2);
            case FamilyId::ultraspherical: {
                const Rational& l = p1_;
                const Rational d1 = Rational(n) + l, d2 = Rational(n - 1) + l;
                if (d1.is_zero() || d2.is_zero())
                    throw ParameterPole(n, "ultraspherical omega_n pole at n=" + std::to_string(n));
                return Rational(1, 4) * Rational(n) * (Rational(n - 1) + Rational(2) * l) / (d1 * d2);
            }
            case FamilyId::chebyshev_t:
                // lambda -> 0 limit of the ultraspherical rule; 1/2 at n=1.
                return n == 1 ? Rational(1, 2) : Rational(1, 4);
            case FamilyId::chebyshev_u:
                return Rational(1, 4);
            case FamilyId::jacobi: {
                const Rational &a = p1_, &b = p2_;
                const Rational h = (a + b) / Rational(2);
                const Rational d1 = Rational(n) + h - Rational(1, 2);
                const Rational d2 = Rational(n) + h + Rational(1, 2);
                const Rational d3 = Rational(n) + h;
                if (d1.is_zero() || d2.is_zero() || d3.is_zero())
                    throw ParameterPole(n, "jacobi omega_n pole at n=" + std::to_string(n));
                return Rational(n) * (Rational(n) + a) * (Rational(n) + b) * (Rational(n) + a + b) /
                       (Rational(4) * d1 * d2 * d3 * d3);
            }
            case FamilyId::laguerre:
                return Rational(n) * (Rational(n) + p1_);
            case FamilyId::bessel: {
                const Rational& a = p1_;
                const Rational d1 = Rational(2 * n) + a - Rational(1);
                const Rational d2 = Rational(2 * n) + a - Rational(3);
                const Rational d3 = Rational(2 * n) + a - Rational(2);
                if (d1.is_zero() || d2.is_zero() || d3.is_zero())
                    throw ParameterPole(n, "bessel omega_n pole at n=" + std::to_string(n));
                return Rational(-4) * Rational(n) * (Rational(n) + a - Rational(2)) / (d1 * d2 * d3 * d3);
            }
        }
        throw ParameterPole(n, "unreachable");
    }

    bool symmetric() const {
        switch (id_) {
            case FamilyId::hermite:
            case FamilyId::associated_hermite:
            case FamilyId::ultraspherical:
            case FamilyId::chebyshev_t:
            case FamilyId::chebyshev_u:
                return true;
            default:
                return false;
        }
    }

    /// True when beta_n, omega_n are pole-free through n_max.
    bool valid_through(int n_max) const {
        try {
            for (int n = 0; n <= n_max; ++n) {
                beta(n);
                omega(n);
            }
        } catch (const ParameterPole&) {
            return false;
        }
        return true;
    }

    /// The family of the m-th derivatives (classical shift).
    /// Not defined for the associated Hermite family.
    FamilySpec derivative_shift(int m) const {
        const Rational mm(m);
        switch (id_) {
            case FamilyId::hermite:
                return hermite();
            case FamilyId::ultraspherical:
                return ultraspherical(p1_ + mm);
            case FamilyId::chebyshev_t:
                return m == 0 ? chebyshev_t() : ultraspherical(mm);
            case FamilyId::chebyshev_u:
                return m == 0 ? chebyshev_u() : ultraspherical(Rational(1) + mm);
            case FamilyId::jacobi:
                return jacobi(p1_ + mm, p2_ + mm);
            case FamilyId::laguerre:
                return laguerre(p1_ + mm);
            case FamilyId::bessel:
                return bessel(p1_ + Rational(2 * m));
            case FamilyId::associated_hermite:
                throw ParameterPole(m, "no derivative shift for associated Hermite");
        }
        throw ParameterPole(m, "unreachable");
    }

    std::string name() const {
        switch (id_) {
            case FamilyId::hermite: return "Hermite";
            case FamilyId::associated_hermite: return "AssociatedHermite(" + p1_.str() + ")";
            case FamilyId::ultraspherical: return "Ultraspherical(" + p1_.str() + ")";
            case FamilyId::chebyshev_t: return "ChebyshevT";
            case FamilyId::chebyshev_u: return "ChebyshevU";
            case FamilyId::jacobi: return "Jacobi(" + p1_.str() + "," + p2_.str() + ")";
            case FamilyId::laguerre: return "Laguerre(" + p1_.str() + ")";
            case FamilyId::bessel: return "Bessel(" + p1_.str() + ")";
        }
        return "?";
    }

private:
    explicit FamilySpec(FamilyId id) : id_(id) {}

    FamilyId id_;
    Rational p1_, p2_;
};

/// P_0 .. P_{n_max} by the three-term recurrence
/// P_{n+1} = (x - beta_n) P_n - omega_n P_{n-1}, P_{-1} = 0, P_0 = 1.
inline std::vector<Poly> family_sequence(const FamilySpec& spec, int n_max) {
    std::vector<Poly> p;
    p.reserve(static_cast<size_t>(n_max) + 1);
    p.push_back(Poly(Rational(1)));
    if (n_max == 0) return p;
    Poly prev;  // P_{-1} = 0
    for (int n = 0; n < n_max; ++n) {
        Poly next = (Poly::x() - Poly(spec.beta(n))) * p.back() - spec.omega(n) * prev;
        prev = p.back();
        p.push_back(std::move(next));
    }
    return p;
}

namespace detail {

/// sum_{k=0..n} [(-n)_k * prod(ups + k-shifts) / ((low)_k k!)] * ((1-x)/2)^k,
/// assembled exactly as finite Poly arithmetic.
inline Poly terminating_2f1_1mx2(int n, const Rational& up2, const Rational& low) {
    const Poly half_1mx(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    Poly acc;
    Poly zk(Rational(1));  // ((1-x)/2)^k
    for (int k = 0; k <= n; ++k) {
        const Rational c = pochhammer(Rational(-n), k) * pochhammer(up2, k) /
                           (pochhammer(low, k) * factorial(k));
        acc += c * zk;
        zk = zk * half_1mx;
    }
    return acc;
}

}  // namespace detail

/// The same monic polynomial as family_sequence, computed from the explicit
/// hypergeometric representation -- the independent construction used as an
/// oracle. Throws DenominatorParameterPole when a parameter makes a
/// Pochhammer denominator vanish through index n.
inline Poly hypergeometric_oracle(const FamilySpec& spec, int n) {
    switch (spec.id()) {
        case FamilyId::ultraspherical: {
            const Rational& l = spec.param1();
            const Rational den = pochhammer(l, n);
            if (den.is_zero()) throw DenominatorParameterPole(n);
            const Rational pre = pochhammer(Rational(2) * l, n) / (pow(Rational(2), n) * den);
            return pre * detail::terminating_2f1_1mx2(n, Rational(2) * l + Rational(n), l + Rational(1, 2));
        }
        case FamilyId::chebyshev_t: {
            // lambda -> 0 limit: (2*lambda)_n/(lambda)_n -> 2 for n >= 1.
            if (n == 0) return Poly(Rational(1));
            const Rational pre = Rational(2) / pow(Rational(2), n);
            return pre * detail::terminating_2f1_1mx2(n, Rational(n), Rational(1, 2));
        }
        case FamilyId::chebyshev_u:
            return hypergeometric_oracle(FamilySpec::ultraspherical(Rational(1)), n);
        case FamilyId::hermite: {
            // x^n 2F0(-n/2, -(n-1)/2; ; -1/x^2): a terminating sum in x^{n-2k}.
            Poly acc;
            for (int k = 0; 2 * k <= n; ++k) {
                const Rational c = pochhammer(Rational(-n, 2), k) * pochhammer(Rational(-(n - 1), 2), k) *
                                   pow(Rational(-1), k) / factorial(k);
                acc += Poly::monomial(n - 2 * k, c);
            }
            return acc;
        }
        case FamilyId::jacobi: {
            const Rational &a = spec.param1(), &b = spec.param2();
            const Rational den = factorial(n) * pochhammer(Rational(n) + a + b + Rational(1), n);
            const Rational poch_a1 = pochhammer(a + Rational(1), n);
            if (den.is_zero()) throw DenominatorParameterPole(n);
            // the 2F1 below divides by (a+1)_k for k <= n
            if ((a + Rational(1)).is_integer() && a + Rational(1) <= Rational(0) &&
                -(a + Rational(1)) < Rational(n))
                throw DenominatorParameterPole(n);
            const Rational pre = pow(Rational(2), n) * poch_a1 / den;
            return pre * detail::terminating_2f1_1mx2(n, Rational(n) + a + b + Rational(1), a + Rational(1));
        }
        case FamilyId::laguerre: {
            const Rational& a = spec.param1();
            if ((a + Rational(1)).is_integer() && a + Rational(1) <= Rational(0) &&
                -(a + Rational(1)) < Rational(n))
                throw DenominatorParameterPole(n);
            Poly acc;
            for (int k = 0; k <= n; ++k) {
                const Rational c = pochhammer(Rational(-n), k) /
                                   (pochhammer(a + Rational(1), k) * factorial(k));
                acc += Poly::monomial(k, c);
            }
            return pow(Rational(-1), n) * pochhammer(a + Rational(1), n) * acc;
        }
        case FamilyId::bessel: {
            const Rational& a = spec.param1();
            const Rational den = pochhammer(Rational(n) + a - Rational(1), n);
            if (den.is_zero()) throw DenominatorParameterPole(n);
            Poly acc;
            for (int k = 0; k <= n; ++k) {
                const Rational c = binomial(n, k) * pochhammer(Rational(n) + a - Rational(1), k) *
                                   pow(Rational(2), n - k) / den;
                acc += Poly::monomial(k, c);
            }
            return acc;
        }
        case FamilyId::associated_hermite:
            throw DenominatorParameterPole(n);  // use associated_hermite() below
    }
    throw DenominatorParameterPole(n);
}

/// Associated monic Hermite polynomial H_n(x, c) by its explicit expansion
/// over plain Hermite polynomials. Must agree with the recurrence route
/// (FamilySpec::associated_hermite).
inline Poly associated_hermite(int n, const Rational& c) {
    if (n < 0) return Poly();
    if (n == 0) return Poly(Rational(1));
    const auto herm = family_sequence(FamilySpec::hermite(), n);
    Poly acc;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational coef = pow(Rational(-2), -k) * pochhammer(c, k) * factorial(n - k) /
                              (factorial(k) * factorial(n - 2 * k));
        acc += coef * herm[static_cast<size_t>(n - 2 * k)];
    }
    return acc;
}

/// The real polynomial i^{-n} H_n(ix): flips the sign of every second
/// nonzero coefficient of the monic Hermite polynomial.
inline Poly hermite_sign_flipped(int n) {
    const Poly h = family_sequence(FamilySpec::hermite(), n)[static_cast<size_t>(n)];
    std::vector<Rational> v(static_cast<size_t>(n) + 1);
    for (int i = n; i >= 0; i -= 2) {
        const int j = (n - i) / 2;
        v[static_cast<size_t>(i)] = (j % 2 == 0) ? h.coeff(i) : -h.coeff(i);
    }
    return Poly(std::move(v));
}

/// d^m/dx^m P_n == n!/(n-m)! * Q_{n-m} with Q the derivative-shifted family.
inline bool derivative_shift_check(const FamilySpec& spec, int n, int m) {
    if (m > n) return false;
    if (m == 0) return true;
    const Poly p = family_sequence(spec, n)[static_cast<size_t>(n)];
    const Poly q = family_sequence(spec.derivative_shift(m), n - m)[static_cast<size_t>(n - m)];
    return p.derivative(m) == (factorial(n) / factorial(n - m)) * q;
}

}  // namespace opgf
