#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opgf/families.hpp"
#include "opgf/series.hpp"

namespace opgf {

/// The coefficient streams S_n of A'(t)/A(t) and R_n of R'(t)/A(t).
struct RainvilleCoeffs {
    std::vector<Rational> S;
    std::vector<Rational> Rc;
    int order = 0;

    /// In the symmetric case (A and R both even) the even-index entries
    /// vanish identically.
    bool even_indices_vanish() const {
        for (size_t i = 0; i < S.size(); i += 2)
            if (!S[i].is_zero() || !Rc[i].is_zero()) return false;
        return true;
    }
};

/// Requires A(0) = 1, R(0) = 0; both streams to order min(ord A, ord R) - 1.
inline RainvilleCoeffs compute_S_R(const Series<Rational>& A, const Series<Rational>& R) {
    const int n = std::min(A.order(), R.order()) - 1;
    const Series<Rational> a = A.truncated(n);
    RainvilleCoeffs out;
    out.order = n;
    const Series<Rational> s = series_div(series_derivative(A).truncated(n), a);
    const Series<Rational> r = series_div(series_derivative(R).truncated(n), a);
    for (int i = 0; i <= n; ++i) {
        out.S.push_back(s.coeff(i));
        out.Rc.push_back(r.coeff(i));
    }
    return out;
}

/// Table of the connection coefficients A^k_n, defined for n >= k+1.
class AknTable {
public:
    AknTable(int k_max, int n_max) : k_max_(k_max), n_max_(n_max),
        v_(static_cast<size_t>(k_max + 1), std::vector<Rational>(static_cast<size_t>(n_max) + 1)) {}

    int k_max() const { return k_max_; }
    int n_max() const { return n_max_; }
    bool defined(int k, int n) const { return k >= 0 && k <= k_max_ && n >= k + 1 && n <= n_max_; }

    const Rational& at(int k, int n) const {
        if (!defined(k, n)) throw ParameterPole(n, "A^k_n index out of domain");
        return v_[static_cast<size_t>(k)][static_cast<size_t>(n)];
    }
    void set(int k, int n, Rational val) { v_[static_cast<size_t>(k)][static_cast<size_t>(n)] = std::move(val); }

private:
    int k_max_, n_max_;
    std::vector<std::vector<Rational>> v_;
};

/// A^0_n = -S_0 a_{n-1}/a_n + R_0;
/// A^1_n = -S_1 a_{n-2}/a_n - S_0 a_{n-1}/a_n beta_{n-1} + R_1 a_{n-1}/a_n;
/// A^k_n = -S_k a_{n-k-1}/a_n - S_{k-1} a_{n-k}/a_n beta_{n-k}
///         - S_{k-2} a_{n-k+1}/a_n omega_{n-k+1} + R_k a_{n-k}/a_n.
/// alpha[n] must be nonzero for 1 <= n <= n_max (these are the divisors;
/// alpha[0] only ever appears in numerators).
inline AknTable akn_table(const RainvilleCoeffs& rc, const std::vector<Rational>& alpha,
                          const FamilySpec& spec, int k_max, int n_max) {
    if (static_cast<int>(alpha.size()) <= n_max || rc.order < k_max)
        throw InvalidParameters("akn_table: input streams too short");
    for (int n = 1; n <= n_max; ++n)
        if (alpha[static_cast<size_t>(n)].is_zero()) throw ZeroAlpha(n);

    auto ratio = [&](int i, int n) { return alpha[static_cast<size_t>(i)] / alpha[static_cast<size_t>(n)]; };

    AknTable t(k_max, n_max);
    for (int n = 1; n <= n_max; ++n)
        t.set(0, n, -rc.S[0] * ratio(n - 1, n) + rc.Rc[0]);
    if (k_max >= 1)
        for (int n = 2; n <= n_max; ++n)
            t.set(1, n, -rc.S[1] * ratio(n - 2, n) - rc.S[0] * ratio(n - 1, n) * spec.beta(n - 1) +
                        rc.Rc[1] * ratio(n - 1, n));
    for (int k = 2; k <= k_max; ++k)
        for (int n = k + 1; n <= n_max; ++n)
            t.set(k, n, -rc.S[static_cast<size_t>(k)] * ratio(n - k - 1, n) -
                        rc.S[static_cast<size_t>(k - 1)] * ratio(n - k, n) * spec.beta(n - k) -
                        rc.S[static_cast<size_t>(k - 2)] * ratio(n - k + 1, n) * spec.omega(n - k + 1) +
                        rc.Rc[static_cast<size_t>(k)] * ratio(n - k, n));
    return t;
}

/// Outcome of one identity check; carries the first failing index.
struct CheckOutcome {
    bool ok = true;
    int first_fail = -1;
    std::string detail;

    void fail(int n, std::string what) {
        if (ok) {
            ok = false;
            first_fail = n;
            detail = std::move(what);
        }
    }
    explicit operator bool() const { return ok; }
};

/// alpha_n x P'_n - n alpha_n P_n ==
///   -sum_k S_k alpha_{n-k-1} (x P'_{n-k-1} + P_{n-k-1})
///   +sum_k R_k alpha_{n-k} P'_{n-k},   1 <= n <= n_max.
inline CheckOutcome verify_prop1(const RainvilleCoeffs& rc, const std::vector<Rational>& alpha,
                                 const std::vector<Poly>& polys, int n_max) {
    CheckOutcome out;
    const Poly x = Poly::x();
    for (int n = 1; n <= n_max; ++n) {
        const Poly& pn = polys[static_cast<size_t>(n)];
        Poly lhs = alpha[static_cast<size_t>(n)] * (x * pn.derivative() - Rational(n) * pn);
        Poly rhs;
        for (int k = 0; k <= n - 1; ++k) {
            const Poly& pa = polys[static_cast<size_t>(n - k - 1)];
            const Poly& pb = polys[static_cast<size_t>(n - k)];
            rhs -= rc.S[static_cast<size_t>(k)] * alpha[static_cast<size_t>(n - k - 1)] *
                   (x * pa.derivative() + pa);
            rhs += rc.Rc[static_cast<size_t>(k)] * alpha[static_cast<size_t>(n - k)] * pb.derivative();
        }
        if (lhs != rhs) out.fail(n, "first-order relation fails at n=" + std::to_string(n));
    }
    return out;
}

/// x P'_n - n P_n == sum_{k=0}^{n-1} A^k_n P'_{n-k},  1 <= n <= n_max.
inline CheckOutcome verify_prop2(const AknTable& t, const std::vector<Poly>& polys, int n_max) {
    CheckOutcome out;
    const Poly x = Poly::x();
    for (int n = 1; n <= std::min(n_max, t.n_max()); ++n) {
        const Poly& pn = polys[static_cast<size_t>(n)];
        Poly lhs = x * pn.derivative() - Rational(n) * pn;
        Poly rhs;
        for (int k = 0; k <= n - 1; ++k)
            rhs += t.at(k, n) * polys[static_cast<size_t>(n - k)].derivative();
        if (lhs != rhs) out.fail(n, "connection relation fails at n=" + std::to_string(n));
    }
    return out;
}

/// The five structural identities relating beta_n, omega_n and the table.
/// Table must cover n_max+1 rows and k up to n_max.
inline CheckOutcome verify_prop3(const AknTable& t, const FamilySpec& spec, int n_max) {
    CheckOutcome out;
    auto A = [&](int k, int n) { return t.at(k, n); };

    // (i)  beta_n = (n+1) A^0_{n+1} - n A^0_n, n >= 0
    for (int n = 0; n <= n_max; ++n) {
        Rational rhs = Rational(n + 1) * A(0, n + 1);
        if (n >= 1) rhs -= Rational(n) * A(0, n);
        if (spec.beta(n) != rhs) out.fail(n, "(i) fails at n=" + std::to_string(n));
    }

    // (ii) omega_n = n/2 A^1_{n+1} - (n-1)/2 A^1_n - n/(2(n+1)) (beta_n - A^0_n)^2, n >= 1
    for (int n = 1; n <= n_max; ++n) {
        Rational rhs = Rational(n, 2) * A(1, n + 1);
        if (n >= 2) rhs -= Rational(n - 1, 2) * A(1, n);
        const Rational d = spec.beta(n) - A(0, n);
        rhs -= Rational(n) / Rational(2 * (n + 1)) * d * d;
        if (spec.omega(n) != rhs) out.fail(n, "(ii) fails at n=" + std::to_string(n));
    }

    // (iii), n >= 2
    for (int n = 2; n <= n_max; ++n) {
        Rational lhs = A(2, n + 1);
        if (n >= 3) lhs -= Rational(n - 2) / Rational(n - 1) * A(2, n);
        const Rational rhs =
            spec.omega(n) * (Rational(1, n + 1) * spec.beta(n) + Rational(2) / Rational(n) * spec.beta(n - 1) -
                             Rational(n + 2) / Rational(n) * A(0, n - 1) + Rational(n) / Rational(n + 1) * A(0, n)) +
            A(1, n) * (-Rational(n + 2) / Rational(n + 1) * spec.beta(n) +
                       Rational(n - 1) / Rational(n) * spec.beta(n - 1) + Rational(1, n + 1) * A(0, n) +
                       Rational(1, n) * A(0, n - 1));
        if (lhs != rhs) out.fail(n, "(iii) fails at n=" + std::to_string(n));
    }

    // (iv), n >= 3
    for (int n = 3; n <= n_max; ++n) {
        const Rational lhs = Rational(2) / Rational(n) * spec.omega(n) * spec.omega(n - 1);
        Rational rhs = A(3, n + 1);
        if (n >= 4) rhs -= Rational(n - 3) / Rational(n - 2) * A(3, n);
        rhs += Rational(n + 2) / Rational(n) * spec.omega(n) * A(1, n - 1) -
               Rational(n - 1) / Rational(n) * spec.omega(n - 1) * A(1, n) -
               Rational(1, n) * A(1, n) * A(1, n - 1);
        rhs -= (-Rational(n + 2) / Rational(n + 1) * spec.beta(n) +
                Rational(n - 2) / Rational(n - 1) * spec.beta(n - 2) + Rational(1, n + 1) * A(0, n) +
                Rational(1, n - 1) * A(0, n - 2)) *
               A(2, n);
        if (lhs != rhs) out.fail(n, "(iv) fails at n=" + std::to_string(n));
    }

    // (v), n >= k >= 4
    for (int k = 4; k <= n_max; ++k) {
        for (int n = k; n <= n_max; ++n) {
            Rational lhs = A(k, n + 1);
            if (n >= k + 1) lhs -= Rational(n - k) / Rational(n - k + 1) * A(k, n);
            lhs += (Rational(n + 2) / Rational(n + 1) * spec.beta(n) -
                    Rational(n - k + 1) / Rational(n - k + 2) * spec.beta(n - k + 1)) *
                   A(k - 1, n);
            lhs += Rational(n + 2) / Rational(n) * spec.omega(n) * A(k - 2, n - 1) -
                   Rational(n - k + 2) / Rational(n - k + 3) * spec.omega(n - k + 2) * A(k - 2, n);
            Rational rhs;
            for (int l = 0; l <= k - 1; ++l)
                rhs += A(k - l - 1, n) * A(l, n - k + l + 1) / Rational(n - k + l + 2);
            if (lhs != rhs) out.fail(n, "(v) fails at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        }
    }
    return out;
}

/// The two corollaries: vanishing of A^2, A^3 propagates to all k >= 4; in
/// the symmetric case even-k entries vanish and the reduced identities hold.
inline CheckOutcome verify_corollaries(const AknTable& t, const FamilySpec& spec, bool symmetric, int n_max) {
    CheckOutcome out;
    auto A = [&](int k, int n) { return t.at(k, n); };

    bool a2_zero = true, a3_zero = true;
    for (int n = 3; n <= n_max; ++n) a2_zero = a2_zero && A(2, n).is_zero();
    for (int n = 4; n <= n_max; ++n) a3_zero = a3_zero && A(3, n).is_zero();
    if (a2_zero && a3_zero) {
        for (int k = 4; k <= t.k_max(); ++k)
            for (int n = k + 1; n <= n_max; ++n)
                if (!A(k, n).is_zero()) out.fail(n, "A^k_n nonzero for k=" + std::to_string(k));
    }

    if (symmetric) {
        // even-k entries vanish
        for (int k = 0; k <= t.k_max(); k += 2)
            for (int n = k + 1; n <= n_max; ++n)
                if (!A(k, n).is_zero())
                    out.fail(n, "even-index A^" + std::to_string(k) + "_" + std::to_string(n) + " nonzero");

        // omega_n = n/2 A^1_{n+1} - (n-1)/2 A^1_n, n >= 1
        for (int n = 1; n <= n_max - 1; ++n) {
            Rational rhs = Rational(n, 2) * A(1, n + 1);
            if (n >= 2) rhs -= Rational(n - 1, 2) * A(1, n);
            if (spec.omega(n) != rhs) out.fail(n, "symmetric omega recovery fails at n=" + std::to_string(n));
        }

        // 2/n omega_n omega_{n-1} = A^3_{n+1} - (n-3)/(n-2) A^3_n
        //   + (n+2)/n omega_n A^1_{n-1} - (n-1)/n omega_{n-1} A^1_n - 1/n A^1_n A^1_{n-1}, n >= 3
        for (int n = 3; n <= n_max - 1; ++n) {
            const Rational lhs = Rational(2) / Rational(n) * spec.omega(n) * spec.omega(n - 1);
            Rational rhs = A(3, n + 1);
            if (n >= 4) rhs -= Rational(n - 3) / Rational(n - 2) * A(3, n);
            rhs += Rational(n + 2) / Rational(n) * spec.omega(n) * A(1, n - 1) -
                   Rational(n - 1) / Rational(n) * spec.omega(n - 1) * A(1, n) -
                   Rational(1, n) * A(1, n) * A(1, n - 1);
            if (lhs != rhs) out.fail(n, "symmetric third-order relation fails at n=" + std::to_string(n));
        }

        // odd-k chain, n >= 2k+1, k >= 2
        for (int k = 2; 2 * k + 1 <= n_max - 1; ++k) {
            for (int n = 2 * k + 1; n <= n_max - 1; ++n) {
                Rational lhs = A(2 * k + 1, n + 1);
                if (n >= 2 * k + 2) lhs -= Rational(n - 2 * k - 1) / Rational(n - 2 * k) * A(2 * k + 1, n);
                lhs += Rational(n + 2) / Rational(n) * spec.omega(n) * A(2 * k - 1, n - 1) -
                       Rational(n - 2 * k + 1) / Rational(n - 2 * k + 2) * spec.omega(n - 2 * k + 1) *
                           A(2 * k - 1, n);
                Rational rhs;
                for (int l = 0; l <= k - 1; ++l)
                    rhs += A(2 * k - 2 * l - 1, n) * A(2 * l + 1, n - 2 * k + 2 * l + 1) /
                           Rational(n - 2 * k + 2 * l + 2);
                if (lhs != rhs)
                    out.fail(n, "symmetric odd-k chain fails at k=" + std::to_string(k) + ", n=" + std::to_string(n));
            }
        }
    }
    return out;
}

/// Expansion of A(t)^k_power * F^(m)(x t A(t) - R(t)) as a series in t with
/// polynomial coefficients. F must be supplied to order >= N + m_deriv.
inline Series<Poly> expand_gf(const Series<Rational>& A, const Series<Rational>& F,
                              const Series<Rational>& R, const Rational& k_power, int m_deriv, int N) {
    Series<Rational> f = F;
    for (int i = 0; i < m_deriv; ++i) f = series_derivative(f);
    f = f.truncated(N);

    // u = x*t*A(t) - R(t): coefficient of t^n is A_{n-1} x - R_n.
    Series<Poly> u(N);
    for (int n = 1; n <= N; ++n) {
        Poly c = Poly::monomial(1, A.coeff(n - 1)) - Poly(R.coeff(n));
        u.set_coeff(n, std::move(c));
    }
    u.set_coeff(0, Poly(-R.coeff(0)));

    Series<Poly> result = series_compose(lift(f), u);
    if (!k_power.is_zero())
        result = lift(series_powq(A.truncated(N), k_power)) * result;
    return result;
}

/// H_{m-1}(rho, 1) expressed through the sign-flipped Hermite convolution,
/// as an exact polynomial identity in rho.
inline bool formula_415_holds(int m) {
    const Poly lhs = associated_hermite(m - 1, Rational(1));
    const auto herm = family_sequence(FamilySpec::hermite(), m);
    Poly rhs;
    for (int k = 1; k <= m; ++k) {
        const Rational c = pow(Rational(-1), k - 1) * factorial(m) / (factorial(k) * factorial(m - k));
        rhs += c * (hermite_sign_flipped(k - 1) * herm[static_cast<size_t>(m - k)]);
    }
    return lhs == rhs;
}

}  // namespace opgf
