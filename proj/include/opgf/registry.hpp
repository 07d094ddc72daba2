#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opgf/hypergeometric.hpp"
#include "opgf/rainville.hpp"

namespace opgf {

using Params = std::map<std::string, Rational>;

inline const Rational& param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw InvalidParameters("missing parameter '" + name + "'");
    return it->second;
}

inline int int_param(const Params& p, const std::string& name) {
    const Rational& r = param(p, name);
    if (!r.is_nonneg_integer()) throw InvalidParameters("parameter '" + name + "' must be a nonnegative integer");
    return static_cast<int>(r.as_int());
}

/// Substitute t -> c*t: coefficient n picks up c^n.
inline Series<Rational> scale_var(const Series<Rational>& f, const Rational& c) {
    Series<Rational> r(f.order());
    Rational cn = 1;
    for (int n = 0; n <= f.order(); ++n) {
        r.set_coeff(n, f.coeff(n) * cn);
        cn *= c;
    }
    return r;
}

namespace detail {

inline Series<Rational> sparse(int order, std::initializer_list<std::pair<int, Rational>> terms) {
    Series<Rational> s(order);
    for (const auto& [i, c] : terms)
        if (i <= order) s.set_coeff(i, c);
    return s;
}

inline Series<Rational> one_series(int N) { return Series<Rational>::one(N); }

// (1 + c1*t + c2*t^2 + ...)^e
inline Series<Rational> powq_of(int N, std::initializer_list<std::pair<int, Rational>> base, const Rational& e) {
    auto s = sparse(N, base);
    s.set_coeff(0, Rational(1));
    return series_powq(s, e);
}

}  // namespace detail

/// How a section-4 identity is tied to its base identity: the m-th
/// x-derivative of the base expansion equals `scale` times the derived
/// expansion (after an optional x -> x+1 shift of the derivative).
struct RouteSpec {
    std::string base_id;
    std::function<Params(const Params&)> base_params;
    std::function<int(const Params&)> order_m;
    std::function<Rational(const Params&)> scale;
    bool shift_arg = false;
    std::function<bool(const Params&)> applies;  // optional gate
};

/// A base identity whose m-th derivative is again a catalogued identity.
struct SelfRoute {
    std::string target_id;
    std::function<Params(const Params&, int m)> target_params;
    std::function<Rational(const Params&, int m)> scale;
};

/// One catalogued generating-function identity.
struct GFIdentity {
    std::string id;
    std::string summary;
    std::vector<std::string> param_names;
    Params defaults;
    std::vector<Params> grid;

    // classification flags
    bool proposition_suite = false;  // run the structural-identity suite
    bool bilateral = false;          // alpha_0 == 0 by construction
    bool formal = false;             // divergent F, coefficients compared formally
    bool univariate = false;         // identity in t alone
    bool special = false;            // bespoke check, no series data

    // builders (to the requested truncation order)
    std::function<Series<Rational>(const Params&, int)> A, R, F;
    std::function<Rational(const Params&)> k_power;  // B(t) = A(t)^k_power
    std::function<std::vector<Rational>(const Params&, int)> alpha;  // alpha_0..alpha_n
    std::function<FamilySpec(const Params&)> family;
    bool shift_target = false;  // expected polynomial is P_n(x+1)

    // optional independent constructions and derivative links
    std::function<Series<Poly>(const Params&, int)> closed_form;
    std::function<Series<Rational>(const Params&, int)> closed_univariate;
    std::optional<RouteSpec> route;
    std::vector<SelfRoute> self_routes;

    // returns a human-readable reason when the parameters are out of domain
    std::function<std::string(const Params&)> invalid_reason;

    Params with_defaults(const Params& given) const {
        Params p = defaults;
        for (const auto& [k, v] : given) {
            if (std::find(param_names.begin(), param_names.end(), k) == param_names.end())
                throw InvalidParameters("identity " + id + " has no parameter '" + k + "'");
            p[k] = v;
        }
        return p;
    }
};

namespace detail {

inline std::vector<Rational> eval_family_at(const FamilySpec& spec, const Rational& point, int n_max) {
    const auto polys = family_sequence(spec, n_max);
    std::vector<Rational> v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(p.eval(point));
    return v;
}

inline std::vector<Rational> assoc_hermite_values(const Rational& point, const Rational& c, int n_max) {
    const auto polys = family_sequence(FamilySpec::associated_hermite(c), n_max);
    std::vector<Rational> v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(p.eval(point));
    return v;
}

// Shared A/R data of the Chebyshev-U bilinear identities: A = 4/(4-t^2),
// R = (rho/2) t^2 A.
inline Series<Rational> cheb_bilinear_A(int N) {
    return detail::powq_of(N, {{2, Rational(-1, 4)}}, Rational(-1));
}
inline Series<Rational> cheb_bilinear_R(const Rational& rho, int N) {
    return detail::sparse(N, {{2, rho / Rational(2)}}) * cheb_bilinear_A(N);
}

// Shared A/R data of the Hermite bilinear identities: A = (1-t^2)^(-1/2),
// R = rho (A - 1).
inline Series<Rational> hermite_bilinear_A(int N) {
    return detail::powq_of(N, {{2, Rational(-1)}}, Rational(-1, 2));
}
inline Series<Rational> hermite_bilinear_R(const Rational& rho, int N) {
    auto a = hermite_bilinear_A(N);
    return (a - Series<Rational>::one(N)) * rho;
}

inline Series<Rational> exp_2rho_t_minus_t2(const Rational& rho, int N) {
    return series_exp(detail::sparse(N, {{1, Rational(2) * rho}, {2, Rational(-1)}}));
}

// F of the bilinear Chebyshev identity: (1 + (alpha1 - 2 rho) t)/(1 - 2 rho t + t^2).
inline Series<Rational> cheb_bilinear_F(const Rational& rho, const Rational& alpha1, int N) {
    auto num = detail::sparse(N, {{0, Rational(1)}, {1, alpha1 - Rational(2) * rho}});
    auto den = detail::sparse(N, {{0, Rational(1)}, {1, Rational(-2) * rho}, {2, Rational(1)}});
    return series_div(num, den);
}

// alpha stream of the bilinear Chebyshev identity (base and derived forms):
// a_n = binom(n+m, m) 2^{n+m} [U_{n+m}(rho) + (alpha1/2 - rho) U_{n+m-1}(rho)].
inline std::vector<Rational> cheb_bilinear_alpha(const Rational& rho, const Rational& alpha1, int m, int n_max) {
    const auto u = eval_family_at(FamilySpec::chebyshev_u(), rho, n_max + m);
    std::vector<Rational> v(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const int q = n + m;
        Rational core = q == 0 ? Rational(1)
                               : u[static_cast<size_t>(q)] +
                                     (alpha1 / Rational(2) - rho) * u[static_cast<size_t>(q - 1)];
        v[static_cast<size_t>(n)] =
            factorial(q) / (factorial(n) * factorial(m)) * pow(Rational(2), q) * core;
    }
    return v;
}

// alpha stream of the Mehler-type identities:
// 2^n/n! H_{n+m}(rho)  or  2^n/n! H_{n+m-1}(rho, 1).
inline std::vector<Rational> hermite_bilinear_alpha(const Rational& rho, int m, bool associated, int n_max) {
    std::vector<Rational> v(static_cast<size_t>(n_max) + 1);
    if (associated) {
        const auto h = assoc_hermite_values(rho, Rational(1), n_max + m);
        for (int n = 0; n <= n_max; ++n) {
            const int q = n + m - 1;
            v[static_cast<size_t>(n)] =
                q < 0 ? Rational(0) : pow(Rational(2), n) / factorial(n) * h[static_cast<size_t>(q)];
        }
    } else {
        const auto h = eval_family_at(FamilySpec::hermite(), rho, n_max + m);
        for (int n = 0; n <= n_max; ++n)
            v[static_cast<size_t>(n)] = pow(Rational(2), n) / factorial(n) * h[static_cast<size_t>(n + m)];
    }
    return v;
}

// F of the Mehler-type derived identities: H_m(rho - t) e^{2 rho t - t^2},
// optionally plus the associated part H_{m-1}(rho - t, 1) + G(t) e^{...} H_m(rho - t).
inline Series<Rational> hermite_bilinear_F(const Rational& rho, int m, bool associated, int N) {
    const Poly hm = family_sequence(FamilySpec::hermite(), m)[static_cast<size_t>(m)];
    const auto rho_minus_t = detail::sparse(N, {{0, rho}, {1, Rational(-1)}});
    const auto gauss = exp_2rho_t_minus_t2(rho, N);
    const auto head = eval_poly_at(hm, rho_minus_t) * gauss;
    if (!associated) return head;
    const Poly hma = m >= 1 ? associated_hermite(m - 1, Rational(1)) : Poly();
    return eval_poly_at(hma, rho_minus_t) + erfi_kernel(rho, N) * head;
}

}  // namespace detail

const std::vector<GFIdentity>& registry();

inline const GFIdentity& find_identity(const std::string& id) {
    for (const auto& g : registry())
        if (g.id == id) return g;
    throw UnknownIdentity(id);
}

inline const std::vector<GFIdentity>& registry() {
    static const std::vector<GFIdentity> table = [] {
        std::vector<GFIdentity> v;
        const Rational half(1, 2);

        auto grid1 = [](const std::string& name, std::initializer_list<Rational> values) {
            std::vector<Params> g;
            for (const auto& x : values) g.push_back(Params{{name, x}});
            return g;
        };

        // ---- ultraspherical / Chebyshev --------------------------------

        {
            GFIdentity g;
            g.id = "Ultra1";
            g.summary = "sum (l)_n/n! C_n^(l)(x) t^n = (1 - x t + t^2/4)^(-l)";
            g.param_names = {"lambda"};
            g.defaults = {{"lambda", half}};
            g.grid = grid1("lambda", {half, Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)});
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::one_series(N); };
            g.R = [](const Params&, int N) { return detail::sparse(N, {{2, Rational(1, 4)}}); };
            g.F = [](const Params& p, int N) {
                return detail::powq_of(N, {{1, Rational(-1)}}, -param(p, "lambda"));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n) a.push_back(pochhammer(param(p, "lambda"), n) / factorial(n));
                return a;
            };
            g.family = [](const Params& p) { return FamilySpec::ultraspherical(param(p, "lambda")); };
            g.invalid_reason = [](const Params& p) -> std::string {
                if (param(p, "lambda").is_zero()) return "lambda must be nonzero";
                return {};
            };
            g.self_routes.push_back(SelfRoute{
                "Ultra1",
                [](const Params& p, int m) { return Params{{"lambda", param(p, "lambda") + Rational(m)}}; },
                [](const Params& p, int m) { return pochhammer(param(p, "lambda"), m); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "Ultra2";
            g.summary = "sum (l+1)_n/n! C_n^(l)(x) t^n = (1 - t^2/4)(1 - x t + t^2/4)^(-l-1)";
            g.param_names = {"lambda"};
            g.defaults = {{"lambda", half}};
            g.grid = grid1("lambda", {half, Rational(1), Rational(2)});
            g.proposition_suite = true;
            g.A = [](const Params& p, int N) {
                return detail::powq_of(N, {{2, Rational(-1, 4)}}, Rational(-1) / param(p, "lambda"));
            };
            g.R = [](const Params& p, int N) {
                auto a = detail::powq_of(N, {{2, Rational(-1, 4)}}, Rational(-1) / param(p, "lambda"));
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * a - Series<Rational>::one(N);
            };
            g.F = [](const Params& p, int N) {
                return detail::powq_of(N, {{1, Rational(-1)}}, -param(p, "lambda") - Rational(1));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(param(p, "lambda") + Rational(1), n) / factorial(n));
                return a;
            };
            g.family = [](const Params& p) { return FamilySpec::ultraspherical(param(p, "lambda")); };
            g.invalid_reason = [](const Params& p) -> std::string {
                if (param(p, "lambda").is_zero()) return "lambda must be nonzero";
                return {};
            };
            g.self_routes.push_back(SelfRoute{
                "Ultra2",
                [](const Params& p, int m) { return Params{{"lambda", param(p, "lambda") + Rational(m)}}; },
                [](const Params& p, int m) { return pochhammer(param(p, "lambda") + Rational(1), m); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "T1";
            g.summary = "1 + sum_{n>=1} T_n(x)/n t^n = 1 - log(1 - x t + t^2/4)";
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::one_series(N); };
            g.R = [](const Params&, int N) { return detail::sparse(N, {{2, Rational(1, 4)}}); };
            g.F = [](const Params&, int N) {
                auto one_minus_t = detail::sparse(N, {{0, Rational(1)}, {1, Rational(-1)}});
                return Series<Rational>::one(N) - series_log(one_minus_t);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a{Rational(1)};
                for (int n = 1; n <= n_max; ++n) a.push_back(Rational(1, n));
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_t(); };
            g.grid = {Params{}};
            g.self_routes.push_back(SelfRoute{
                "Ultra1",
                [](const Params&, int m) { return Params{{"lambda", Rational(m)}}; },
                [](const Params&, int m) { return factorial(m - 1); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "U3";
            g.summary = "sum U_n(x) t^n = 1/(1 - x t + t^2/4), A arbitrary with R = (1 + t^2/4) A - 1";
            g.param_names = {"a_choice"};
            g.defaults = {{"a_choice", Rational(0)}};
            g.grid = grid1("a_choice", {Rational(0), Rational(1), Rational(2)});
            g.proposition_suite = true;
            auto build_a = [](const Params& p, int N) -> Series<Rational> {
                switch (int_param(p, "a_choice")) {
                    case 0: return detail::one_series(N);
                    case 1: return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1));
                    default: return series_exp(Series<Rational>::identity(N));
                }
            };
            g.A = build_a;
            g.R = [build_a](const Params& p, int N) {
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * build_a(p, N) -
                       Series<Rational>::one(N);
            };
            g.F = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1)); };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                return std::vector<Rational>(static_cast<size_t>(n_max) + 1, Rational(1));
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_u(); };
            g.invalid_reason = [](const Params& p) -> std::string {
                const Rational& c = param(p, "a_choice");
                if (!(c == Rational(0) || c == Rational(1) || c == Rational(2)))
                    return "a_choice must be one of 0, 1, 2";
                return {};
            };
            g.self_routes.push_back(SelfRoute{
                "Ultra1",
                [](const Params&, int m) { return Params{{"lambda", Rational(1 + m)}}; },
                [](const Params&, int m) { return factorial(m); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "U4";
            g.summary =
                "1 + a1 sum 2^{n-1} r^{n-1} U_n(x) t^n = (1 + (a1 - 2r)(x t - r t^2/2))/(1 - 2 r x t + r^2 t^2)";
            g.param_names = {"rho", "alpha1"};
            g.defaults = {{"rho", half}, {"alpha1", Rational(1)}};
            g.grid = {Params{{"rho", half}, {"alpha1", Rational(1)}},
                      Params{{"rho", Rational(1)}, {"alpha1", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"alpha1", half}}};
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::one_series(N); };
            g.R = [](const Params& p, int N) { return detail::sparse(N, {{2, param(p, "rho") / Rational(2)}}); };
            g.F = [](const Params& p, int N) {
                const Rational rho = param(p, "rho"), a1 = param(p, "alpha1");
                auto num = detail::sparse(N, {{0, Rational(1)}, {1, a1 - Rational(2) * rho}});
                auto den = detail::sparse(N, {{0, Rational(1)}, {1, Rational(-2) * rho}});
                return series_div(num, den);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                const Rational rho = param(p, "rho"), a1 = param(p, "alpha1");
                std::vector<Rational> a{Rational(1)};
                for (int n = 1; n <= n_max; ++n) a.push_back(a1 * pow(Rational(2) * rho, n - 1));
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_u(); };
            g.invalid_reason = [](const Params& p) -> std::string {
                if (param(p, "rho").is_zero()) return "rho must be nonzero";
                if (param(p, "alpha1").is_zero()) return "alpha1 must be nonzero";
                return {};
            };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "U1";
            g.summary = "bilinear Chebyshev-U generating function with A = 4/(4 - t^2), R = 2 r t^2/(4 - t^2)";
            g.param_names = {"rho", "alpha1"};
            g.defaults = {{"rho", Rational(1)}, {"alpha1", Rational(2)}};
            g.grid = {Params{{"rho", Rational(1)}, {"alpha1", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"alpha1", Rational(1)}},
                      Params{{"rho", half}, {"alpha1", Rational(2)}}};
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::cheb_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::cheb_bilinear_R(param(p, "rho"), N); };
            g.F = [](const Params& p, int N) {
                return detail::cheb_bilinear_F(param(p, "rho"), param(p, "alpha1"), N);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                return detail::cheb_bilinear_alpha(param(p, "rho"), param(p, "alpha1"), 0, n_max);
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_u(); };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "U2a";
            g.summary = "sum 2^n U_n(r) U_n(x) t^n as a rational function (bilinear Chebyshev)";
            g.param_names = {"rho"};
            g.defaults = {{"rho", Rational(1)}};
            g.grid = grid1("rho", {Rational(1), Rational(3, 2)});
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::cheb_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::cheb_bilinear_R(param(p, "rho"), N); };
            g.F = [](const Params& p, int N) {
                return detail::cheb_bilinear_F(param(p, "rho"), Rational(2) * param(p, "rho"), N);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                return detail::cheb_bilinear_alpha(param(p, "rho"), Rational(2) * param(p, "rho"), 0, n_max);
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_u(); };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "U2b";
            g.summary = "sum_{n>=1} 2^n U_{n-1}(r) U_n(x) t^n, the bilateral part of the bilinear form";
            g.param_names = {"rho"};
            g.defaults = {{"rho", Rational(1)}};
            g.grid = grid1("rho", {Rational(1), Rational(3, 2)});
            g.proposition_suite = true;
            g.bilateral = true;
            g.A = [](const Params&, int N) { return detail::cheb_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::cheb_bilinear_R(param(p, "rho"), N); };
            g.F = [](const Params& p, int N) {
                const Rational rho = param(p, "rho");
                auto num = detail::sparse(N, {{1, Rational(2)}});
                auto den = detail::sparse(N, {{0, Rational(1)}, {1, Rational(-2) * rho}, {2, Rational(1)}});
                return series_div(num, den);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                const auto u = detail::eval_family_at(FamilySpec::chebyshev_u(), param(p, "rho"), n_max);
                std::vector<Rational> a{Rational(0)};
                for (int n = 1; n <= n_max; ++n) a.push_back(pow(Rational(2), n) * u[static_cast<size_t>(n - 1)]);
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::chebyshev_u(); };
            v.push_back(std::move(g));
        }

        // ---- Hermite ----------------------------------------------------

        {
            GFIdentity g;
            g.id = "H1";
            g.summary = "sum H_n(x)/n! t^n = exp(x t - t^2/4)";
            g.proposition_suite = true;
            g.grid = {Params{}};
            g.A = [](const Params&, int N) { return detail::one_series(N); };
            g.R = [](const Params&, int N) { return detail::sparse(N, {{2, Rational(1, 4)}}); };
            g.F = [](const Params&, int N) { return series_exp(Series<Rational>::identity(N)); };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n) a.push_back(factorial(n).inverse());
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::hermite(); };
            g.self_routes.push_back(SelfRoute{
                "H1", [](const Params&, int) { return Params{}; },
                [](const Params&, int) { return Rational(1); }});
            v.push_back(std::move(g));
        }

        auto hermite_bilinear_common = [&](GFIdentity& g) {
            g.A = [](const Params&, int N) { return detail::hermite_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::hermite_bilinear_R(param(p, "rho"), N); };
            g.k_power = [](const Params&) { return Rational(1); };
            g.family = [](const Params&) { return FamilySpec::hermite(); };
        };

        {
            GFIdentity g;
            g.id = "H2";
            g.summary = "bilinear Hermite generating function with an imaginary-error-function factor";
            g.param_names = {"rho", "alpha1"};
            g.defaults = {{"rho", half}, {"alpha1", Rational(2)}};
            g.grid = {Params{{"rho", half}, {"alpha1", Rational(2)}},
                      Params{{"rho", Rational(1)}, {"alpha1", Rational(1)}},
                      Params{{"rho", Rational(3, 2)}, {"alpha1", Rational(3)}}};
            g.proposition_suite = true;
            hermite_bilinear_common(g);
            g.F = [](const Params& p, int N) {
                const Rational rho = param(p, "rho"), a1 = param(p, "alpha1");
                auto head = Series<Rational>::one(N) + erfi_kernel(rho, N) * (a1 / Rational(2) - rho);
                return head * detail::exp_2rho_t_minus_t2(rho, N);
            };
            g.alpha = [](const Params& p, int n_max) {
                const Rational rho = param(p, "rho"), a1 = param(p, "alpha1");
                const auto h = detail::eval_family_at(FamilySpec::hermite(), rho, n_max);
                const auto ha = detail::assoc_hermite_values(rho, Rational(1), n_max);
                std::vector<Rational> a{Rational(1)};
                for (int n = 1; n <= n_max; ++n)
                    a.push_back(pow(Rational(2), n) / factorial(n) *
                                (h[static_cast<size_t>(n)] +
                                 (a1 / Rational(2) - rho) * ha[static_cast<size_t>(n - 1)]));
                return a;
            };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "Mehler";
            g.summary = "sum 2^n/n! H_n(r) H_n(x) t^n = (1-t^2)^(-1/2) exp((2 x r t - (x^2+r^2) t^2)/(1-t^2))";
            g.param_names = {"rho"};
            g.defaults = {{"rho", half}};
            g.grid = grid1("rho", {half, Rational(1), Rational(3, 2)});
            g.proposition_suite = true;
            hermite_bilinear_common(g);
            g.F = [](const Params& p, int N) { return detail::exp_2rho_t_minus_t2(param(p, "rho"), N); };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), 0, false, n_max);
            };
            g.self_routes.push_back(SelfRoute{
                "H30",
                [](const Params& p, int m) { return Params{{"rho", param(p, "rho")}, {"m", Rational(m)}}; },
                [](const Params&, int m) { return pow(Rational(2), m); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "H44";
            g.summary = "sum_{n>=1} 2^n/n! H_{n-1}(r,1) H_n(x) t^n, the bilateral Hermite part";
            g.param_names = {"rho"};
            g.defaults = {{"rho", half}};
            g.grid = grid1("rho", {half, Rational(1), Rational(3, 2)});
            g.proposition_suite = true;
            g.bilateral = true;
            hermite_bilinear_common(g);
            g.F = [](const Params& p, int N) {
                const Rational rho = param(p, "rho");
                return erfi_kernel(rho, N) * detail::exp_2rho_t_minus_t2(rho, N);
            };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), 0, true, n_max);
            };
            g.self_routes.push_back(SelfRoute{
                "H32",
                [](const Params& p, int m) { return Params{{"rho", param(p, "rho")}, {"m", Rational(m)}}; },
                [](const Params&, int m) { return pow(Rational(2), m); }});
            v.push_back(std::move(g));
        }

        // ---- Jacobi -------------------------------------------------------

        {
            GFIdentity g;
            g.id = "J1";
            g.summary = "sum (a+3/2)_n/n! P_n^(a,a+1)(x) t^n = (1 - t/2)(1 - x t + t^2/4)^(-(a+3/2))";
            g.param_names = {"alpha"};
            g.defaults = {{"alpha", Rational(0)}};
            g.grid = grid1("alpha", {Rational(0), half, Rational(1), Rational(2)});
            g.proposition_suite = true;
            g.A = [](const Params& p, int N) {
                const Rational a = param(p, "alpha");
                return detail::powq_of(N, {{1, Rational(-1, 2)}},
                                       Rational(-2) / (Rational(2) * a + Rational(1)));
            };
            g.R = [](const Params& p, int N) {
                const Rational a = param(p, "alpha");
                auto A = detail::powq_of(N, {{1, Rational(-1, 2)}},
                                         Rational(-2) / (Rational(2) * a + Rational(1)));
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * A - Series<Rational>::one(N);
            };
            g.F = [](const Params& p, int N) {
                return detail::powq_of(N, {{1, Rational(-1)}}, -(param(p, "alpha") + Rational(3, 2)));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(param(p, "alpha") + Rational(3, 2), n) / factorial(n));
                return a;
            };
            g.family = [](const Params& p) {
                return FamilySpec::jacobi(param(p, "alpha"), param(p, "alpha") + Rational(1));
            };
            g.invalid_reason = [](const Params& p) -> std::string {
                if (param(p, "alpha") == Rational(-1, 2)) return "alpha must differ from -1/2";
                return {};
            };
            g.self_routes.push_back(SelfRoute{
                "J1",
                [](const Params& p, int m) { return Params{{"alpha", param(p, "alpha") + Rational(m)}}; },
                [](const Params& p, int m) { return pochhammer(param(p, "alpha") + Rational(3, 2), m); }});
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "J2";
            g.summary = "sum (3/2)_n/(n+1)! P_n^(0,1)(x) t^n = (1 + t/2)^(-2) 2F1(3/2,1;2;(x+1)t/(1+t/2)^2)";
            g.grid = {Params{}};
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, half}}, Rational(-2)); };
            g.R = [](const Params&, int N) {
                auto A = detail::powq_of(N, {{1, half}}, Rational(-2));
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * A - Series<Rational>::one(N);
            };
            g.F = [](const Params&, int N) {
                return hypergeometric_series({Rational(3, 2), Rational(1)}, {Rational(2)}, N);
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(Rational(3, 2), n) / factorial(n + 1));
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::jacobi(Rational(0), Rational(1)); };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "J3";
            g.summary = "hypergeometric generating function of P_n^(a,1-a) in powers (2t/R0)^n, R0^2 = 1";
            g.param_names = {"alpha", "R0"};
            g.defaults = {{"alpha", Rational(0)}, {"R0", Rational(1)}};
            g.grid = {Params{{"alpha", Rational(0)}, {"R0", Rational(1)}},
                      Params{{"alpha", half}, {"R0", Rational(1)}},
                      Params{{"alpha", Rational(2)}, {"R0", Rational(1)}},
                      Params{{"alpha", Rational(1)}, {"R0", Rational(-1)}}};
            g.proposition_suite = true;
            auto nu = [](const Params& p) {
                return Rational(3, 2) +
                       (Rational(2) * param(p, "alpha") - Rational(1)) / (Rational(2) * param(p, "R0"));
            };
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-2)); };
            g.R = [](const Params& p, int N) {
                const Rational r0 = param(p, "R0");
                auto A = detail::powq_of(N, {{1, Rational(-1)}}, Rational(-2));
                return detail::sparse(N, {{0, r0 / Rational(2)}, {2, r0 / Rational(2)}}) * A -
                       Series<Rational>::constant(N, r0 / Rational(2));
            };
            g.F = [nu](const Params& p, int N) {
                auto f = hypergeometric_series({Rational(3, 2), Rational(1)}, {nu(p)}, N);
                return scale_var(f, Rational(2) / param(p, "R0"));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [nu](const Params& p, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(Rational(3, 2), n) / pochhammer(nu(p), n) *
                                pow(Rational(2) / param(p, "R0"), n));
                return a;
            };
            g.family = [](const Params& p) {
                return FamilySpec::jacobi(param(p, "alpha"), Rational(1) - param(p, "alpha"));
            };
            g.invalid_reason = [nu](const Params& p) -> std::string {
                const Rational r0 = param(p, "R0");
                if (!(r0 * r0 == Rational(1))) return "R0 must be 1 or -1";
                const Rational d = nu(p);
                if (d.is_integer() && d <= Rational(0)) return "lower hypergeometric parameter is a nonpositive integer";
                return {};
            };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "GF3";
            g.summary = "sum (1/2)_n/n! P_n^(-1,0)(x) t^n = (1 - t/2)(1 - x t + t^2/4)^(-1/2)";
            g.grid = {Params{}};
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1, 2)}}, Rational(2)); };
            g.R = [](const Params&, int N) {
                auto A = detail::powq_of(N, {{1, Rational(-1, 2)}}, Rational(2));
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * A - Series<Rational>::one(N);
            };
            g.F = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1, 2)); };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n) a.push_back(pochhammer(half, n) / factorial(n));
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::jacobi(Rational(-1), Rational(0)); };
            g.self_routes.push_back(SelfRoute{
                "J1",
                [](const Params&, int m) { return Params{{"alpha", Rational(m - 1)}}; },
                [](const Params&, int m) { return pochhammer(half, m); }});
            v.push_back(std::move(g));
        }

        // ---- Laguerre -----------------------------------------------------

        {
            GFIdentity g;
            g.id = "L1";
            g.summary = "sum (-1)^n/(a+1)_n L_n^(a)(x) t^n = (1-t)^(-1) 1F1(1;a+1;x t/(t-1))";
            g.param_names = {"alpha"};
            g.defaults = {{"alpha", Rational(0)}};
            g.grid = grid1("alpha", {Rational(0), half, Rational(1), Rational(2)});
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1)); };
            g.R = [](const Params&, int N) { return Series<Rational>(N); };
            g.F = [](const Params& p, int N) {
                auto f = hypergeometric_series({Rational(1)}, {param(p, "alpha") + Rational(1)}, N);
                return scale_var(f, Rational(-1));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params& p, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pow(Rational(-1), n) / pochhammer(param(p, "alpha") + Rational(1), n));
                return a;
            };
            g.family = [](const Params& p) { return FamilySpec::laguerre(param(p, "alpha")); };
            g.invalid_reason = [](const Params& p) -> std::string {
                const Rational a1 = param(p, "alpha") + Rational(1);
                if (a1.is_integer() && a1 <= Rational(0)) return "alpha+1 must not be a nonpositive integer";
                return {};
            };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "L2";
            g.summary = "sum L_n^(a)(x) (-t)^n/n! = (1-t)^(-a-1) exp(x t/(t-1))";
            g.param_names = {"alpha"};
            g.defaults = {{"alpha", Rational(0)}};
            g.grid = grid1("alpha", {Rational(0), half, Rational(1), Rational(2)});
            g.proposition_suite = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1)); };
            g.R = [](const Params& p, int N) {
                auto log1mt = series_log(detail::sparse(N, {{0, Rational(1)}, {1, Rational(-1)}}));
                return log1mt * (-param(p, "alpha"));
            };
            g.F = [](const Params&, int N) {
                return series_exp(Series<Rational>::identity(N) * Rational(-1));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n) a.push_back(pow(Rational(-1), n) / factorial(n));
                return a;
            };
            g.family = [](const Params& p) { return FamilySpec::laguerre(param(p, "alpha")); };
            g.self_routes.push_back(SelfRoute{
                "L2",
                [](const Params& p, int m) { return Params{{"alpha", param(p, "alpha") + Rational(m)}}; },
                [](const Params&, int m) { return pow(Rational(-1), m); }});
            v.push_back(std::move(g));
        }

        // ---- Bessel -------------------------------------------------------

        {
            GFIdentity g;
            g.id = "B1";
            g.summary = "sum (3/2)_n y_n^(3)(x) (2t)^n ~= (1-t)^(-2) 2F0(3/2,1;;2 x t/(1-t)^2), formal";
            g.grid = {Params{}};
            g.proposition_suite = true;
            g.formal = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-2)); };
            g.R = [](const Params&, int N) { return Series<Rational>(N); };
            g.F = [](const Params&, int N) {
                auto f = hypergeometric_series({Rational(3, 2), Rational(1)}, {}, N);
                return scale_var(f, Rational(2));
            };
            g.k_power = [](const Params&) { return Rational(1); };
            g.alpha = [](const Params&, int n_max) {
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n) a.push_back(pochhammer(Rational(3, 2), n) * pow(Rational(2), n));
                return a;
            };
            g.family = [](const Params&) { return FamilySpec::bessel(Rational(3)); };
            v.push_back(std::move(g));
        }

        // ---- derivative-generated identities -------------------------------

        {
            GFIdentity g;
            g.id = "U22";
            g.summary = "m-th derivative of the bilinear Chebyshev form, as two partial-fraction blocks";
            g.param_names = {"s", "alpha1", "m"};
            g.defaults = {{"s", Rational(2)}, {"alpha1", Rational(1)}, {"m", Rational(1)}};
            g.grid = {Params{{"s", Rational(2)}, {"alpha1", Rational(1)}, {"m", Rational(1)}},
                      Params{{"s", Rational(2)}, {"alpha1", Rational(2)}, {"m", Rational(2)}},
                      Params{{"s", Rational(3)}, {"alpha1", Rational(1)}, {"m", Rational(3)}}};
            auto rho_of = [](const Params& p) {
                const Rational s = param(p, "s");
                return (s * s + Rational(1)) / (Rational(2) * s);
            };
            g.A = [](const Params&, int N) { return detail::cheb_bilinear_A(N); };
            g.R = [rho_of](const Params& p, int N) { return detail::cheb_bilinear_R(rho_of(p), N); };
            g.F = [rho_of](const Params& p, int N) {
                const int m = int_param(p, "m");
                auto f = detail::cheb_bilinear_F(rho_of(p), param(p, "alpha1"), N + m);
                for (int i = 0; i < m; ++i) f = series_derivative(f);
                return f * factorial(m).inverse();
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [rho_of](const Params& p, int n_max) {
                return detail::cheb_bilinear_alpha(rho_of(p), param(p, "alpha1"), int_param(p, "m"), n_max);
            };
            g.family = [](const Params& p) {
                return FamilySpec::ultraspherical(Rational(int_param(p, "m") + 1));
            };
            g.invalid_reason = [](const Params& p) -> std::string {
                const Rational s = param(p, "s");
                if (s.is_zero() || s * s == Rational(1)) return "s must differ from 0, 1, -1";
                if (!param(p, "m").is_nonneg_integer() || param(p, "m") > Rational(8))
                    return "m must be an integer in [0, 8]";
                return {};
            };
            g.closed_form = [rho_of](const Params& p, int N) {
                // c1/(t1 - x t - (t1/4 - rho/2) t^2)^(m+1) + c2/(t2 - ...)^(m+1)
                const Rational s = param(p, "s");
                const Rational rho = rho_of(p), a1 = param(p, "alpha1");
                const int m = int_param(p, "m");
                const Rational root = (s * s - Rational(1)) / (Rational(2) * s);  // sqrt(rho^2-1)
                const Rational t1 = rho - root, t2 = rho + root;
                const Rational c1 = (Rational(1) - (a1 - Rational(2) * rho) * t1) / (t2 - t1);
                const Rational c2 = (Rational(1) - (a1 - Rational(2) * rho) * t2) / (t1 - t2);
                auto block = [&](const Rational& ti) {
                    Series<Poly> inner(N);  // (x t + (ti/4 - rho/2) t^2)/ti
                    inner.set_coeff(1, Poly::monomial(1, ti.inverse()));
                    if (N >= 2)
                        inner.set_coeff(2, Poly((ti / Rational(4) - rho / Rational(2)) / ti));
                    auto base = Series<Poly>::one(N) - inner;
                    return series_powq(base, Rational(-(m + 1))) * pow(ti, -(m + 1));
                };
                return block(t1) * c1 + block(t2) * c2;
            };
            g.route = RouteSpec{
                "U1",
                [rho_of](const Params& p) {
                    return Params{{"rho", rho_of(p)}, {"alpha1", param(p, "alpha1")}};
                },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) { return factorial(int_param(p, "m")); }};
            v.push_back(std::move(g));
        }

        auto m_range_reason = [](const Params& p, int lo) -> std::string {
            if (!param(p, "m").is_integer() || param(p, "m") < Rational(lo) || param(p, "m") > Rational(8))
                return "m must be an integer in [" + std::to_string(lo) + ", 8]";
            return {};
        };

        {
            GFIdentity g;
            g.id = "H30";
            g.summary = "sum 2^n/n! H_{n+m}(r) H_n(x) t^n via a Hermite-Gaussian kernel";
            g.param_names = {"rho", "m"};
            g.defaults = {{"rho", half}, {"m", Rational(1)}};
            g.grid = {Params{{"rho", half}, {"m", Rational(1)}},
                      Params{{"rho", Rational(1)}, {"m", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"m", Rational(3)}},
                      Params{{"rho", Rational(1)}, {"m", Rational(0)}}};
            g.A = [](const Params&, int N) { return detail::hermite_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::hermite_bilinear_R(param(p, "rho"), N); };
            g.F = [](const Params& p, int N) {
                return detail::hermite_bilinear_F(param(p, "rho"), int_param(p, "m"), false, N);
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), int_param(p, "m"), false, n_max);
            };
            g.family = [](const Params&) { return FamilySpec::hermite(); };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 0); };
            g.route = RouteSpec{
                "Mehler",
                [](const Params& p) { return Params{{"rho", param(p, "rho")}}; },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) { return pow(Rational(2), int_param(p, "m")); }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "H31";
            g.summary = "sum 2^n/n! H_{n+m}(r) t^n = H_m(r - t) exp(2 r t - t^2)";
            g.param_names = {"rho", "m"};
            g.defaults = {{"rho", half}, {"m", Rational(1)}};
            g.grid = {Params{{"rho", half}, {"m", Rational(1)}},
                      Params{{"rho", Rational(1)}, {"m", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"m", Rational(3)}}};
            g.univariate = true;
            g.closed_univariate = [](const Params& p, int N) {
                return detail::hermite_bilinear_F(param(p, "rho"), int_param(p, "m"), false, N);
            };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), int_param(p, "m"), false, n_max);
            };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 0); };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "H32";
            g.summary = "sum 2^n/n! H_{n+m-1}(r,1) H_n(x) t^n via associated-Hermite and erfi blocks";
            g.param_names = {"rho", "m"};
            g.defaults = {{"rho", half}, {"m", Rational(1)}};
            g.grid = {Params{{"rho", half}, {"m", Rational(1)}},
                      Params{{"rho", Rational(1)}, {"m", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"m", Rational(3)}}};
            g.A = [](const Params&, int N) { return detail::hermite_bilinear_A(N); };
            g.R = [](const Params& p, int N) { return detail::hermite_bilinear_R(param(p, "rho"), N); };
            g.F = [](const Params& p, int N) {
                return detail::hermite_bilinear_F(param(p, "rho"), int_param(p, "m"), true, N);
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), int_param(p, "m"), true, n_max);
            };
            g.family = [](const Params&) { return FamilySpec::hermite(); };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 1); };
            g.route = RouteSpec{
                "H44",
                [](const Params& p) { return Params{{"rho", param(p, "rho")}}; },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) { return pow(Rational(2), int_param(p, "m")); }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "H33";
            g.summary = "sum 2^n/n! H_{n+m-1}(r,1) t^n = H_{m-1}(r-t,1) + erfi block times H_m(r-t)";
            g.param_names = {"rho", "m"};
            g.defaults = {{"rho", half}, {"m", Rational(1)}};
            g.grid = {Params{{"rho", half}, {"m", Rational(1)}},
                      Params{{"rho", Rational(1)}, {"m", Rational(2)}},
                      Params{{"rho", Rational(3, 2)}, {"m", Rational(3)}}};
            g.univariate = true;
            g.closed_univariate = [](const Params& p, int N) {
                return detail::hermite_bilinear_F(param(p, "rho"), int_param(p, "m"), true, N);
            };
            g.alpha = [](const Params& p, int n_max) {
                return detail::hermite_bilinear_alpha(param(p, "rho"), int_param(p, "m"), true, n_max);
            };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 1); };
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "J22";
            g.summary = "m-th derivative of the P^(0,1) generating function: 2F1(3/2+m,1+m;2+m;.)";
            g.param_names = {"m"};
            g.defaults = {{"m", Rational(1)}};
            g.grid = grid1("m", {Rational(1), Rational(2), Rational(3)});
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, half}}, Rational(-2)); };
            g.R = [](const Params&, int N) {
                auto A = detail::powq_of(N, {{1, half}}, Rational(-2));
                return detail::sparse(N, {{0, Rational(1)}, {2, Rational(1, 4)}}) * A - Series<Rational>::one(N);
            };
            g.F = [](const Params& p, int N) {
                const Rational m(int_param(p, "m"));
                return hypergeometric_series({Rational(3, 2) + m, Rational(1) + m}, {Rational(2) + m}, N);
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [](const Params& p, int n_max) {
                const Rational m(int_param(p, "m"));
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(Rational(3, 2) + m, n) * pochhammer(Rational(1) + m, n) /
                                (pochhammer(Rational(2) + m, n) * factorial(n)));
                return a;
            };
            g.family = [](const Params& p) {
                const int m = int_param(p, "m");
                return FamilySpec::jacobi(Rational(m), Rational(m + 1));
            };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 0); };
            g.route = RouteSpec{
                "J2",
                [](const Params&) { return Params{}; },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) {
                    const int m = int_param(p, "m");
                    return pochhammer(Rational(3, 2), m) / Rational(m + 1);
                }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "J333";
            g.summary = "(1-t)^(-(a+b+1)) 2F1((a+b+2)/2,(a+b+1)/2;a+1;2xt/(1-t)^2) = sum c_n P_n^(a,b)(x+1) t^n";
            g.param_names = {"alpha", "beta"};
            g.defaults = {{"alpha", half}, {"beta", half}};
            g.grid = {Params{{"alpha", half}, {"beta", half}},
                      Params{{"alpha", Rational(1)}, {"beta", Rational(0)}},
                      Params{{"alpha", Rational(2)}, {"beta", Rational(1)}},
                      Params{{"alpha", Rational(3, 2)}, {"beta", Rational(3, 2)}},
                      Params{{"alpha", Rational(2)}, {"beta", half}}};
            g.shift_target = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-2)); };
            g.R = [](const Params&, int N) { return Series<Rational>(N); };
            g.F = [](const Params& p, int N) {
                const Rational a = param(p, "alpha"), b = param(p, "beta");
                auto f = hypergeometric_series({(a + b + Rational(2)) / Rational(2),
                                                (a + b + Rational(1)) / Rational(2)},
                                               {a + Rational(1)}, N);
                return scale_var(f, Rational(2));
            };
            g.k_power = [](const Params& p) {
                return (param(p, "alpha") + param(p, "beta") + Rational(1)) / Rational(2);
            };
            g.alpha = [](const Params& p, int n_max) {
                const Rational a = param(p, "alpha"), b = param(p, "beta");
                std::vector<Rational> out;
                for (int n = 0; n <= n_max; ++n)
                    out.push_back(pochhammer((a + b + Rational(2)) / Rational(2), n) *
                                  pochhammer((a + b + Rational(1)) / Rational(2), n) * pow(Rational(2), n) /
                                  (pochhammer(a + Rational(1), n) * factorial(n)));
                return out;
            };
            g.family = [](const Params& p) {
                return FamilySpec::jacobi(param(p, "alpha"), param(p, "beta"));
            };
            g.invalid_reason = [](const Params& p) -> std::string {
                const Rational a1 = param(p, "alpha") + Rational(1);
                if (a1.is_integer() && a1 <= Rational(0)) return "alpha+1 must not be a nonpositive integer";
                return {};
            };
            // Ties back to the J3 data when (alpha+beta-1)/2 is a nonnegative integer.
            g.route = RouteSpec{
                "J3",
                [](const Params& p) {
                    const Rational a = (param(p, "alpha") - param(p, "beta") + Rational(1)) / Rational(2);
                    return Params{{"alpha", a}, {"R0", Rational(1)}};
                },
                [](const Params& p) {
                    return static_cast<int>(
                        ((param(p, "alpha") + param(p, "beta") - Rational(1)) / Rational(2)).as_int());
                },
                [](const Params& p) {
                    const int m = static_cast<int>(
                        ((param(p, "alpha") + param(p, "beta") - Rational(1)) / Rational(2)).as_int());
                    const Rational a = (param(p, "alpha") - param(p, "beta") + Rational(1)) / Rational(2);
                    return pochhammer(Rational(3, 2), m) * pow(Rational(2), m) * factorial(m) /
                           pochhammer(a + Rational(1), m);
                },
                true,
                [](const Params& p) {
                    const Rational m2 = (param(p, "alpha") + param(p, "beta") - Rational(1)) / Rational(2);
                    return m2.is_nonneg_integer();
                }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "L11";
            g.summary = "m-th derivative of the Laguerre 1F1 form: (1-t)^(-1-m) 1F1(1+m;a+m+1;-xt/(1-t))";
            g.param_names = {"alpha", "m"};
            g.defaults = {{"alpha", Rational(0)}, {"m", Rational(1)}};
            g.grid = {Params{{"alpha", Rational(0)}, {"m", Rational(1)}},
                      Params{{"alpha", half}, {"m", Rational(2)}},
                      Params{{"alpha", Rational(1)}, {"m", Rational(3)}}};
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-1)); };
            g.R = [](const Params&, int N) { return Series<Rational>(N); };
            g.F = [](const Params& p, int N) {
                const Rational m(int_param(p, "m"));
                auto f = hypergeometric_series({Rational(1) + m},
                                               {param(p, "alpha") + m + Rational(1)}, N);
                return scale_var(f, Rational(-1));
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [](const Params& p, int n_max) {
                const Rational m(int_param(p, "m"));
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(Rational(1) + m, n) * pow(Rational(-1), n) /
                                (pochhammer(param(p, "alpha") + m + Rational(1), n) * factorial(n)));
                return a;
            };
            g.family = [](const Params& p) {
                return FamilySpec::laguerre(param(p, "alpha") + Rational(int_param(p, "m")));
            };
            g.invalid_reason = [m_range_reason](const Params& p) -> std::string {
                if (auto r = m_range_reason(p, 0); !r.empty()) return r;
                const Rational a1 = param(p, "alpha") + Rational(1);
                if (a1.is_integer() && a1 <= Rational(0)) return "alpha+1 must not be a nonpositive integer";
                return {};
            };
            g.route = RouteSpec{
                "L1",
                [](const Params& p) { return Params{{"alpha", param(p, "alpha")}}; },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) {
                    const int m = int_param(p, "m");
                    return pow(Rational(-1), m) * factorial(m) /
                           pochhammer(param(p, "alpha") + Rational(1), m);
                }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "B11";
            g.summary = "m-th derivative of the Bessel form: (1-t)^(-2-2m) 2F0(3/2+m,1+m;;2xt/(1-t)^2), formal";
            g.param_names = {"m"};
            g.defaults = {{"m", Rational(1)}};
            g.grid = grid1("m", {Rational(1), Rational(2), Rational(3)});
            g.formal = true;
            g.A = [](const Params&, int N) { return detail::powq_of(N, {{1, Rational(-1)}}, Rational(-2)); };
            g.R = [](const Params&, int N) { return Series<Rational>(N); };
            g.F = [](const Params& p, int N) {
                const Rational m(int_param(p, "m"));
                auto f = hypergeometric_series({Rational(3, 2) + m, Rational(1) + m}, {}, N);
                return scale_var(f, Rational(2));
            };
            g.k_power = [](const Params& p) { return Rational(int_param(p, "m") + 1); };
            g.alpha = [](const Params& p, int n_max) {
                const Rational m(int_param(p, "m"));
                std::vector<Rational> a;
                for (int n = 0; n <= n_max; ++n)
                    a.push_back(pochhammer(Rational(3, 2) + m, n) * pochhammer(Rational(1) + m, n) *
                                pow(Rational(2), n) / factorial(n));
                return a;
            };
            g.family = [](const Params& p) {
                return FamilySpec::bessel(Rational(3 + 2 * int_param(p, "m")));
            };
            g.invalid_reason = [m_range_reason](const Params& p) { return m_range_reason(p, 0); };
            g.route = RouteSpec{
                "B1",
                [](const Params&) { return Params{}; },
                [](const Params& p) { return int_param(p, "m"); },
                [](const Params& p) {
                    const int m = int_param(p, "m");
                    return pochhammer(Rational(3, 2), m) * pow(Rational(2), m) * factorial(m);
                }};
            v.push_back(std::move(g));
        }

        {
            GFIdentity g;
            g.id = "F415";
            g.summary = "associated-Hermite convolution: H_{m-1}(r,1) as an alternating Hermite product sum";
            g.special = true;
            g.grid = {Params{}};
            v.push_back(std::move(g));
        }

        return v;
    }();
    return table;
}

}  // namespace opgf
