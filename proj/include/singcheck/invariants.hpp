#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "form_modules.hpp"
#include "jet_oracle.hpp"
#include "log_derivations.hpp"
#include "std_basis.hpp"

namespace singcheck {

inline std::vector<Poly> jacobian_ideal(const Poly& f) {
    std::vector<Poly> out;
    out.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.partial(i));
    return out;
}

inline std::vector<Poly> tjurina_ideal(const Poly& g) {
    std::vector<Poly> out = jacobian_ideal(g);
    out.insert(out.begin(), g);
    return out;
}

/// (g) + the 2x2 minors of the Jacobian matrix of (g, f): the determinantal
/// ideal of the Le-Greuel path.
inline std::vector<Poly> icis_determinantal_ideal(const Poly& f, const Poly& g) {
    require_same_context(f.context(), g.context());
    const std::size_t n1 = f.nvars();
    std::vector<Poly> df, dg;
    for (std::size_t i = 0; i < n1; ++i) {
        df.push_back(f.partial(i));
        dg.push_back(g.partial(i));
    }
    std::vector<Poly> out{g};
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) out.push_back(dg[i] * df[j] - dg[j] * df[i]);
    return out;
}

/// Milnor number: dim O / (df/dx_0, ..., df/dx_n). INFINITE means the
/// critical locus is not isolated.
inline DimResult milnor_number(const Poly& f) {
    if (sgn(f.constant_coefficient()) != 0)
        throw std::invalid_argument("f has nonzero constant term (not a germ through the origin)");
    return ideal_quotient_dim(jacobian_ideal(f));
}

/// Tjurina number: dim O / (g, dg/dx_0, ..., dg/dx_n).
inline DimResult tjurina_number(const Poly& g) {
    if (sgn(g.constant_coefficient()) != 0)
        throw std::invalid_argument("g has nonzero constant term (not a germ through the origin)");
    return ideal_quotient_dim(tjurina_ideal(g));
}

/// Bruce-Roberts number of the pair: dim O / J_f(V).
inline std::uint64_t bruce_roberts(const Poly& f, const Poly& g) {
    std::vector<Poly> gens = jf_V(f, g);
    if (gens.empty()) throw PreconditionError("J_f(V) is the zero ideal", {"mu_BR_finite"});
    DimResult dim = ideal_quotient_dim(gens);
    if (!dim.finite) throw PreconditionError("J_f(V) is infinite dimensional", {"mu_BR_finite"});
    return dim.value;
}

struct GermPair {
    Poly f;
    Poly g;
};

inline GermPair make_germ_pair(Poly f, Poly g) {
    require_same_context(f.context(), g.context());
    if (sgn(f.constant_coefficient()) != 0)
        throw std::invalid_argument("f has nonzero constant term (not a germ through the origin)");
    if (sgn(g.constant_coefficient()) != 0)
        throw std::invalid_argument("g has nonzero constant term (not a germ through the origin)");
    return GermPair{std::move(f), std::move(g)};
}

struct PreconditionReport {
    bool f_isolated = false; // dim O/J_f finite
    bool g_isolated = false; // dim O/J_g finite
    bool icis_ok = false;    // dim O/((g) + I_2(Jac(g,f))) finite
    bool reduced_ok = false; // implied by g_isolated, recorded explicitly

    bool all_ok() const { return f_isolated && g_isolated && icis_ok && reduced_ok; }

    std::vector<std::pair<std::string, bool>> flags() const {
        return {{"f_isolated", f_isolated},
                {"g_isolated", g_isolated},
                {"icis_ok", icis_ok},
                {"reduced_ok", reduced_ok}};
    }

    std::vector<std::string> failed() const {
        std::vector<std::string> out;
        for (const auto& [name, ok] : flags())
            if (!ok) out.push_back(name);
        return out;
    }
};

/// The three finiteness tests the theorem pipeline needs. An isolated
/// hypersurface germ is automatically reduced, so reduced_ok mirrors
/// g_isolated.
inline PreconditionReport check_preconditions(const GermPair& pair) {
    PreconditionReport rep;
    rep.f_isolated = milnor_number(pair.f).finite;
    rep.g_isolated = milnor_number(pair.g).finite;
    rep.icis_ok = ideal_quotient_dim(icis_determinantal_ideal(pair.f, pair.g)).finite;
    rep.reduced_ok = rep.g_isolated;
    return rep;
}

namespace detail {

// Exact search for strictly positive rational weights w with <w, alpha> = 1
// for every exponent vector alpha of g: Gauss-Jordan on the linear system,
// then Fourier-Motzkin elimination on the strict positivity constraints over
// the free parameters, with back-substitution producing a witness.
inline std::optional<std::vector<Rational>> find_positive_weights(const Poly& g) {
    const std::size_t nv = g.nvars();
    std::vector<std::vector<Rational>> m; // rows: [alpha_0 .. alpha_{nv-1} | 1]
    for (const Term& t : g.terms()) {
        std::vector<Rational> row(nv + 1, Rational(0));
        for (std::size_t i = 0; i < nv; ++i) row[i] = Rational(static_cast<long>(t.mon.exps[i]));
        row[nv] = 1;
        m.push_back(std::move(row));
    }
    if (m.empty()) return std::nullopt;

    // Gauss-Jordan to reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nv && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational factor = m[i][c];
            for (std::size_t j = 0; j <= nv; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i)
        if (sgn(m[i][nv]) != 0) return std::nullopt; // inconsistent system

    std::vector<bool> is_pivot(nv, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_col;
    for (std::size_t c = 0; c < nv; ++c)
        if (!is_pivot[c]) free_col.push_back(c);
    const std::size_t d = free_col.size();

    // each w_i as an affine form over the free parameters t: [c_0..c_{d-1} | const]
    std::vector<std::vector<Rational>> w_form(nv, std::vector<Rational>(d + 1, Rational(0)));
    for (std::size_t k = 0; k < d; ++k) w_form[free_col[k]][k] = 1;
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr) {
        std::size_t c = pivot_col[pr];
        w_form[c][d] = m[pr][nv];
        for (std::size_t k = 0; k < d; ++k) w_form[c][k] = -m[pr][free_col[k]];
    }

    // strict constraints L(t) > 0, one per coordinate weight
    std::vector<std::vector<Rational>> cons = w_form;

    // Fourier-Motzkin: eliminate t_0, ..., t_{d-1}; remember the bound rows
    // of each level for the back-substitution pass
    std::vector<std::vector<std::vector<Rational>>> lower_at(d), upper_at(d);
    for (std::size_t lev = 0; lev < d; ++lev) {
        std::vector<std::vector<Rational>> pass;
        auto& lows = lower_at[lev];
        auto& ups = upper_at[lev];
        for (auto& cstr : cons) {
            int s = sgn(cstr[lev]);
            if (s > 0)
                lows.push_back(cstr);
            else if (s < 0)
                ups.push_back(cstr);
            else
                pass.push_back(cstr);
        }
        for (const auto& lo : lows)
            for (const auto& up : ups) {
                // lo: c_lo t + r_lo > 0 with c_lo > 0; up: c_up t + r_up > 0
                // with c_up < 0; compatibility: c_lo * r_up - c_up * r_lo > 0
                std::vector<Rational> nw(d + 1, Rational(0));
                for (std::size_t j = lev + 1; j <= d; ++j)
                    nw[j] = lo[lev] * up[j] - up[lev] * lo[j];
                pass.push_back(std::move(nw));
            }
        cons = std::move(pass);
    }
    for (const auto& cstr : cons)
        if (sgn(cstr[d]) <= 0) return std::nullopt; // constant constraint violated

    // feasible: pick parameters from the last eliminated level backwards
    std::vector<Rational> t(d, Rational(0));
    for (std::size_t lev = d; lev-- > 0;) {
        auto eval_rest = [&](const std::vector<Rational>& cstr) {
            Rational v = cstr[d];
            for (std::size_t j = lev + 1; j < d; ++j) v += cstr[j] * t[j];
            return v;
        };
        std::optional<Rational> lo, hi;
        for (const auto& cstr : lower_at[lev]) {
            Rational b = -eval_rest(cstr) / cstr[lev];
            if (!lo || b > *lo) lo = b;
        }
        for (const auto& cstr : upper_at[lev]) {
            Rational b = -eval_rest(cstr) / cstr[lev];
            if (!hi || b < *hi) hi = b;
        }
        if (lo && hi)
            t[lev] = (*lo + *hi) / 2;
        else if (lo)
            t[lev] = *lo + 1;
        else if (hi)
            t[lev] = *hi - 1;
        else
            t[lev] = 1;
    }

    std::vector<Rational> w(nv, Rational(0));
    for (std::size_t i = 0; i < nv; ++i) {
        w[i] = w_form[i][d];
        for (std::size_t k = 0; k < d; ++k) w[i] += w_form[i][k] * t[k];
        if (sgn(w[i]) <= 0)
            throw InternalCheckError("weight search produced a non-positive witness");
    }
    return w;
}

struct MuFvPaths {
    std::uint64_t form_path;          // mu_G - mu(V)
    std::uint64_t determinantal_path; // dim O/((g) + I_2(Jac(g,f))) - mu(V)
};

inline MuFvPaths mu_fV_paths(const Poly& f, const Poly& g) {
    DimResult mu_V = milnor_number(g);
    if (!mu_V.finite) throw PreconditionError("mu(V) is infinite", {"g_isolated"});
    std::uint64_t greuel = mu_G(f, g);
    DimResult det = ideal_quotient_dim(icis_determinantal_ideal(f, g));
    if (!det.finite)
        throw PreconditionError("determinantal ideal is infinite dimensional", {"icis_ok"});
    if (greuel < mu_V.value || det.value < mu_V.value)
        throw InternalCheckError("Le-Greuel dimension below mu(V)");
    return {greuel - mu_V.value, det.value - mu_V.value};
}

} // namespace detail

/// mu(f_V) computed along two independent routes that must agree: the
/// relative-form dimension minus mu(V), and the determinantal (Jacobian
/// minors) dimension minus mu(V). Disagreement is an engine bug and throws.
inline std::uint64_t mu_fV_le_greuel(const Poly& f, const Poly& g) {
    auto paths = detail::mu_fV_paths(f, g);
    if (paths.form_path != paths.determinantal_path)
        throw InternalCheckError("mu(f_V) path disagreement: form module gives " +
                                 std::to_string(paths.form_path) + ", determinantal gives " +
                                 std::to_string(paths.determinantal_path));
    return paths.form_path;
}

struct QuasihomogeneityResult {
    bool by_saito = false; // mu(V) == tau(V): quasihomogeneous up to coordinate change
    std::optional<std::vector<Rational>> weights; // positive weight witness, sufficient only
};

inline QuasihomogeneityResult is_quasihomogeneous(const Poly& g) {
    DimResult mu = milnor_number(g);
    DimResult tau = tjurina_number(g);
    if (!mu.finite || !tau.finite)
        throw PreconditionError("mu(V) or tau(V) is infinite", {"g_isolated"});
    return {mu.value == tau.value, detail::find_positive_weights(g)};
}

struct IdentityCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

struct InvariantReport {
    PreconditionReport preconditions;
    std::uint64_t mu_f = 0, mu_V = 0, tau_V = 0;
    std::int64_t q_V = 0;
    std::uint64_t mu_BR_pair = 0, mu_BR_rel = 0, mu_G = 0, mu_fV = 0, mu_pair_topological = 0;
    // fixed order: EQ3, EQ5, EQ6, LEM3, GRLE, COR1
    std::vector<std::pair<std::string, IdentityCheck>> identities;
    bool quasihomogeneous_by_saito = false;
    std::optional<std::vector<Rational>> weights;
    std::optional<std::vector<std::pair<std::string, bool>>> oracle_agrees;

    bool all_identities_hold() const {
        for (const auto& [name, chk] : identities)
            if (!chk.holds) return false;
        return true;
    }
};

struct VerifyOptions {
    bool with_oracle = false;
    unsigned oracle_max_degree = 24;
};

namespace detail {

inline std::uint64_t expect_finite(const DimResult& d, const char* what) {
    if (!d.finite)
        throw InternalCheckError(std::string(what) + " infinite although preconditions hold");
    return d.value;
}

inline bool oracle_matches_ideal(const std::vector<Poly>& gens, std::uint64_t expected,
                                 unsigned max_degree) {
    JetStabilized r = jet_ideal_dim_stabilized(gens, max_degree);
    return r.stabilized && r.value == expected;
}

inline bool oracle_matches_module(const std::vector<ModVector>& gens, std::size_t rank,
                                  std::uint64_t expected, unsigned max_degree) {
    JetStabilized r = jet_quotient_dim_stabilized(gens, rank, max_degree);
    return r.stabilized && r.value == expected;
}

} // namespace detail

/// Computes every invariant of the pair and records the verdict of each
/// named identity from independently produced numbers; only mu(f_V) reuses
/// an identity, and that one is double-computed along two routes.
inline InvariantReport verify_theorem(const GermPair& pair, const VerifyOptions& opts = {}) {
    const Poly& f = pair.f;
    const Poly& g = pair.g;

    InvariantReport rep;
    rep.preconditions = check_preconditions(pair);
    if (!rep.preconditions.all_ok()) {
        std::string msg = "preconditions failed:";
        for (const auto& name : rep.preconditions.failed()) msg += " " + name;
        throw PreconditionError(msg, rep.preconditions.failed(), rep.preconditions.flags());
    }

    rep.mu_f = detail::expect_finite(milnor_number(f), "mu(f)");
    rep.mu_V = detail::expect_finite(milnor_number(g), "mu(V)");
    rep.tau_V = detail::expect_finite(tjurina_number(g), "tau(V)");
    rep.q_V = static_cast<std::int64_t>(rep.mu_V) - static_cast<std::int64_t>(rep.tau_V);

    try {
        rep.mu_BR_pair = bruce_roberts(f, g);
        rep.mu_BR_rel = mu_BR_rel(f, g);
        rep.mu_G = mu_G(f, g);
    } catch (const PreconditionError& e) {
        throw InternalCheckError(std::string("dimension infinite although preconditions hold: ") +
                                 e.what());
    }

    auto paths = detail::mu_fV_paths(f, g);
    if (paths.form_path != paths.determinantal_path)
        throw InternalCheckError("mu(f_V) path disagreement: form module gives " +
                                 std::to_string(paths.form_path) + ", determinantal gives " +
                                 std::to_string(paths.determinantal_path));
    rep.mu_fV = paths.form_path;
    rep.mu_pair_topological = rep.mu_f + rep.mu_fV;

    const auto i64 = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
    auto push = [&rep](const char* name, std::int64_t lhs, std::int64_t rhs) {
        rep.identities.emplace_back(name, IdentityCheck{lhs, rhs, lhs == rhs});
    };
    push("EQ3", i64(rep.mu_BR_pair), i64(rep.mu_f + rep.mu_BR_rel));
    push("EQ5", i64(rep.mu_pair_topological), i64(rep.mu_f + rep.mu_fV));
    push("EQ6", i64(rep.mu_BR_pair), i64(rep.mu_f + rep.mu_fV + rep.mu_V) - i64(rep.tau_V));
    push("LEM3", i64(rep.mu_G), i64(rep.mu_BR_rel + rep.tau_V));
    push("GRLE", i64(paths.form_path), i64(paths.determinantal_path));
    // COR1 is a biconditional: equality of the two sides must match q(V) == 0
    {
        std::int64_t lhs = i64(rep.mu_BR_pair);
        std::int64_t rhs = i64(rep.mu_f + rep.mu_fV);
        rep.identities.emplace_back(
            "COR1", IdentityCheck{lhs, rhs, (lhs == rhs) == (rep.mu_V == rep.tau_V)});
    }

    rep.quasihomogeneous_by_saito = rep.mu_V == rep.tau_V;
    rep.weights = detail::find_positive_weights(g);

    if (opts.with_oracle) {
        const unsigned md = opts.oracle_max_degree;
        std::vector<std::pair<std::string, bool>> agree;
        agree.emplace_back("mu_f", detail::oracle_matches_ideal(jacobian_ideal(f), rep.mu_f, md));
        agree.emplace_back("mu_V", detail::oracle_matches_ideal(jacobian_ideal(g), rep.mu_V, md));
        agree.emplace_back("tau_V",
                           detail::oracle_matches_ideal(tjurina_ideal(g), rep.tau_V, md));
        agree.emplace_back("mu_BR_pair",
                           detail::oracle_matches_ideal(jf_V(f, g), rep.mu_BR_pair, md));
        {
            std::vector<ModVector> gens = koszul_wedge_generators(f);
            for (auto& v : omega_n_Vstar(g).generators) gens.push_back(std::move(v));
            agree.emplace_back("mu_BR_rel",
                               detail::oracle_matches_module(gens, f.nvars(), rep.mu_BR_rel, md));
        }
        {
            std::vector<ModVector> gens = koszul_wedge_generators(f);
            for (auto& v : omega_n_V(g).generators) gens.push_back(std::move(v));
            agree.emplace_back("mu_G",
                               detail::oracle_matches_module(gens, f.nvars(), rep.mu_G, md));
        }
        {
            JetStabilized muV_o = jet_ideal_dim_stabilized(jacobian_ideal(g), md);
            JetStabilized det_o = jet_ideal_dim_stabilized(icis_determinantal_ideal(f, g), md);
            std::vector<ModVector> gens = koszul_wedge_generators(f);
            for (auto& v : omega_n_V(g).generators) gens.push_back(std::move(v));
            JetStabilized muG_o = jet_quotient_dim_stabilized(gens, f.nvars(), md);
            bool ok = muV_o.stabilized && det_o.stabilized && muG_o.stabilized &&
                      muG_o.value - muV_o.value == rep.mu_fV &&
                      det_o.value - muV_o.value == rep.mu_fV;
            agree.emplace_back("mu_fV", ok);
        }
        rep.oracle_agrees = std::move(agree);
    }
    return rep;
}

} // namespace singcheck
