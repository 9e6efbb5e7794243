#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modvec.hpp"

namespace singcheck {

/// A vector-space dimension that may be infinite.
struct DimResult {
    bool finite = false;
    std::uint64_t value = 0;

    static DimResult infinite() { return {false, 0}; }
    static DimResult of(std::uint64_t v) { return {true, v}; }

    bool operator==(const DimResult&) const = default;
};

namespace detail {

struct Reducer {
    ModVector vec; // monic: leading coefficient 1
    ModTerm lt;
    std::uint32_t ecart;
};

inline std::uint32_t ecart_of(const ModVector& v, const ModTerm& lt) {
    return v.max_degree() - lt.mon.degree;
}

inline Reducer make_reducer(const ModVector& v, const ModuleOrder& ord) {
    ModTerm lt = *v.leading_term(ord);
    ModVector monic = v.scaled(Rational(1) / lt.coef);
    std::uint32_t e = ecart_of(v, lt);
    lt.coef = 1;
    return Reducer{std::move(monic), std::move(lt), e};
}

} // namespace detail

/// Weak normal form by local division (Mora): among the reducers whose
/// leading term divides the current leading term, one of minimal ecart is
/// used; when even that reducer has larger ecart than the intermediate
/// result, the intermediate joins the reducer set, which is what guarantees
/// termination under the non-well-founded local order. The result r
/// satisfies u*v = (combination of basis) + r for some unit u of the local
/// ring, and the leading term of a nonzero r is divisible by no basis
/// leading term.
inline ModVector mora_normal_form(const ModVector& v, const std::vector<ModVector>& basis,
                                  const ModuleOrder& ord = {}) {
    std::vector<detail::Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& b : basis) {
        require_same_context(v.context(), b.context());
        if (b.rank() != v.rank()) throw std::invalid_argument("module rank mismatch");
        if (!b.is_zero()) reducers.push_back(detail::make_reducer(b, ord));
    }
    ModVector h = v;
    while (!h.is_zero()) {
        ModTerm lt = *h.leading_term(ord);
        int best = -1;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            const auto& r = reducers[i];
            if (r.lt.comp == lt.comp && mon_divides(r.lt.mon, lt.mon)) {
                if (best < 0 || r.ecart < reducers[static_cast<std::size_t>(best)].ecart)
                    best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        const std::size_t bi = static_cast<std::size_t>(best);
        std::uint32_t h_ecart = detail::ecart_of(h, lt);
        if (reducers[bi].ecart > h_ecart) reducers.push_back(detail::make_reducer(h, ord));
        h = ModVector::sub_scaled(h, lt.coef, mon_quotient(lt.mon, reducers[bi].lt.mon),
                                  reducers[bi].vec);
    }
    return h;
}

/// Standard basis of a submodule of O^rank with its leading-term staircase.
/// Generators are monic, lead-interreduced (no leading term divides
/// another) and canonically sorted, so the output is deterministic.
struct StdBasis {
    std::vector<ModVector> generators;
    std::vector<std::pair<Monomial, std::size_t>> leading_terms;
    std::size_t rank = 0;
    ModuleOrder order;
    ContextPtr context;
};

namespace detail {

// Canonical generator order: descending leading term in the module order,
// full componentwise comparison on ties.
inline bool canonical_before(const ModVector& a, const ModTerm& la, const ModVector& b,
                             const ModTerm& lb, const ModuleOrder& ord) {
    int c = ord.cmp(la.mon, la.comp, lb.mon, lb.comp);
    if (c != 0) return c > 0;
    return modvec_cmp(a, b) > 0;
}

} // namespace detail

/// Mora's tangent-cone algorithm (normal pair-selection strategy: ascending
/// leading-term degree of the pair lcm, ties by the module order). Zero
/// input vectors are ignored.
inline StdBasis std_basis(const std::vector<ModVector>& gens, std::size_t rank,
                          const ModuleOrder& ord = {}) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    ContextPtr ctx = gens[0].context();
    for (const auto& g : gens) {
        require_same_context(ctx, g.context());
        if (g.rank() != rank) throw std::invalid_argument("module rank mismatch");
    }

    std::vector<ModVector> G;
    std::vector<ModTerm> lts;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto red = detail::make_reducer(g, ord);
        G.push_back(std::move(red.vec));
        lts.push_back(std::move(red.lt));
    }

    StdBasis out;
    out.rank = rank;
    out.order = ord;
    out.context = ctx;
    if (G.empty()) return out;

    // canonical input order, duplicates removed
    {
        std::vector<std::size_t> idx(G.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return detail::canonical_before(G[a], lts[a], G[b], lts[b], ord);
        });
        std::vector<ModVector> G2;
        std::vector<ModTerm> lts2;
        for (std::size_t k : idx) {
            if (!G2.empty() && G2.back() == G[k]) continue;
            G2.push_back(G[k]);
            lts2.push_back(lts[k]);
        }
        G = std::move(G2);
        lts = std::move(lts2);
    }

    struct SPair {
        std::uint32_t deg;
        Monomial lcm;
        std::size_t comp;
        std::size_t i, j;
    };
    auto pair_less = [&ord](const SPair& a, const SPair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.cmp(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<SPair, decltype(pair_less)> pairs(pair_less);
    auto add_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (lts[i].comp != lts[j].comp) continue;
            Monomial l = mon_lcm(lts[i].mon, lts[j].mon);
            pairs.insert(SPair{l.degree, std::move(l), lts[i].comp, i, j});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) add_pairs_with(j);

    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        // generators are monic, so the s-vector needs no coefficient scaling
        ModVector s = G[p.i].shifted(mon_quotient(p.lcm, lts[p.i].mon)) -
                      G[p.j].shifted(mon_quotient(p.lcm, lts[p.j].mon));
        if (s.is_zero()) continue;
        ModVector h = mora_normal_form(s, G, ord);
        if (h.is_zero()) continue;
        auto red = detail::make_reducer(h, ord);
        G.push_back(std::move(red.vec));
        lts.push_back(std::move(red.lt));
        add_pairs_with(G.size() - 1);
    }

    // interreduce by deletion; processing in canonical order puts every
    // potential divisor before its multiples
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return detail::canonical_before(G[a], lts[a], G[b], lts[b], ord);
    });
    for (std::size_t k : idx) {
        bool dominated = false;
        for (const auto& [m, c] : out.leading_terms) {
            if (c == lts[k].comp && mon_divides(m, lts[k].mon)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        out.generators.push_back(G[k]);
        out.leading_terms.emplace_back(lts[k].mon, lts[k].comp);
    }
    return out;
}

/// True iff v lies in the submodule (over the local ring) described by the
/// standard basis.
inline bool submodule_contains(const StdBasis& basis, const ModVector& v) {
    if (v.is_zero()) return true;
    if (basis.generators.empty()) return false;
    return mora_normal_form(v, basis.generators, basis.order).is_zero();
}

/// Counts module monomials outside the leading-term staircase. INFINITE is
/// detected first, per component: some variable has no pure power among the
/// staircase corners.
inline DimResult quotient_dim(const StdBasis& basis) {
    const std::size_t nv = basis.context->nvars();
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < basis.rank; ++c) {
        std::vector<const Monomial*> corners;
        for (const auto& [m, mc] : basis.leading_terms)
            if (mc == c) corners.push_back(&m);
        if (corners.empty()) return DimResult::infinite();

        constexpr std::uint32_t kUnbounded = UINT32_MAX;
        std::vector<std::uint32_t> bound(nv, kUnbounded);
        for (std::size_t i = 0; i < nv; ++i)
            for (const Monomial* m : corners)
                if (mon_is_pure_power(*m, i)) bound[i] = std::min(bound[i], m->exps[i]);
        bool zero_dim = true;
        for (std::size_t i = 0; i < nv; ++i)
            if (bound[i] == kUnbounded) zero_dim = false;
        if (!zero_dim) return DimResult::infinite();

        // enumerate the exponent box under the pure-power corners
        bool empty_box = false;
        for (std::size_t i = 0; i < nv; ++i)
            if (bound[i] == 0) empty_box = true;
        if (empty_box) continue;
        std::vector<std::uint32_t> e(nv, 0);
        for (;;) {
            Monomial m = mon_from_exps(e);
            bool in_staircase = false;
            for (const Monomial* g : corners)
                if (mon_divides(*g, m)) {
                    in_staircase = true;
                    break;
                }
            if (!in_staircase) ++total;
            std::size_t k = 0;
            while (k < nv) {
                if (++e[k] < bound[k]) break;
                e[k] = 0;
                ++k;
            }
            if (k == nv) break;
        }
    }
    return DimResult::of(total);
}

/// Rank-1 conveniences for ideals.
inline StdBasis ideal_std_basis(const std::vector<Poly>& gens) {
    std::vector<ModVector> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(ModVector::from_poly(g));
    return std_basis(v, 1, ModuleOrder{});
}

inline DimResult ideal_quotient_dim(const std::vector<Poly>& gens) {
    return quotient_dim(ideal_std_basis(gens));
}

inline bool ideal_contains(const StdBasis& basis, const Poly& p) {
    return submodule_contains(basis, ModVector::from_poly(p));
}

} // namespace singcheck
