#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "modvec.hpp"

namespace singcheck {

namespace detail {

struct MonLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exps < b.exps; }
};

inline void collect_exps(std::size_t nv, unsigned d, std::size_t pos, std::vector<std::uint32_t>& cur,
                         unsigned used, std::vector<Monomial>& out) {
    if (pos == nv) {
        out.push_back(mon_from_exps(cur));
        return;
    }
    for (std::uint32_t e = 0; used + e <= d; ++e) {
        cur[pos] = e;
        collect_exps(nv, d, pos + 1, cur, used + e, out);
    }
    cur[pos] = 0;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nv, unsigned d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(nv, 0);
    collect_exps(nv, d, 0, cur, 0, out);
    return out;
}

/// Exact rank over Q via fraction-free (Bareiss) elimination on an integer
/// matrix. Destroys its argument.
inline std::size_t rank_bareiss(std::vector<std::vector<Integer>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

struct JetLevel {
    std::uint64_t dim;   // dim of F/(M + m^{d+1} F)
    bool top_full;       // every degree-d module monomial reduces into lower degrees
};

inline JetLevel jet_level(const std::vector<ModVector>& gens, std::size_t rank, unsigned d) {
    const ContextPtr& ctx = gens[0].context();
    const std::size_t nv = ctx->nvars();
    const std::vector<Monomial> mons = monomials_up_to(nv, d);
    std::map<Monomial, std::size_t, MonLexLess> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
    const std::size_t nrows = rank * mons.size();

    // columns: every monomial multiple of a generator whose leading degree
    // stays within the bound, truncated at degree d
    std::vector<std::map<std::size_t, Rational>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        unsigned mind = UINT32_MAX;
        for (std::size_t c = 0; c < rank; ++c)
            if (!g[c].is_zero()) mind = std::min<unsigned>(mind, g[c].lead_degree());
        if (mind > d) continue;
        for (const Monomial& alpha : monomials_up_to(nv, d - mind)) {
            std::map<std::size_t, Rational> col;
            for (std::size_t c = 0; c < rank; ++c)
                for (const Term& t : g[c].terms()) {
                    if (t.mon.degree + alpha.degree > d) continue;
                    std::size_t row = c * mons.size() + index.at(mon_mul(t.mon, alpha));
                    auto [it, fresh] = col.emplace(row, t.coef);
                    if (!fresh) it->second += t.coef;
                }
            for (auto it = col.begin(); it != col.end();)
                it = sgn(it->second) == 0 ? col.erase(it) : std::next(it);
            if (!col.empty()) cols.push_back(std::move(col));
        }
    }

    // clear denominators per column and assemble the integer matrix
    std::vector<std::vector<Integer>> m(nrows, std::vector<Integer>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Integer scale = 1;
        for (const auto& [row, q] : cols[j]) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
            scale = l;
        }
        for (const auto& [row, q] : cols[j]) m[row][j] = q.get_num() * (scale / q.get_den());
    }

    std::vector<std::vector<Integer>> mtop;
    std::size_t top_rows = 0;
    for (std::size_t c = 0; c < rank; ++c)
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (mons[i].degree == d) {
                mtop.push_back(m[c * mons.size() + i]);
                ++top_rows;
            }

    JetLevel lv;
    lv.dim = nrows - rank_bareiss(m);
    lv.top_full = rank_bareiss(mtop) == top_rows;
    return lv;
}

inline void validate_jet_input(const std::vector<ModVector>& gens, std::size_t rank) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    for (const auto& g : gens) {
        require_same_context(gens[0].context(), g.context());
        if (g.rank() != rank) throw std::invalid_argument("module rank mismatch");
    }
}

} // namespace detail

/// dim of F/(M + m^{d+1} F), where F = O^rank, M the submodule generated by
/// gens and m the maximal ideal: the number of module monomials of degree
/// <= degree_bound minus the exact rank of the truncated-multiple matrix.
/// Independent of the standard-basis engine by construction.
inline std::uint64_t jet_quotient_dim(const std::vector<ModVector>& gens, std::size_t rank,
                                      unsigned degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
    detail::validate_jet_input(gens, rank);
    return detail::jet_level(gens, rank, degree_bound).dim;
}

struct JetStabilized {
    bool stabilized = false; // false signals INDETERMINATE (likely infinite dimension)
    std::uint64_t value = 0;
    unsigned degree = 0;     // level at which stabilization was certified
};

/// Oracle protocol: raise the truncation degree until two consecutive values
/// agree and every degree-d module monomial reduces into lower degrees; the
/// common value is then the true quotient dimension (Nakayama over the local
/// ring). Non-stabilization up to max_degree is reported, not an error.
inline JetStabilized jet_quotient_dim_stabilized(const std::vector<ModVector>& gens,
                                                 std::size_t rank, unsigned max_degree = 24) {
    detail::validate_jet_input(gens, rank);
    std::uint64_t prev = detail::jet_level(gens, rank, 0).dim;
    for (unsigned d = 1; d <= max_degree; ++d) {
        detail::JetLevel lv = detail::jet_level(gens, rank, d);
        if (lv.dim == prev && lv.top_full) return {true, lv.dim, d};
        prev = lv.dim;
    }
    return {false, prev, max_degree};
}

/// Ideal convenience (rank 1).
inline JetStabilized jet_ideal_dim_stabilized(const std::vector<Poly>& gens,
                                              unsigned max_degree = 24) {
    std::vector<ModVector> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(ModVector::from_poly(g));
    return jet_quotient_dim_stabilized(v, 1, max_degree);
}

} // namespace singcheck
