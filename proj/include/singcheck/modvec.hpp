#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace singcheck {

/// A term of a free-module element: coefficient * x^mon * e_comp.
struct ModTerm {
    Monomial mon;
    std::size_t comp;
    Rational coef;
};

/// Term-over-position order on module monomials: compare monomial parts in
/// the local order, break ties by smaller component index first. When
/// `dominant_component` is set, terms in that component outrank every other
/// component; this is the elimination order used for syzygy extraction.
struct ModuleOrder {
    std::optional<std::size_t> dominant_component;

    int cmp(const Monomial& ma, std::size_t ca, const Monomial& mb, std::size_t cb) const {
        if (dominant_component) {
            bool da = ca == *dominant_component;
            bool db = cb == *dominant_component;
            if (da != db) return da ? 1 : -1;
        }
        int c = local_cmp(ma, mb);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }

    bool greater(const Monomial& ma, std::size_t ca, const Monomial& mb, std::size_t cb) const {
        return cmp(ma, ca, mb, cb) > 0;
    }
};

/// Element of a free module O^r; entry i is the coefficient of the i-th
/// basis vector. All entries share one variable context.
class ModVector {
public:
    explicit ModVector(std::vector<Poly> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("module vector needs rank >= 1");
        for (std::size_t i = 1; i < entries_.size(); ++i)
            require_same_context(entries_[0].context(), entries_[i].context());
    }

    static ModVector zero(const ContextPtr& ctx, std::size_t rank) {
        return ModVector(std::vector<Poly>(rank, Poly::zero(ctx)));
    }

    static ModVector unit(const ContextPtr& ctx, std::size_t rank, std::size_t comp) {
        ModVector v = zero(ctx, rank);
        v.entries_[comp] = Poly::constant(ctx, Rational(1));
        return v;
    }

    /// Embeds a polynomial as a rank-1 vector.
    static ModVector from_poly(Poly p) {
        std::vector<Poly> e;
        e.push_back(std::move(p));
        return ModVector(std::move(e));
    }

    std::size_t rank() const { return entries_.size(); }
    const ContextPtr& context() const { return entries_[0].context(); }
    const std::vector<Poly>& entries() const { return entries_; }
    const Poly& operator[](std::size_t i) const { return entries_[i]; }

    bool is_zero() const {
        for (const auto& p : entries_)
            if (!p.is_zero()) return false;
        return true;
    }

    std::optional<ModTerm> leading_term(const ModuleOrder& ord) const {
        std::optional<ModTerm> best;
        for (std::size_t c = 0; c < entries_.size(); ++c) {
            if (entries_[c].is_zero()) continue;
            const Term& lt = entries_[c].leading_term();
            if (!best || ord.greater(lt.mon, c, best->mon, best->comp))
                best = ModTerm{lt.mon, c, lt.coef};
        }
        return best;
    }

    std::uint32_t max_degree() const {
        bool any = false;
        std::uint32_t d = 0;
        for (const auto& p : entries_) {
            if (p.is_zero()) continue;
            d = any ? std::max(d, p.max_degree()) : p.max_degree();
            any = true;
        }
        if (!any) throw std::domain_error("degree of the zero vector");
        return d;
    }

    ModVector scaled(const Rational& c) const {
        std::vector<Poly> out;
        out.reserve(entries_.size());
        for (const auto& p : entries_) out.push_back(p.scaled(c));
        return ModVector(std::move(out));
    }

    ModVector shifted(const Monomial& m) const {
        std::vector<Poly> out;
        out.reserve(entries_.size());
        for (const auto& p : entries_) out.push_back(p.shifted(m));
        return ModVector(std::move(out));
    }

    /// a - c * x^m * b componentwise.
    static ModVector sub_scaled(const ModVector& a, const Rational& c, const Monomial& m,
                                const ModVector& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("module rank mismatch");
        std::vector<Poly> out;
        out.reserve(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i)
            out.push_back(Poly::sub_scaled(a.entries_[i], c, m, b.entries_[i]));
        return ModVector(std::move(out));
    }

    friend ModVector operator+(const ModVector& a, const ModVector& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("module rank mismatch");
        std::vector<Poly> out;
        out.reserve(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(a.entries_[i] + b.entries_[i]);
        return ModVector(std::move(out));
    }

    friend ModVector operator-(const ModVector& a, const ModVector& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("module rank mismatch");
        std::vector<Poly> out;
        out.reserve(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(a.entries_[i] - b.entries_[i]);
        return ModVector(std::move(out));
    }

    friend bool operator==(const ModVector& a, const ModVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ModVector& a, const ModVector& b) { return !(a == b); }

private:
    std::vector<Poly> entries_;
};

/// Deterministic total order on module vectors for canonical sorting:
/// compare entries componentwise with poly_cmp.
inline int modvec_cmp(const ModVector& a, const ModVector& b) {
    for (std::size_t i = 0; i < a.rank() && i < b.rank(); ++i) {
        int c = poly_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
    return 0;
}

} // namespace singcheck
