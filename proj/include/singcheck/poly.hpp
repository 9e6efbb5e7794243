#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace singcheck {

struct Term {
    Monomial mon;
    Rational coef;
};

/// Sparse polynomial over Q. Terms are kept sorted descending in the local
/// order (leading term first, so the leading term has minimal total degree)
/// and never carry a zero coefficient.
class Poly {
public:
    static Poly zero(ContextPtr ctx) { return Poly(std::move(ctx), {}); }

    static Poly constant(ContextPtr ctx, Rational c) {
        std::vector<Term> ts;
        if (sgn(c) != 0) ts.push_back({mon_one(ctx->nvars()), std::move(c)});
        return Poly(std::move(ctx), std::move(ts));
    }

    static Poly variable(ContextPtr ctx, std::size_t i) {
        if (i >= ctx->nvars()) throw std::out_of_range("variable index out of range");
        std::vector<Term> ts{{mon_var(ctx->nvars(), i), Rational(1)}};
        return Poly(std::move(ctx), std::move(ts));
    }

    static Poly term(ContextPtr ctx, Monomial m, Rational c) {
        if (m.exps.size() != ctx->nvars()) throw std::invalid_argument("monomial length mismatch");
        std::vector<Term> ts;
        if (sgn(c) != 0) ts.push_back({std::move(m), std::move(c)});
        return Poly(std::move(ctx), std::move(ts));
    }

    /// Normalizing constructor: merges duplicate monomials, drops zeros, sorts.
    static Poly from_terms(ContextPtr ctx, const std::vector<Term>& terms) {
        std::map<Monomial, Rational, MonOrderGreater> acc;
        for (const auto& t : terms) {
            if (t.mon.exps.size() != ctx->nvars())
                throw std::invalid_argument("monomial length mismatch");
            auto [it, fresh] = acc.emplace(t.mon, t.coef);
            if (!fresh) it->second += t.coef;
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (sgn(c) != 0) out.push_back({m, c});
        return Poly(std::move(ctx), std::move(out));
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nvars() const { return ctx_->nvars(); }
    bool is_zero() const { return terms_.empty(); }

    /// Greatest term in the local order; a term of minimal total degree.
    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.front();
    }

    std::uint32_t lead_degree() const { return leading_term().mon.degree; }

    // Terms sorted descending in the order means ascending in total degree,
    // so the maximal degree sits at the back.
    std::uint32_t max_degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        return terms_.back().mon.degree;
    }

    /// Coefficient of the constant monomial, i.e. the value at the origin.
    /// The constant monomial is the greatest in the local order, so it can
    /// only sit at the front.
    Rational constant_coefficient() const {
        if (!terms_.empty() && terms_.front().mon.degree == 0) return terms_.front().coef;
        return Rational(0);
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& t : p.terms_) t.coef = -t.coef;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_context(a.ctx_, b.ctx_);
        std::map<Monomial, Rational, MonOrderGreater> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = mon_mul(ta.mon, tb.mon);
                auto [it, fresh] = acc.emplace(std::move(m), ta.coef * tb.coef);
                if (!fresh) it->second += ta.coef * tb.coef;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (sgn(c) != 0) out.push_back({m, c});
        return Poly(a.ctx_, std::move(out));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// this scaled by c (c == 0 gives the zero polynomial).
    Poly scaled(const Rational& c) const {
        if (sgn(c) == 0) return Poly(ctx_, {});
        Poly p = *this;
        for (auto& t : p.terms_) t.coef *= c;
        return p;
    }

    /// this multiplied by the monomial m; keeps the term order.
    Poly shifted(const Monomial& m) const {
        Poly p = *this;
        for (auto& t : p.terms_) t.mon = mon_mul(t.mon, m);
        return p;
    }

    /// a - c * x^m * b, the reduction workhorse.
    static Poly sub_scaled(const Poly& a, const Rational& c, const Monomial& m, const Poly& b) {
        require_same_context(a.ctx_, b.ctx_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.push_back(a.terms_[i++]);
                continue;
            }
            Monomial bm = mon_mul(b.terms_[j].mon, m);
            if (i == a.terms_.size()) {
                Rational nc = -c * b.terms_[j].coef;
                if (sgn(nc) != 0) out.push_back({std::move(bm), std::move(nc)});
                ++j;
                continue;
            }
            int cmp = local_cmp(a.terms_[i].mon, bm);
            if (cmp > 0) {
                out.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                Rational nc = -c * b.terms_[j].coef;
                if (sgn(nc) != 0) out.push_back({std::move(bm), std::move(nc)});
                ++j;
            } else {
                Rational nc = a.terms_[i].coef - c * b.terms_[j].coef;
                if (sgn(nc) != 0) out.push_back({std::move(bm), std::move(nc)});
                ++i;
                ++j;
            }
        }
        return Poly(a.ctx_, std::move(out));
    }

    /// Formal partial derivative with respect to variable i.
    Poly partial(std::size_t i) const {
        if (i >= nvars()) throw std::out_of_range("variable index out of range");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.mon.exps[i] == 0) continue;
            Term d = t;
            d.coef *= static_cast<long>(d.mon.exps[i]);
            d.mon.exps[i] -= 1;
            d.mon.degree -= 1;
            out.push_back(std::move(d));
        }
        // dropping degree 1 uniformly in one variable preserves the order
        return Poly(ctx_, std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_context(a.ctx_, b.ctx_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coef;
            bool neg = sgn(c) < 0;
            if (neg) c = -c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string ms = mon_string(t.mon);
            if (ms.empty()) {
                out += c.get_str();
            } else {
                if (c != 1) {
                    out += c.get_str();
                    out += "*";
                }
                out += ms;
            }
            first = false;
        }
        return out;
    }

private:
    Poly(ContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
        if (!ctx_) throw std::invalid_argument("null variable context");
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        require_same_context(a.ctx_, b.ctx_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size())
                cmp = -1;
            else if (j == b.terms_.size())
                cmp = 1;
            else
                cmp = local_cmp(a.terms_[i].mon, b.terms_[j].mon);
            if (cmp > 0) {
                out.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                Term t = b.terms_[j++];
                if (subtract) t.coef = -t.coef;
                out.push_back(std::move(t));
            } else {
                Rational c = a.terms_[i].coef;
                if (subtract)
                    c -= b.terms_[j].coef;
                else
                    c += b.terms_[j].coef;
                if (sgn(c) != 0) out.push_back({a.terms_[i].mon, std::move(c)});
                ++i;
                ++j;
            }
        }
        return Poly(a.ctx_, std::move(out));
    }

    std::string mon_string(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ctx_->names[i];
            if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
        }
        return out;
    }

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

/// Deterministic total order on polynomials (termwise: monomial in the local
/// order, then coefficient). Used only for canonical sorting.
inline int poly_cmp(const Poly& a, const Poly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = local_cmp(ta[i].mon, tb[i].mon);
        if (c != 0) return c;
        int cc = cmp(ta[i].coef, tb[i].coef);
        if (cc != 0) return cc;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    return 0;
}

} // namespace singcheck
