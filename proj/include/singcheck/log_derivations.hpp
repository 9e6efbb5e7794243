#pragma once

#include <stdexcept>
#include <vector>

#include "std_basis.hpp"

namespace singcheck {

/// A vector field X = sum coefficients_i d/dx_i tangent to V away from the
/// origin, together with the cofactor c of the defining identity
/// X(g) = c * g (held exactly, coefficient by coefficient).
struct LogDerivation {
    ModVector coefficients;
    Poly cofactor;
};

/// Generating set of the relation module {a : sum a_i h_i = 0} over the
/// local ring. Computed from a standard basis of the graph module
/// {(a, sum a_i h_i)} under the module order in which the image component
/// dominates; relations are the basis elements whose image entry vanishes.
inline std::vector<ModVector> syzygy_module(const std::vector<Poly>& h) {
    if (h.empty()) throw std::invalid_argument("empty generator list");
    const ContextPtr& ctx = h[0].context();
    for (const auto& p : h) require_same_context(ctx, p.context());
    const std::size_t k = h.size();

    std::vector<ModVector> graph;
    graph.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Poly> entries;
        entries.reserve(k + 1);
        for (std::size_t j = 0; j < k; ++j)
            entries.push_back(j == i ? Poly::constant(ctx, Rational(1)) : Poly::zero(ctx));
        entries.push_back(h[i]);
        graph.push_back(ModVector(std::move(entries)));
    }

    ModuleOrder elim;
    elim.dominant_component = k;
    StdBasis sb = std_basis(graph, k + 1, elim);

    std::vector<ModVector> out;
    for (const auto& g : sb.generators) {
        if (!g[k].is_zero()) continue;
        std::vector<Poly> entries(g.entries().begin(), g.entries().begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(ModVector(std::move(entries)));
    }
    return out;
}

/// Generating set of the module of logarithmic vector fields of V = g^{-1}(0):
/// the syzygies of (dg/dx_0, ..., dg/dx_n, g) projected to their derivation
/// part, with the negated last component as cofactor.
inline std::vector<LogDerivation> theta_V(const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("g must be nonzero");
    if (sgn(g.constant_coefficient()) != 0)
        throw std::invalid_argument("g has nonzero constant term (not a germ through the origin)");
    const ContextPtr& ctx = g.context();
    const std::size_t n1 = ctx->nvars();

    std::vector<Poly> h;
    h.reserve(n1 + 1);
    for (std::size_t i = 0; i < n1; ++i) h.push_back(g.partial(i));
    h.push_back(g);

    std::vector<LogDerivation> out;
    for (const auto& s : syzygy_module(h)) {
        std::vector<Poly> coeffs(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(n1));
        out.push_back(LogDerivation{ModVector(std::move(coeffs)), -s[n1]});
    }
    return out;
}

/// Generators of J_f(V), the ideal of derivatives of f along logarithmic
/// vector fields; a finite generating set of Theta(V) suffices because the
/// derivative is O-linear in the field.
inline std::vector<Poly> jf_V(const Poly& f, const Poly& g) {
    require_same_context(f.context(), g.context());
    const std::size_t n1 = f.nvars();
    std::vector<Poly> df;
    df.reserve(n1);
    for (std::size_t i = 0; i < n1; ++i) df.push_back(f.partial(i));

    std::vector<Poly> out;
    for (const auto& d : theta_V(g)) {
        Poly p = Poly::zero(f.context());
        for (std::size_t i = 0; i < n1; ++i) p += d.coefficients[i] * df[i];
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace singcheck
