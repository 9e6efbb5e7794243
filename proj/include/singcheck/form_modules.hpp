#pragma once

#include <vector>

#include "errors.hpp"
#include "log_derivations.hpp"
#include "std_basis.hpp"

namespace singcheck {

// n-forms are written in the contraction basis w_i = (-1)^i dx_0 ^ ... ^
// (omit dx_i) ^ ... ^ dx_n, i.e. the contraction of the volume form by
// d/dx_i. The sign convention makes dh ^ (sum a_i w_i) equal to
// (sum a_i dh/dx_i) times the volume form, exactly.

enum class FormTag { omega_n_vstar, omega_n_v, wedge_df };

struct FormSubmodule {
    std::vector<ModVector> generators; // rank n+1, in the contraction basis
    FormTag tag;
};

/// Coefficient of the volume form in dh ^ a, for a = sum a_i w_i. This is
/// the testable content of the sign convention.
inline Poly dh_wedge(const Poly& h, const ModVector& a) {
    require_same_context(h.context(), a.context());
    Poly out = Poly::zero(h.context());
    for (std::size_t i = 0; i < a.rank(); ++i) out += a[i] * h.partial(i);
    return out;
}

/// Generators of the image of dh ^ . on (n-1)-forms inside Omega^n:
/// dh/dx_i * w_j - dh/dx_j * w_i for i < j. Any consistent sign choice
/// generates the same submodule.
inline std::vector<ModVector> koszul_wedge_generators(const Poly& h) {
    if (h.is_zero()) throw std::invalid_argument("h must be nonzero");
    const ContextPtr& ctx = h.context();
    const std::size_t n1 = ctx->nvars();
    std::vector<Poly> dh;
    dh.reserve(n1);
    for (std::size_t i = 0; i < n1; ++i) dh.push_back(h.partial(i));

    std::vector<ModVector> out;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            std::vector<Poly> entries;
            entries.reserve(n1);
            for (std::size_t k = 0; k < n1; ++k) {
                if (k == i)
                    entries.push_back(-dh[j]);
                else if (k == j)
                    entries.push_back(dh[i]);
                else
                    entries.push_back(Poly::zero(ctx));
            }
            ModVector v(std::move(entries));
            if (!v.is_zero()) out.push_back(std::move(v));
        }
    return out;
}

/// Omega^n(V) = dg ^ Omega^{n-1} + g Omega^n, the n-forms vanishing
/// identically along V.
inline FormSubmodule omega_n_V(const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("g must be nonzero");
    if (sgn(g.constant_coefficient()) != 0)
        throw std::invalid_argument("g has nonzero constant term (not a germ through the origin)");
    FormSubmodule out{koszul_wedge_generators(g), FormTag::omega_n_v};
    const std::size_t n1 = g.nvars();
    for (std::size_t k = 0; k < n1; ++k) {
        std::vector<Poly> entries;
        entries.reserve(n1);
        for (std::size_t j = 0; j < n1; ++j)
            entries.push_back(j == k ? g : Poly::zero(g.context()));
        out.generators.push_back(ModVector(std::move(entries)));
    }
    return out;
}

/// Omega^n(V*) = {a : dg ^ a is a multiple of g}, realized through the
/// contraction identification with Theta(V): the derivation parts of the
/// logarithmic fields, read in the w-basis.
inline FormSubmodule omega_n_Vstar(const Poly& g) {
    FormSubmodule out{{}, FormTag::omega_n_vstar};
    for (auto& d : theta_V(g)) out.generators.push_back(std::move(d.coefficients));
    return out;
}

namespace detail {

inline std::uint64_t finite_module_dim(const std::vector<ModVector>& gens, std::size_t rank,
                                       const char* which) {
    DimResult dim = quotient_dim(std_basis(gens, rank));
    if (!dim.finite)
        throw PreconditionError(std::string(which) + " is infinite dimensional",
                                {std::string(which) + "_finite"});
    return dim.value;
}

} // namespace detail

/// mu_G(f_V) = dim Omega^n / (df ^ Omega^{n-1} + dg ^ Omega^{n-1} + g Omega^n).
inline std::uint64_t mu_G(const Poly& f, const Poly& g) {
    require_same_context(f.context(), g.context());
    std::vector<ModVector> gens = koszul_wedge_generators(f);
    for (auto& v : omega_n_V(g).generators) gens.push_back(std::move(v));
    return detail::finite_module_dim(gens, f.nvars(), "mu_G");
}

/// mu_BR(f_V) = dim Omega^n / (df ^ Omega^{n-1} + Omega^n(V*)).
inline std::uint64_t mu_BR_rel(const Poly& f, const Poly& g) {
    require_same_context(f.context(), g.context());
    std::vector<ModVector> gens = koszul_wedge_generators(f);
    for (auto& v : omega_n_Vstar(g).generators) gens.push_back(std::move(v));
    return detail::finite_module_dim(gens, f.nvars(), "mu_BR_rel");
}

} // namespace singcheck
