#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace singcheck {

/// Exponent vector with cached total degree.
struct Monomial {
    std::vector<std::uint32_t> exps;
    std::uint32_t degree = 0;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mon_one(std::size_t nvars) {
    return Monomial{std::vector<std::uint32_t>(nvars, 0), 0};
}

inline Monomial mon_from_exps(std::vector<std::uint32_t> exps) {
    std::uint32_t d = std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
    return Monomial{std::move(exps), d};
}

inline Monomial mon_var(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
    Monomial m = mon_one(nvars);
    m.exps[i] = e;
    m.degree = e;
    return m;
}

inline bool mon_divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
    m.degree += b.degree;
    return m;
}

/// b / a; caller guarantees divisibility.
inline Monomial mon_quotient(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= a.exps[i];
    m.degree -= a.degree;
    return m;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.degree = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        m.exps[i] = std::max(a.exps[i], b.exps[i]);
        m.degree += m.exps[i];
    }
    return m;
}

/// True when the only variable with nonzero exponent is `var` (the constant
/// monomial qualifies for every variable).
inline bool mon_is_pure_power(const Monomial& m, std::size_t var) {
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (i != var && m.exps[i] != 0) return false;
    return true;
}

// The one monomial order of the engine: negative-degree reverse
// lexicographic. Lower total degree wins; on equal degree the last nonzero
// entry of the exponent difference decides (negative entry means greater).
// 1 is the greatest monomial, so leading terms have minimal degree.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int local_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree ? 1 : -1;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
}

inline bool local_greater(const Monomial& a, const Monomial& b) { return local_cmp(a, b) > 0; }

/// Comparator for containers that should iterate leading-monomial first.
struct MonOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return local_cmp(a, b) > 0; }
};

} // namespace singcheck
