#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singcheck {

/// Ordered coordinate names of the ambient germ (x_0, ..., x_n).
struct VarContext {
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

/// Validates names: nonempty list, identifier grammar, pairwise distinct.
inline ContextPtr make_context(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("variable list must be nonempty");
    for (const auto& n : names)
        if (!valid_identifier(n))
            throw std::invalid_argument("invalid variable name: '" + n + "'");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate variable name: '" + names[i] + "'");
    return std::make_shared<VarContext>(VarContext{std::move(names)});
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->names == b->names);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw std::invalid_argument("variable context mismatch");
}

} // namespace singcheck
