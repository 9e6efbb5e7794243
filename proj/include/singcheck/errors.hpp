#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singcheck {

/// Input fails one of the finiteness/germ hypotheses the pipeline needs.
/// `failed` names the failing tests; `flags` holds the full precondition
/// report when one was computed before the refusal.
struct PreconditionError : std::runtime_error {
    std::vector<std::string> failed;
    std::vector<std::pair<std::string, bool>> flags;

    PreconditionError(const std::string& what, std::vector<std::string> failed_tests,
                      std::vector<std::pair<std::string, bool>> all_flags = {})
        : std::runtime_error(what), failed(std::move(failed_tests)), flags(std::move(all_flags)) {}
};

/// Two independent computation paths that must agree did not. This is an
/// engine bug, never a property of the input.
struct InternalCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace singcheck
