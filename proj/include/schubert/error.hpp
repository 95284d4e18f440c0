#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// A mathematical invariant failed to hold. This always indicates a bug in the
// library (or a false identity), never bad user input.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

// An enumeration exceeded the configured budget (see enumeration_budget()).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace schubert
