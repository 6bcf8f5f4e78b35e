#pragma once

#include <stdexcept>
#include <string>

namespace stcores {

// s and t share a factor, so the gap poset / core machinery is undefined.
struct NotCoprimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value that must be a gap of the numerical semigroup is representable.
struct NotAGapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration was requested whose exact ideal count exceeds the cap.
struct CapExceededError : std::runtime_error {
    CapExceededError(std::string expected, std::string cap_value)
        : std::runtime_error("ideal count " + expected + " exceeds cap " + cap_value),
          expected_count(std::move(expected)),
          cap(std::move(cap_value)) {}
    std::string expected_count;  // exact count, decimal
    std::string cap;
};

// exact_div was asked to divide a by b with b not dividing a (or b = 0).
struct DivisibilityError : std::domain_error {
    using std::domain_error::domain_error;
};

// A partition handed to the inverse bijection is not an (s,t)-core.
struct NotACoreError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The first-column hook set of a verified core failed the ideal check.
// This cannot happen for true cores; it guards transcription bugs.
struct BijectionInternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Rank weights only exist on the staircase posets (t = s+1).
struct UnrankedPosetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace stcores
