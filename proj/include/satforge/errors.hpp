#pragma once

#include <stdexcept>

namespace satforge {

/// An operation was called on a graph outside its stated domain
/// (for example a non-saturated graph handed to a saturated-only check).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The T_2 edge bookkeeping identity failed on a saturated input.
class BookkeepingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace satforge
