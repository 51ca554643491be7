#pragma once

#include <stdexcept>

namespace chordcut {

/// An enumeration or search exceeded its configured size or work limit.
/// Distinct from invalid input and from mathematical failure.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chordcut
