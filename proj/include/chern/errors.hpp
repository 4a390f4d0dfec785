#pragma once

#include <stdexcept>
#include <string>

namespace chern {

/// A caller-supplied value violates an operation's precondition.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed (exact division with
/// remainder, non-polynomial Hirzebruch coefficient, ...). Always a bug.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace chern
