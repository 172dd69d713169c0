#pragma once

#include <stdexcept>
#include <string>

namespace henselize {

/// Raised when an input violates an operation's precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. For valid inputs this cannot happen;
/// seeing one means the implementation is wrong.
class hard_fault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace henselize
