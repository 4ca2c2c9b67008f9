#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Raised when an input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by inverse maps when a value lies outside the image of the forward map.
class NotInImage : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when an internal postcondition fails. Always a library defect.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

} // namespace strata
