#pragma once

#include <stdexcept>
#include <string>

namespace permod {

// Malformed or inconsistent input (bad rational, ring mismatch, arity mismatch, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its precondition (e.g. asking for a dual
// functional on a member).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A produced certificate or construction failed its independent re-check.
// This signals a defect, never a mathematical outcome.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace permod
