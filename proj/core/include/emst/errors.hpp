#pragma once

#include <stdexcept>
#include <string>

namespace emst {

// Base class for every error thrown by the library. Subsystems derive
// typed errors from this so callers can catch per-category or catch-all.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input/file problems (bad magic, corrupt blob, missing file).
class InputError : public Error {
public:
    using Error::Error;
};

// A precondition stated by an operation's contract was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace emst
