#pragma once

#include <stdexcept>
#include <string>

namespace gpade {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A certificate that must hold by construction failed; indicates an arithmetic bug.
class InternalError : public Error {
public:
    using Error::Error;
};

// The hypotheses of the irrationality-measure statement are not met and no override was given.
class HypothesisError : public Error {
public:
    using Error::Error;
};

} // namespace gpade
