#ifndef UNNLAB_ERRORS_HPP
#define UNNLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unnlab {

// Base class for all domain errors raised by this library. The CLI maps
// these to exit status 1; usage problems are reported separately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: node out of range, bad parameter, parse failure.
class InputError : public Error {
public:
    using Error::Error;
};

// A quantity that is mathematically undefined for the given input
// (e.g. the Cheeger constant of a graph with fewer than two nodes).
class UndefinedError : public Error {
public:
    using Error::Error;
};

// Exhaustive computation refused because the instance exceeds the
// configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// Normalized Laplacian requested for a graph with an isolated node,
// where D^{-1/2} does not exist.
class DegenerateDegreeError : public Error {
public:
    using Error::Error;
};

// A construction's structural precondition does not hold
// (e.g. break_unn on an adjacent node pair).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace unnlab

#endif
