#pragma once

#include <stdexcept>
#include <string>

namespace nsimon {

// Base of every library exception. Failure *signals* from randomized solvers
// (exhausted retries, iteration caps) are returned as empty results instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand lengths / widths disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Matrix rank does not admit the requested nullspace.
class RankError : public Error {
public:
    using Error::Error;
};

// Input is the degenerate zero object where a nonzero one is required.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Problem exceeds a hard size limit (qubits, bits, vertices).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Qubits that must interact are not connected in the topology.
class RoutingError : public Error {
public:
    using Error::Error;
};

// KL divergence is infinite.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Operation needs at least one observation.
class EmptyError : public Error {
public:
    using Error::Error;
};

// Parameter outside its admissible interval.
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed input file or text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nsimon
