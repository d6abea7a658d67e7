#ifndef TRISEQ_ERRORS_HPP
#define TRISEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triseq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input lies outside the domain of a map (e.g. Gauss map on (0,1]).
struct OutOfDomain : Error {
    using Error::Error;
};

// Point violates 1 >= x >= y > 0.
struct OutOfTriangle : Error {
    using Error::Error;
};

// hat / Farey sum requested on a vector whose lead component vanishes.
struct ZeroLeadComponent : Error {
    using Error::Error;
};

// Two supposedly-identical computation routes disagreed: a bug, not bad input.
struct ConsistencyFailure : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// A digit in the requested product range is zero.
struct ZeroDigit : Error {
    using Error::Error;
};

// Constructive search exhausted its budget.
struct NotFound : Error {
    using Error::Error;
};

// Point sits exactly on a separating plane where no convention applies.
struct Degenerate : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Concatenated prefix yielded a degenerate partition triangle.
struct EmptyCell : Error {
    using Error::Error;
};

}  // namespace triseq

#endif
