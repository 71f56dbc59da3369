#pragma once

#include <stdexcept>
#include <string>

namespace soergel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad type names, unknown generator labels, words
/// that do not name an element of the requested coset set, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A bond label with no integral realization in rank >= 3.
class UnsupportedBond : public Error {
public:
    using Error::Error;
};

/// The group is infinite or larger than the enumeration cap.
class GroupTooLarge : public Error {
public:
    using Error::Error;
};

/// Exact division of Laurent polynomials left a remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// A Hecke algebra element is not a left multiple of the parabolic generator.
class NotInIdeal : public Error {
public:
    using Error::Error;
};

} // namespace soergel
