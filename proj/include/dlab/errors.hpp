#ifndef DLAB_ERRORS_HPP
#define DLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlab {

/// Root of every exception the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied malformed or out-of-range arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// A representation limit (label width, enumeration budget) would be exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An exact identity or contract did not hold.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// The library detected an inconsistent internal state (e.g. a non-integral
/// wordlength count out of the dual transform). Never recoverable.
class InternalFault : public Error {
public:
    using Error::Error;
};

}  // namespace dlab

#endif  // DLAB_ERRORS_HPP
