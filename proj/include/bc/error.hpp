#pragma once

#include <stdexcept>
#include <string>

namespace bc {

// Base for every error raised by the library. The CLI maps the subclasses to
// exit codes (schema 2, cap 3, precondition 4).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

}  // namespace bc
