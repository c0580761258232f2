#pragma once

#include <stdexcept>
#include <string>

namespace ineqforge {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Family parameter outside its validity range.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// A grid sample of a function spec was not a strictly positive finite value.
class NonPositiveError : public Error {
public:
    using Error::Error;
};

// Evaluation point outside the declared domain (beyond 1e-12 tolerance).
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

// Integrand returned a non-finite value.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

// Quadrature exceeded its evaluation budget before converging.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Interval constraint violated (empty interval, nonpositive endpoint where
// a positive one is required).
class DomainError : public Error {
public:
    using Error::Error;
};

// Config text is not well-formed; carries the parser's position info.
class ParseError : public Error {
public:
    using Error::Error;
};

// Config is well-formed but names an unknown family/theorem or carries an
// out-of-range value; `field()` names the offending key.
class ValidationError : public Error {
public:
    ValidationError(const std::string& field, const std::string& msg)
        : Error(msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// emit_report called with nothing to emit.
class EmptyReportError : public Error {
public:
    using Error::Error;
};

// Report file or config file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ineqforge
