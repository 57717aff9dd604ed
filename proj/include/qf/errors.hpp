#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Base class for all recoverable errors raised on bad input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroScalar : Error {
    ZeroScalar() : Error("scalar must be nonzero") {}
    explicit ZeroScalar(const std::string& msg) : Error(msg) {}
};

struct InvalidPrime : Error {
    explicit InvalidPrime(const std::string& msg) : Error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& msg) : Error(msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg) : Error(msg) {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("gram matrix is not symmetric") {}
};

struct UnknownExtension : Error {
    explicit UnknownExtension(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct MalformedLine : Error {
    explicit MalformedLine(const std::string& msg) : Error(msg) {}
};

struct NonIntegralInput : Error {
    explicit NonIntegralInput(const std::string& msg) : Error(msg) {}
};

struct NegativeDimension : Error {
    explicit NegativeDimension(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Violation of a library invariant: a bug, not a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qf
