#pragma once

#include <stdexcept>
#include <string>

namespace qrsid {

enum class ErrorKind {
    DivisionByZero,
    NonUnitLeadingTerm,
    GridOverflow,
    BeyondCap,
    DivergentProduct,
    DivergentFactor,
    NonTerminating,
    PoleInLowerParameter,
    WindowOverflow,
    NonRationalExponent,
    UnknownIdentity,
    ParseError,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
        case ErrorKind::GridOverflow: return "GridOverflow";
        case ErrorKind::BeyondCap: return "BeyondCap";
        case ErrorKind::DivergentProduct: return "DivergentProduct";
        case ErrorKind::DivergentFactor: return "DivergentFactor";
        case ErrorKind::NonTerminating: return "NonTerminating";
        case ErrorKind::PoleInLowerParameter: return "PoleInLowerParameter";
        case ErrorKind::WindowOverflow: return "WindowOverflow";
        case ErrorKind::NonRationalExponent: return "NonRationalExponent";
        case ErrorKind::UnknownIdentity: return "UnknownIdentity";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace qrsid
