#pragma once

// Typed failures raised by the algebra modules. Every error that describes a
// violated law carries the concrete witness (element pair, triple, vector)
// that exposed it.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kernatom {

using Witness = std::vector<std::pair<std::string, std::string>>;

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message, Witness witness = {})
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)),
          witness_(std::move(witness)) {}

    const std::string& kind() const noexcept { return kind_; }
    const Witness& witness() const noexcept { return witness_; }

private:
    std::string kind_;
    Witness witness_;
};

// Raised when a configured size limit would be exceeded. The CLI maps these
// to a dedicated exit status.
class CapError : public Error {
public:
    using Error::Error;
};

#define KERNATOM_DEFINE_ERROR(Name, Base)                                     \
    class Name : public Base {                                                \
    public:                                                                   \
        explicit Name(const std::string& message, Witness witness = {})      \
            : Base(#Name, message, std::move(witness)) {}                     \
    };

KERNATOM_DEFINE_ERROR(NotAGroup, Error)
KERNATOM_DEFINE_ERROR(NotAPermutation, Error)
KERNATOM_DEFINE_ERROR(IndexOutOfRange, Error)
KERNATOM_DEFINE_ERROR(NotASubgroup, Error)
KERNATOM_DEFINE_ERROR(UnknownCatalogEntry, Error)
KERNATOM_DEFINE_ERROR(NotAHomomorphism, Error)
KERNATOM_DEFINE_ERROR(NotNormal, Error)
KERNATOM_DEFINE_ERROR(WitnessCheckFailed, Error)
KERNATOM_DEFINE_ERROR(NotABijection, Error)
KERNATOM_DEFINE_ERROR(NotAnAction, Error)
KERNATOM_DEFINE_ERROR(WrongBackend, Error)
KERNATOM_DEFINE_ERROR(PointOutOfRange, Error)
KERNATOM_DEFINE_ERROR(DimensionMismatch, Error)
KERNATOM_DEFINE_ERROR(FieldMismatch, Error)
KERNATOM_DEFINE_ERROR(NotPrime, Error)
KERNATOM_DEFINE_ERROR(DivisionByZero, Error)
KERNATOM_DEFINE_ERROR(NotASolutionSet, Error)
KERNATOM_DEFINE_ERROR(Unvalidated, Error)
KERNATOM_DEFINE_ERROR(SampledAxioms, Error)
KERNATOM_DEFINE_ERROR(InternalCheckFailed, Error)
KERNATOM_DEFINE_ERROR(SpecError, Error)

KERNATOM_DEFINE_ERROR(OrderCapExceeded, CapError)
KERNATOM_DEFINE_ERROR(ValidationCapExceeded, CapError)
KERNATOM_DEFINE_ERROR(EnumerationCapExceeded, CapError)

#undef KERNATOM_DEFINE_ERROR

}  // namespace kernatom
