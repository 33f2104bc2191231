#pragma once

#include <stdexcept>
#include <string>

namespace posetinv {

// Domain errors map to exit code 2, format errors to exit code 3.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
    virtual bool is_format() const noexcept { return false; }

private:
    std::string code_;
};

class format_error : public error {
public:
    explicit format_error(const std::string& what) : error("FormatError", what) {}
    bool is_format() const noexcept override { return true; }
};

#define POSETINV_DOMAIN_ERROR(name)                                        \
    class name : public error {                                            \
    public:                                                                \
        explicit name(const std::string& what) : error(#name, what) {}     \
    };

POSETINV_DOMAIN_ERROR(CycleError)
POSETINV_DOMAIN_ERROR(UnknownElement)
POSETINV_DOMAIN_ERROR(EmptySubset)
POSETINV_DOMAIN_ERROR(ShapeMismatch)
POSETINV_DOMAIN_ERROR(CommutativityViolation)
POSETINV_DOMAIN_ERROR(NotAnInterval)
POSETINV_DOMAIN_ERROR(OrderViolation)
POSETINV_DOMAIN_ERROR(NotConnected)
POSETINV_DOMAIN_ERROR(PosetMismatch)
POSETINV_DOMAIN_ERROR(UnknownCatalog)
POSETINV_DOMAIN_ERROR(CatalogError)
POSETINV_DOMAIN_ERROR(NegativeMultiplicity)
POSETINV_DOMAIN_ERROR(NotBrick)
POSETINV_DOMAIN_ERROR(DuplicateModule)
POSETINV_DOMAIN_ERROR(NoSolution)
POSETINV_DOMAIN_ERROR(NotExact)
POSETINV_DOMAIN_ERROR(NotNatural)
POSETINV_DOMAIN_ERROR(CoverageError)
POSETINV_DOMAIN_ERROR(ChainLengthError)
POSETINV_DOMAIN_ERROR(TriangularityError)
POSETINV_DOMAIN_ERROR(NotInSpan)
POSETINV_DOMAIN_ERROR(InternalError)

#undef POSETINV_DOMAIN_ERROR

}  // namespace posetinv
