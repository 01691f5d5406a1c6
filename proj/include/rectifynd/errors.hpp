#pragma once

#include <stdexcept>
#include <string>

namespace rectifynd {

/// Base for all numerical and contract failures. Carries a stable short name
/// so callers (notably the CLI) can map failures without string matching.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct CenterMismatch : Error {
    explicit CenterMismatch(const std::string& w) : Error("CenterMismatch", w) {}
};

struct DivisionNearZero : Error {
    explicit DivisionNearZero(const std::string& w) : Error("DivisionNearZero", w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("DomainError", w) {}
};

struct OrderTooLow : Error {
    explicit OrderTooLow(const std::string& w) : Error("OrderTooLow", w) {}
};

/// Gram-Schmidt residual collapsed at frame vector index+1, i.e. curvature
/// kappa_{index} is numerically zero there.
struct ResidualBelowTolerance : Error {
    ResidualBelowTolerance(int index, const std::string& w)
        : Error("ResidualBelowTolerance", w), index(index) {}
    int index;
};

struct DegenerateGeometry : Error {
    explicit DegenerateGeometry(const std::string& w) : Error("DegenerateGeometry", w) {}
};

struct StepTooLarge : Error {
    explicit StepTooLarge(const std::string& w) : Error("StepTooLarge", w) {}
};

/// Malformed job/spec input (CLI exit 64).
struct SchemaError : Error {
    explicit SchemaError(const std::string& w) : Error("SchemaError", w) {}
};

} // namespace rectifynd
