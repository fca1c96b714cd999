#pragma once

#include <stdexcept>
#include <string>

namespace akb {

// Domain errors carry a stable name so the CLI can echo it verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Requested bead is not on the abacus.
struct BeadAbsent : DomainError {
    explicit BeadAbsent(const std::string& what) : DomainError("BeadAbsent", what) {}
};

// Target position already holds a bead.
struct PositionOccupied : DomainError {
    explicit PositionOccupied(const std::string& what) : DomainError("PositionOccupied", what) {}
};

// Two configurations cannot be compared: their charge vectors differ.
struct ChargeMismatch : DomainError {
    explicit ChargeMismatch(const std::string& what) : DomainError("ChargeMismatch", what) {}
};

// An enumeration would exceed the configured candidate bound.
struct ExplosionGuard : DomainError {
    explicit ExplosionGuard(const std::string& what) : DomainError("ExplosionGuard", what) {}
};

// Operation requires a core block.
struct NotACoreBlock : DomainError {
    explicit NotACoreBlock(const std::string& what) : DomainError("NotACoreBlock", what) {}
};

// Block is neither core nor Rouquier, so the normalization pipeline does not apply.
struct NotEligible : DomainError {
    explicit NotEligible(const std::string& what) : DomainError("NotEligible", what) {}
};

} // namespace akb
