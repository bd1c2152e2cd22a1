#pragma once

#include <stdexcept>
#include <string>

namespace howe {

/// Bad textual input (partition or symbol grammar).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A two-row array that is not a valid unitary symbol (overlapping rows,
/// mixed parities within a row, illegal defect, or non-canonical entries).
struct MalformedSymbol : std::runtime_error {
    explicit MalformedSymbol(const std::string& what) : std::runtime_error(what) {}
};

/// Defect value outside the shape admitted for unitary symbols.
struct InvalidDefect : std::runtime_error {
    explicit InvalidDefect(const std::string& what) : std::runtime_error(what) {}
};

/// Linear-order comparison across two different sectors.
struct DifferentSectors : std::logic_error {
    explicit DifferentSectors(const std::string& what) : std::logic_error(what) {}
};

/// The stratum maps are only defined in the tau >= 0 direction.
struct TauNegative : std::logic_error {
    explicit TauNegative(const std::string& what) : std::logic_error(what) {}
};

struct KOutOfRange : std::out_of_range {
    explicit KOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// The paired sector does not exist for the requested target rank.
struct NoTargetSector : std::runtime_error {
    explicit NoTargetSector(const std::string& what) : std::runtime_error(what) {}
};

/// A candidate pair handed to the maximality check is not a correspondence
/// pair and no injectivity obstruction applies to it.
struct CandidateNotInTheta : std::runtime_error {
    explicit CandidateNotInTheta(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency assertion fails (these conditions are
/// theorems about the combinatorics; hitting one means a bug, so the message
/// carries enough context to debug).
struct VerificationFailure : std::logic_error {
    explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace howe
