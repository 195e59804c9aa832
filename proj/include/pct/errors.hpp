#pragma once

#include <stdexcept>
#include <string>

namespace pct {

enum class BuildErrorKind {
    OverlappingRegions,
    CoverageGap,
    AdjacentSameColor,
    NonSimplePolygon,
    DependentLattice,
    BadOwnership,
    BadInput,
};

inline const char* to_string(BuildErrorKind k) {
    switch (k) {
        case BuildErrorKind::OverlappingRegions: return "OverlappingRegions";
        case BuildErrorKind::CoverageGap: return "CoverageGap";
        case BuildErrorKind::AdjacentSameColor: return "AdjacentSameColor";
        case BuildErrorKind::NonSimplePolygon: return "NonSimplePolygon";
        case BuildErrorKind::DependentLattice: return "DependentLattice";
        case BuildErrorKind::BadOwnership: return "BadOwnership";
        case BuildErrorKind::BadInput: return "BadInput";
    }
    return "?";
}

struct BuildError : std::runtime_error {
    BuildErrorKind kind;
    BuildError(BuildErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

struct UnknownVertexError : std::runtime_error {
    explicit UnknownVertexError(const std::string& msg)
        : std::runtime_error("UnknownVertex: " + msg) {}
};

// Interval refinement exhausted its budget without an exact tie confirmation.
struct UndecidedOrderingError : std::runtime_error {
    explicit UndecidedOrderingError(const std::string& msg)
        : std::runtime_error("UndecidedOrdering: " + msg) {}
};

struct DegreeNot4Error : std::runtime_error {
    explicit DegreeNot4Error(const std::string& msg) : std::runtime_error("DegreeNot4: " + msg) {}
};

struct ZeroDirectionError : std::runtime_error {
    ZeroDirectionError() : std::runtime_error("ZeroDirection: direction must be nonzero") {}
};

struct NotTriangleTilingError : std::runtime_error {
    explicit NotTriangleTilingError(const std::string& msg)
        : std::runtime_error("NotTriangleTiling: " + msg) {}
};

struct HypothesesViolatedError : std::runtime_error {
    std::string flag;
    explicit HypothesesViolatedError(const std::string& which)
        : std::runtime_error("HypothesesViolated: " + which), flag(which) {}
};

struct PatchTooSmallError : std::runtime_error {
    explicit PatchTooSmallError(const std::string& msg)
        : std::runtime_error("PatchTooSmall: " + msg) {}
};

struct SelfLoopError : std::runtime_error {
    explicit SelfLoopError(const std::string& msg) : std::runtime_error("SelfLoopPresent: " + msg) {}
};

struct CellsNotComparableError : std::runtime_error {
    explicit CellsNotComparableError(const std::string& msg)
        : std::runtime_error("CellsNotComparable: " + msg) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace pct
