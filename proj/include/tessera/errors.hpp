#pragma once

#include <stdexcept>
#include <string>

namespace tessera {

// Base class for every error this library raises on purpose. Callers that
// want blanket "bad input / failed precondition" handling catch this one.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TESSERA_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

// Graph construction.
TESSERA_DEFINE_ERROR(InconsistentRotation);
TESSERA_DEFINE_ERROR(SelfLoop);
TESSERA_DEFINE_ERROR(ParallelEdge);
TESSERA_DEFINE_ERROR(NonPlanar);
TESSERA_DEFINE_ERROR(EmptyDual);

// Subgraph analysis preconditions.
TESSERA_DEFINE_ERROR(UnsafeSubgraph);
TESSERA_DEFINE_ERROR(UnsafeVertex);
TESSERA_DEFINE_ERROR(NotAdjacent);
TESSERA_DEFINE_ERROR(WalkHostMismatch);

// Generators.
TESSERA_DEFINE_ERROR(DegreeTooSmall);
TESSERA_DEFINE_ERROR(InfeasibleSpec);

// Isoperimetry / extremal machinery.
TESSERA_DEFINE_ERROR(SphericalParameters);
TESSERA_DEFINE_ERROR(RegionTooSmall);
TESSERA_DEFINE_ERROR(DegreeAuditFailed);
TESSERA_DEFINE_ERROR(UnsupportedQ);
TESSERA_DEFINE_ERROR(HypothesisViolation);
TESSERA_DEFINE_ERROR(ParabolicParameters);
TESSERA_DEFINE_ERROR(NotTriangulation);

// Exact arithmetic.
TESSERA_DEFINE_ERROR(RationalOverflow);

// File / JSON interchange problems.
TESSERA_DEFINE_ERROR(ParseError);

#undef TESSERA_DEFINE_ERROR

}  // namespace tessera
