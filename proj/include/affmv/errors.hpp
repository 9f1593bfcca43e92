// Named error conditions raised by the library. Each carries a stable
// symbolic name so the CLI can report it and tests can match on it.
#pragma once

#include <stdexcept>
#include <string>

namespace affmv {

struct Error : std::runtime_error {
    std::string name;
    Error(std::string n, const std::string& what)
        : std::runtime_error(n + ": " + what), name(std::move(n)) {}
};

#define AFFMV_DEFINE_ERROR(E)                                   \
    struct E : Error {                                          \
        explicit E(const std::string& what) : Error(#E, what) {} \
    }

AFFMV_DEFINE_ERROR(NotInTitsConeInterior);
AFFMV_DEFINE_ERROR(NotDominant);
AFFMV_DEFINE_ERROR(NonIntegralLevel);
AFFMV_DEFINE_ERROR(DepthExceeded);
AFFMV_DEFINE_ERROR(CutoffTooSmall);
AFFMV_DEFINE_ERROR(NonReducedWord);
AFFMV_DEFINE_ERROR(StabilizationCapExceeded);
AFFMV_DEFINE_ERROR(CoefficientMismatch);
AFFMV_DEFINE_ERROR(ClosureViolation);
AFFMV_DEFINE_ERROR(DiagonalNotActive);
AFFMV_DEFINE_ERROR(BoundTooSmall);
AFFMV_DEFINE_ERROR(CompletionNotFound);
AFFMV_DEFINE_ERROR(CompletionNotUnique);
AFFMV_DEFINE_ERROR(ReductionFailed);
AFFMV_DEFINE_ERROR(NoMatch);
AFFMV_DEFINE_ERROR(MultipleMatches);
AFFMV_DEFINE_ERROR(HypothesisNotMet);
AFFMV_DEFINE_ERROR(DeltaTopAmbiguous);
AFFMV_DEFINE_ERROR(ParseError);

#undef AFFMV_DEFINE_ERROR

}  // namespace affmv
