#pragma once
#include <stdexcept>
#include <string>

namespace orientifold {

// Library-wide error with a machine-readable code. The CLI maps codes to
// process exit status.
struct Error : std::runtime_error {
  enum class Code {
    NotAGroup,
    EpsNotHomomorphism,
    EpsTrivial,
    InfiniteCarrier,
    DimensionMismatch,
    NotComplexified,
    NotGrade1,
    SampleNotRepresentable,
    UnsupportedDimension,
    DomainMismatch,
    NonAbelianCoefficient,
    DenominatorBoundExceeded,
    UnliftableValue,
    CoverMismatch,
    BudgetExceeded,
    NotPositiveDefinite,
    IncompatibleFibers,
    ReducedModelHasNoRightAction,
    TooLarge,
    ParseError,
    SchemaError,
    Internal,
  };

  Error(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
  Code code;
};

[[noreturn]] inline void fail(Error::Code c, const std::string& what) {
  throw Error(c, what);
}

inline void require(bool ok, Error::Code c, const std::string& what) {
  if (!ok) throw Error(c, what);
}

}  // namespace orientifold
