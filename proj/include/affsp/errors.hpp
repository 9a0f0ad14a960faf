#pragma once

#include <stdexcept>
#include <string>

namespace affsp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define AFFSP_ERROR(Name)                    \
  struct Name : Error {                      \
    explicit Name(const std::string& what)   \
        : Error(std::string(#Name ": ") + what) {} \
  }

AFFSP_ERROR(DivisionInexact);
AFFSP_ERROR(VariableSetMismatch);
AFFSP_ERROR(TruncationMismatch);
AFFSP_ERROR(NotGrassmannian);
AFFSP_ERROR(ConstantTermNotOne);
AFFSP_ERROR(HypothesisFailed);
AFFSP_ERROR(CutoffTooSmall);
AFFSP_ERROR(NoSolution);
AFFSP_ERROR(NonUnique);
AFFSP_ERROR(InexactSymmetrization);
AFFSP_ERROR(ParseError);
AFFSP_ERROR(InvalidArgument);

#undef AFFSP_ERROR

}  // namespace affsp
