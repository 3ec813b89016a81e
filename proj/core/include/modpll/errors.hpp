#ifndef MODPLL_ERRORS_HPP
#define MODPLL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modpll {

// Broad failure classes; the CLI maps these onto its exit-code contract
// (2 invalid input, 3 unsupported case, 4 precision/indistinguishability).
enum class ErrorKind {
  InvalidInput,
  Unsupported,
  Precision,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define MODPLL_DEFINE_ERROR(Name, Kind)                          \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what)                       \
        : Error(ErrorKind::Kind, std::string(#Name ": ") + what) {} \
  }

// algebra kernel
MODPLL_DEFINE_ERROR(ZeroInversion, InvalidInput);
MODPLL_DEFINE_ERROR(InexactDivision, Precision);
MODPLL_DEFINE_ERROR(NonUnitBase, InvalidInput);
MODPLL_DEFINE_ERROR(UncertifiedRead, Precision);

// characters
MODPLL_DEFINE_ERROR(TorsionViolation, InvalidInput);
MODPLL_DEFINE_ERROR(NotResiduallyTrivial, InvalidInput);
MODPLL_DEFINE_ERROR(Indistinguishable, Precision);
MODPLL_DEFINE_ERROR(GroupMismatch, InvalidInput);

// lattice lab
MODPLL_DEFINE_ERROR(PrecisionBudgetExceeded, Precision);
MODPLL_DEFINE_ERROR(NotStable, InvalidInput);
MODPLL_DEFINE_ERROR(SplitReduction, InvalidInput);

// ext spaces
MODPLL_DEFINE_ERROR(ZeroClass, InvalidInput);
MODPLL_DEFINE_ERROR(NotCenterTrivial, InvalidInput);

// correspondence
MODPLL_DEFINE_ERROR(UnsupportedCase, Unsupported);
MODPLL_DEFINE_ERROR(SearchSpaceTooLarge, InvalidInput);
MODPLL_DEFINE_ERROR(InsufficientEvidence, Precision);

// cli
MODPLL_DEFINE_ERROR(ParseError, InvalidInput);

#undef MODPLL_DEFINE_ERROR

}  // namespace modpll

#endif  // MODPLL_ERRORS_HPP
