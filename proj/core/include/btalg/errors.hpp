#ifndef BTALG_ERRORS_HPP
#define BTALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace btalg {

// Base for all library errors. `name()` is the stable identifier used by
// the CLI when reporting precondition violations.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define BTALG_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what = #Name)            \
        : Error(#Name, what) {}                               \
  }

BTALG_DEFINE_ERROR(DivisionByZeroPoly);
BTALG_DEFINE_ERROR(BothZero);
BTALG_DEFINE_ERROR(NotCoprime);
BTALG_DEFINE_ERROR(NotMonic);
BTALG_DEFINE_ERROR(ShapeMismatch);
BTALG_DEFINE_ERROR(OrderOutOfRange);
BTALG_DEFINE_ERROR(InvalidPermutation);
BTALG_DEFINE_ERROR(InvalidSpec);
BTALG_DEFINE_ERROR(ModulusMismatch);
BTALG_DEFINE_ERROR(Inconsistent);
BTALG_DEFINE_ERROR(NotClosed);
BTALG_DEFINE_ERROR(OffsetGcdMismatch);
BTALG_DEFINE_ERROR(NoGenericElement);
BTALG_DEFINE_ERROR(XiInconsistent);
BTALG_DEFINE_ERROR(NotMaximalInput);
BTALG_DEFINE_ERROR(UnknownSuite);
BTALG_DEFINE_ERROR(InvalidParameters);
BTALG_DEFINE_ERROR(MalformedInput);

#undef BTALG_DEFINE_ERROR

}  // namespace btalg

#endif  // BTALG_ERRORS_HPP
