#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnull {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QNULL_DEFINE_ERROR(Name)                   \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what_arg)     \
        : Error(std::string(#Name ": ") + what_arg) {} \
  };

QNULL_DEFINE_ERROR(DivisionByZero)
QNULL_DEFINE_ERROR(NonInvertible)
QNULL_DEFINE_ERROR(ArityMismatch)
QNULL_DEFINE_ERROR(NotCentral)
QNULL_DEFINE_ERROR(AllReal)
QNULL_DEFINE_ERROR(ZeroPivot)
QNULL_DEFINE_ERROR(IncommensurableRadii)
QNULL_DEFINE_ERROR(ZeroBlock)
QNULL_DEFINE_ERROR(NotABlowUp)
QNULL_DEFINE_ERROR(EmptyIdeal)
QNULL_DEFINE_ERROR(PreconditionFailed)
QNULL_DEFINE_ERROR(ZeroElement)
QNULL_DEFINE_ERROR(PoleAtPi)
QNULL_DEFINE_ERROR(BadOrder)
QNULL_DEFINE_ERROR(ZeroConstant)
QNULL_DEFINE_ERROR(ArityError)
QNULL_DEFINE_ERROR(Unsupported)

#undef QNULL_DEFINE_ERROR

/// Parse failure carrying the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("SyntaxError at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace qnull
