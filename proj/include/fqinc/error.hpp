#ifndef FQINC_ERROR_HPP_
#define FQINC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fqinc {

enum class ErrorCode {
  invalid_argument,
  context_mismatch,
  budget_exceeded,
  parse_error,
  io_error,
  duplicate,
};

// Every failure raised by the core library. The C API maps `code()` onto
// its status enum one to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fqinc

#endif  // FQINC_ERROR_HPP_
