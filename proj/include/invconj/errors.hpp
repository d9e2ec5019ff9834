#ifndef INVCONJ_ERRORS_HPP_
#define INVCONJ_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace invconj {

// Failure with a stable machine-readable code ("GroundMismatch",
// "NotInIdeal", ...) next to the human-readable message. The CLI maps the
// code into its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        message_(std::move(message)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

}  // namespace invconj

#endif  // INVCONJ_ERRORS_HPP_
