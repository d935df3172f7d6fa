#pragma once

#include <stdexcept>
#include <string>

namespace polyomino {

// Failure raised by any toolkit operation. code() is a short stable tag
// ("empty", "disconnected", "non-contiguous", ...) that callers and tests
// match on; what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace polyomino
