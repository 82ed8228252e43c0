#pragma once

#include <stdexcept>
#include <string>

namespace torickit {

/// Every failure raised by the toolkit carries a short machine-readable code
/// (for example "ZeroVector" or "NotSimplicial") plus a human-readable detail.
class ToricError : public std::runtime_error {
public:
  ToricError(std::string code, const std::string &detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace torickit
