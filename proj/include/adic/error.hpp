#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adic {

/// Error with a stable machine-readable kind ("depth", "parse", ...) in
/// front of the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace adic
