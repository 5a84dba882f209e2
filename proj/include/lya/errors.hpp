#pragma once

#include <stdexcept>
#include <string>

namespace lya {

// Every library error carries a short machine-readable kind ("DimMismatch",
// "PreconditionFailed", ...) next to the human message.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

inline void require(bool cond, const char* kind, const std::string& what) {
  if (!cond) throw error(kind, what);
}

}  // namespace lya
