#pragma once

#include <stdexcept>
#include <string>

namespace indexcode {

enum class Errc {
  Parse,
  Validation,
  Trivial,   // no arcs after preprocessing; the optimal length is zero
  Range,
  ScaleGuard,
  Argument,
  Io,
  Internal,
};

// Single exception type for the core library. The C layer maps `code()`
// straight onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace indexcode
