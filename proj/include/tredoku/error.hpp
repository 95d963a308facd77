// Error type shared by all modules: a runtime_error carrying a coarse category
// so callers and tests can distinguish bad input from violated preconditions.
#pragma once

#include <stdexcept>
#include <string>

namespace tredoku {

enum class Errc {
  InvalidArgument,     // malformed parameter (out of range, unknown enum, ...)
  InvalidPattern,      // tile list is not a pattern (duplicate/overlapping tiles, empty)
  InvalidDocument,     // JSON document malformed or violates the schema
  PreconditionFailed,  // operation called on a value outside its stated domain
  GeometryBlocked,     // a construction step has no room on the lattice
  BudgetExceeded,      // node/time budget exhausted before completion
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tredoku
