#pragma once

#include <stdexcept>
#include <string>

namespace cclab {

/// Thrown when a request exceeds a configured ceiling or violates a
/// precondition that makes the computation infeasible or meaningless.
/// Callers (notably the CLI) treat this as "could not check", distinct
/// from "checked and false".
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cclab
