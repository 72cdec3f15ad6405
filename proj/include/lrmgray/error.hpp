#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrmgray {

enum class ErrorKind {
  AmbientSpace,           // result left S(n): all-zero or all-one word
  NotFound,               // word not in code
  IllDefinedPermutation,  // equal readings inside a window
  Resource,               // enumeration size cap exceeded
  Domain,                 // argument outside an operation's domain
  InvalidMove,            // configuration move leaves the canonical region
  Precondition,           // construction hypothesis does not hold
  Seam,                   // lift seam mismatch
  InvalidPush,            // push would not realize a constant-weight move
  TraversalIntegrity,     // charge simulation diverged from the code
  Parse,                  // malformed code file or word string
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lrmgray
