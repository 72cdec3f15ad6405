#include "lrmgray/error.hpp"

namespace lrmgray {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AmbientSpace: return "ambient-space";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::IllDefinedPermutation: return "ill-defined-permutation";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InvalidMove: return "invalid-move";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Seam: return "seam";
    case ErrorKind::InvalidPush: return "invalid-push";
    case ErrorKind::TraversalIntegrity: return "traversal-integrity";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace lrmgray
