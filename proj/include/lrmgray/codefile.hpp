#pragma once

// Code files: a text form with '#' key=value header lines followed by one
// codeword per line, and an equivalent JSON form.

#include <optional>
#include <string>
#include <string_view>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct CodeFile {
  GrayCode code;
  bool single_track = false;
  std::string construction;
  /// Weight stated in the header, if any; may disagree with the body.
  std::optional<int> declared_w;
};

/// Header fields are filled from the code itself (w, size, efficiency).
CodeFile make_code_file(GrayCode code, std::string construction);

std::string to_text(const CodeFile& file);
std::string to_json(const CodeFile& file);

/// Accepts either format (JSON when the first non-blank character is '{').
/// Error(Parse) on malformed input or a body that disagrees with n.
CodeFile parse_code_file(std::string_view text);

}  // namespace lrmgray
