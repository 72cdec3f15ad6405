#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lrmgray/error.hpp"
#include "lrmgray/words.hpp"

namespace lrmgray::testing {

inline Word W(const char* bits) { return Word::from_string(bits); }

/// Every word of length n with exactly w ones, in lexicographic order.
inline std::vector<Word> all_words(int n, int w) {
  std::vector<Word> out;
  std::string s(static_cast<std::size_t>(n - w), '0');
  s += std::string(static_cast<std::size_t>(w), '1');
  do {
    out.push_back(Word::from_string(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// Every word of S(n): neither all-zero nor all-one.
inline std::vector<Word> all_ambient_words(int n) {
  std::vector<Word> out;
  for (int w = 1; w < n; ++w) {
    auto part = all_words(n, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline bool throws_kind(const std::function<void()>& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

/// The ten rows of the optimal cyclic n=5, w=2 code, in order.
inline std::vector<Word> table_one() {
  std::vector<Word> out;
  for (const char* s : {"11000", "10100", "01100", "01010", "00110", "00101", "00011", "10010", "10001", "01001"}) {
    out.push_back(W(s));
  }
  return out;
}

}  // namespace lrmgray::testing
