#pragma once

// Integer charge levels for n cells read through the (1,2,n) scheme, and the
// local push-to-the-top operation c'_j = max(c_{j-1}, c_{j+1}) + 1.

#include <cstdint>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct ChargeState {
  int n = 0;
  std::vector<std::int64_t> levels;

  /// Demodulated word; Error(IllDefinedPermutation) on equal neighbors.
  Word word() const;
  /// Cyclic adjacent differences c_{j+1} - c_j, j = 0..n-1.
  std::vector<std::int64_t> differences() const;
};

/// Levels with c_0 = 0, +1 after each 0-bit and a descent of floor or ceil
/// of (n-w)/w after each 1-bit; the (n-w) mod w ceiling descents go to the
/// lowest-indexed ones. When 2w > n the complement-reverse word is realized
/// and mapped back by c_p <- c'_{-p}. Error(Domain) if weight(v) != w or v is
/// not in S(n).
ChargeState realize(const Word& v, int w);

/// Push `cell` above its two neighbors. Error(InvalidPush) unless bit
/// (cell-1) is 1 and bit cell is 0 in the demodulated word.
ChargeState push_cell(const ChargeState& state, int cell);

/// tau_j is realized by pushing cell j+1.
ChargeState step_tau(const ChargeState& state, int j);

/// ceil(n / min(w, n-w)).
std::int64_t jump_bound(int n, int w);

struct TraversalStats {
  std::int64_t steps = 0;
  std::int64_t max_jump = 0;
  std::int64_t max_level = 0;
  std::int64_t jump_bound = 0;
  bool diff_multiset_preserved = true;
};

/// Runs `laps` full cycles of a cyclic constant-weight code from
/// realize(words[0]), checking after every push that the demodulated word is
/// the expected codeword and that the two rearranged differences form the
/// same multiset. Error(TraversalIntegrity) on any mismatch, Error(Domain)
/// for non-cyclic or non-constant-weight codes or laps < 1.
TraversalStats traverse(const GrayCode& code, int laps);

}  // namespace lrmgray
