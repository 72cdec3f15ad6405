#pragma once

// Exhaustive search over the constant-weight transition digraph and an
// independent re-check of codes from the raw tau definition.

#include <cstdint>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct SearchOptions {
  bool cyclic = true;
  /// Node expansions before the search gives up (exhausted = false).
  std::uint64_t budget = 50'000'000;
  int workers = 1;
  /// Bound subtrees by per-color availability: a cyclic code of length nq
  /// holds exactly q words of every color.
  bool color_pruning = true;
  /// Only start from necklace representatives.
  bool quotient_rotations = true;
  /// When every color class has the same size, first decide whether a cycle
  /// through all words exists (on at most half the budget).
  bool hamiltonian_phase = true;
};

struct SearchResult {
  int n = 0;
  int w = 0;
  bool cyclic = false;
  std::int64_t best_length = 0;
  GrayCode witness;
  bool exhausted = false;
  std::uint64_t expansions = 0;
};

/// Longest simple path (or cycle) of constant-weight tau moves in S(n, w).
/// Ties go to the lexicographically least word sequence, so the witness does
/// not depend on the worker count once the search is exhausted.
/// Error(Domain) unless 1 <= w <= n-1 and n <= 64; Error(Resource) when
/// C(n, w) > 10^6.
SearchResult longest_code(int n, int w, const SearchOptions& options = {});

struct SingleTrackSearchResult {
  int n = 0;
  int w = 0;
  /// Longest base list G' of distinct full-period necklace representatives
  /// whose seam E^shift(G'[0]) = tau_j(G'[last]) has gcd(shift, n) = 1.
  std::int64_t best_base_length = 0;
  int shift = 0;
  std::vector<Word> base;
  std::int64_t full_period_necklaces = 0;
  bool exhausted = false;
  std::uint64_t expansions = 0;

  /// n * best_base_length.
  std::int64_t code_size() const noexcept { return n * best_base_length; }
};

SingleTrackSearchResult single_track_search(int n, int w, std::uint64_t budget = 50'000'000);

/// Re-checks a code using only string operations and the displayed tau
/// definition: ambient space, distinctness, adjacency (any j), cyclic closure
/// when code.cyclic, constant weight and +1 color steps when code.w is set,
/// and the single-track matrix when requested.
ValidationReport reverify(const GrayCode& code, bool expect_single_track = false);

}  // namespace lrmgray
