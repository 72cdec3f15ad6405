#pragma once

// Weight-2 codes. For odd n a weight-2 word is indexed by (row k, column l):
// ones at l and l+k with 1 <= k <= (n-1)/2.

#include <compare>
#include <cstdint>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct RowCol {
  int k;    // row, 1 <= k <= (n-1)/2
  int col;  // column in Z_n

  friend auto operator<=>(const RowCol&, const RowCol&) = default;
};

/// Throws Error(Domain) for even n or k outside [1, (n-1)/2].
Word rowcol_to_word(RowCol rc, int n);
/// Throws Error(Domain) when weight(v) != 2 or n is even.
RowCol word_to_rowcol(const Word& v);

/// Out-neighbors in the weight-2 transition graph, odd n >= 5.
std::vector<RowCol> graph_neighbors(RowCol rc, int n);

/// The row-pair walk starting at (1, 0): exhausts rows 2t-1 and 2t by
/// alternating between them, then walks the last row in strides of
/// (n+1)/2 when the number of rows is odd. Covers all of S(n, 2) for odd
/// n >= 3; closes cyclically only for n = 3 and n = 5.
GrayCode build_weight2(int n);

struct BoundReport {
  int n;
  std::int64_t min_uncovered;    // (n-3)(n-5)/8
  std::int64_t max_cyclic_size;  // C(n,2) - min_uncovered
  Rational efficiency_bound;     // max_cyclic_size / C(n,2)
};

/// Upper bound on the size of any cyclic weight-2 code, odd n >= 7.
BoundReport cyclic_weight2_bound(int n);

}  // namespace lrmgray
