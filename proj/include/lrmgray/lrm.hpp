#pragma once

// (s,t,n) local rank-modulation demodulation: sliding windows of size t at
// multiples of s over n cyclic readings. The binary (1,2,n) case maps the
// permutation [1,2] to bit 1 and [2,1] to bit 0.

#include <cstdint>
#include <span>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct Permutation {
  /// f(1..t) in one-line notation.
  std::vector<int> one_line;

  int size() const noexcept { return static_cast<int>(one_line.size()); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

class LrmParams {
 public:
  /// Throws Error(Domain) unless 1 <= s <= t <= n and s | n.
  LrmParams(int s, int t, int n);

  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }
  int n() const noexcept { return n_; }

 private:
  int s_, t_, n_;
};

/// f(i) = 1 + position of the i-th largest entry. Throws
/// Error(IllDefinedPermutation) on repeated values.
Permutation induced_permutation(std::span<const double> window);

/// (f_{c_{0,t}}, f_{c_{s,t}}, ..., f_{c_{n-s,t}}), windows wrapping mod n.
std::vector<Permutation> demodulate(std::span<const double> readings, const LrmParams& params);

/// Bit p is 1 iff c_p > c_{p+1 mod n}. Throws Error(IllDefinedPermutation)
/// when two cyclically adjacent readings are equal.
Word word_from_charges(std::span<const double> readings);
Word word_from_charges(std::span<const std::int64_t> levels);

/// The (1,2,n) scheme realizes every word except 0^n and 1^n.
bool is_realizable_word(const Word& v);

}  // namespace lrmgray
