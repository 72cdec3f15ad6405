#pragma once

// Weight-3 single-track codes.
//
// A weight-3 word with ones at i0 < i1 < i2 has configuration
// (i1 - i0, i2 - i1, i0 - i2) mod n: the three cyclic gaps. Rotating the
// gap triple corresponds to relabelling which 1 is "first"; for full-period
// words exactly one rotation is canonical (d1 <= floor(n/3) < d2), giving
// one canonical configuration per necklace. A closed serpentine walk over
// canonical configurations is realized as words (one per necklace) and
// lifted by cyclic shifts into a cyclic single-track code of size n * N'(n).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

struct Configuration {
  int d0;
  int d1;
  int d2;

  int sum() const noexcept { return d0 + d1 + d2; }
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Each move pushes one of the three ones a single step to the right.
enum class MoveKind {
  A,  // push the second 1:  (d0+1, d1-1, d2)
  B,  // push the third 1:   (d0, d1+1, d2-1)
  C,  // push the first 1:   (d0-1, d1, d2+1)
};

char to_char(MoveKind m) noexcept;

/// Gap triple measured from the smallest-index 1. Error(Domain) unless
/// weight(v) == 3.
Configuration configuration(const Word& v);

/// d1 <= floor(n/3) < d2 with every gap >= 1 and the gaps summing to n.
bool is_canonical(const Configuration& c, int n) noexcept;

/// The unique canonical rotation of c, or nullopt for (n/3, n/3, n/3).
std::optional<Configuration> canonical_rotation(const Configuration& c, int n);

/// Canonical configuration of a full-period weight-3 word. Error(Domain) for
/// the (n/3, n/3, n/3) shape.
Configuration canonicalize(const Word& v);

/// Position of the 1 that starts the canonical gap triple, i.e. the ones of
/// v sit at anchor, anchor + d0, anchor + d0 + d1.
int canonical_anchor(const Word& v);

/// Raw displaced triple; may leave the canonical region.
Configuration displace(const Configuration& c, MoveKind m) noexcept;

/// tau index realizing m on v (A: anchor + d0, B: anchor + d0 + d1,
/// C: anchor) together with the resulting word. Error(InvalidMove) when the
/// target has a zero gap or is not canonical.
Word apply_move(const Word& v, MoveKind m);
int move_transition(const Word& v, MoveKind m);

struct ConfigPath {
  int n = 0;
  std::vector<Configuration> steps;
  /// moves[i] takes steps[i] to steps[i+1]; the last move closes the path
  /// back to steps[0] when closed is set.
  std::vector<MoveKind> moves;
  bool closed = false;
};

/// Closed serpentine over canonical configurations, n >= 9. Starts at
/// (1, 1, n-2), climbs the d0 = 1 row to d1 = 3*floor(floor(n/3)/3), then
/// zigzags down column pairs d1 = 3j-1, 3j, returns up column 3j-2 and moves
/// into the next pair, closing from (2, 1, n-3).
ConfigPath serpentine_path(int n);

/// Closed-form length of serpentine_path(n), selected by n mod 9.
std::int64_t serpentine_length(int n);

struct RealizedPath {
  std::vector<Word> words;
  /// transitions[i] moves words[i] -> words[i+1]; the last entry is the
  /// closing step from words.back() to closing_word.
  std::vector<int> transitions;
  Word closing_word;
  /// Pushes received by the first/second/third 1 of the seed, in seed order.
  std::array<std::int64_t, 3> push_counts{};
  /// r with closing_word == E^r(words.front()), or -1 when none exists.
  int shift = -1;
};

/// Seed defaults to 1110^{n-3}. Error(Domain) when the seed's canonical
/// configuration is not (1, 1, n-2).
RealizedPath realize_path(int n);
RealizedPath realize_path(int n, const Word& seed);

/// G', E^s G', E^{2s} G', ..., E^{(n-1)s} G'. Error(Precondition) when
/// gcd(s, n) != 1, base words repeat a necklace or are not full period, or
/// consecutive base words are not tau-adjacent. Error(Seam) when
/// E^s(base.front()) is not a tau image of base.back().
GrayCode lift_single_track(std::span<const Word> base, int shift);

/// Cyclic single-track weight-3 code of size n * N'(n).
/// Error(Domain) for n < 9; Error(Precondition) naming the gcd otherwise.
GrayCode build_weight3(int n);

/// gcd(n, N'(n)/3) == 1, n >= 9.
bool is_admissible(int n);

/// The sufficient residue class n falls in, e.g. "7, 11 (mod 18)".
std::optional<std::string> admissible_residue_class(int n);

/// Rank/unrank for a lifted code without materializing it: a word is located
/// by its necklace (base index) and the rotation separating it from the base
/// word (copy index).
class SingleTrackIndex {
 public:
  SingleTrackIndex(std::vector<Word> base, int shift);

  std::size_t size() const noexcept { return base_.size() * static_cast<std::size_t>(n_); }
  std::size_t rank(const Word& v) const;
  Word unrank(std::size_t i) const;
  Word next_word(const Word& v) const;

 private:
  int n_;
  int shift_;
  int shift_inverse_;
  std::vector<Word> base_;
  std::unordered_map<Word, std::size_t, WordHash> necklace_;
};

}  // namespace lrmgray
