#pragma once

// Binary words over the index ring Z_n, the push transition, cyclic shifts
// and Gray-code bookkeeping.
//
// Textual convention: index 0 is the leftmost character, so "11000" has
// v_0 = v_1 = 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrmgray/numeric.hpp"

namespace lrmgray {

class Word {
 public:
  /// Throws Error(Domain) when bits has fewer than two entries or an entry
  /// other than 0/1.
  explicit Word(std::vector<std::uint8_t> bits);

  static Word from_string(std::string_view text);
  static Word from_positions(int n, std::span<const int> ones);
  static Word zeros(int n);

  int size() const noexcept { return static_cast<int>(bits_.size()); }

  /// Bit at position i taken modulo n.
  int bit(std::int64_t i) const noexcept {
    return bits_[static_cast<std::size_t>(mod(i, size()))];
  }

  int weight() const noexcept;
  std::vector<int> ones() const;

  /// True iff the word lies in S(n), i.e. is neither 0^n nor 1^n.
  bool in_ambient_space() const noexcept;

  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  Word with_bit(std::int64_t i, int value) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// tau_j: overwrite the window (j, j+1) with "01". Throws
/// Error(AmbientSpace) when v or the result is not in S(n).
Word apply_tau(const Word& v, int j);

/// True iff the window (v_j, v_{j+1}) reads "10".
bool is_constant_weight_window(const Word& v, int j);

struct Successor {
  int j;
  Word word;

  friend bool operator==(const Successor&, const Successor&) = default;
};

/// All (j, tau_j(v)) whose window at j is "10", in increasing j.
std::vector<Successor> constant_weight_successors(const Word& v);

/// The unique j with tau_j(from) == to and from != to, if any.
std::optional<int> find_transition(const Word& from, const Word& to);

/// E^m: bit k of the result is bit (k - m) mod n of v.
Word cyclic_shift(const Word& v, std::int64_t m);

/// Smallest positive i with E^i v = v.
int period(const Word& v);
bool is_full_period(const Word& v);

/// Lexicographically smallest rotation.
Word necklace_canonical_rep(const Word& v);

struct GrayCode {
  int n = 0;
  std::optional<int> w;
  std::vector<Word> words;
  /// transitions[i] moves words[i] to words[i+1]; when cyclic the last entry
  /// closes words[N-1] -> words[0]. -1 marks a pair with no tau relation.
  std::vector<int> transitions;
  bool cyclic = false;

  std::size_t size() const noexcept { return words.size(); }

  /// Builds a code from its word list, deriving transitions and the weight
  /// (when all words share one). Never throws on non-adjacent pairs; those
  /// are reported by validate_code.
  static GrayCode from_words(std::vector<Word> words, bool cyclic);
};

struct ValidationFailure {
  std::size_t position;
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
  std::vector<std::string> checked_properties;

  void fail(std::size_t position, std::string reason);
};

ValidationReport validate_code(const GrayCode& code,
                               bool expect_constant_weight,
                               bool expect_cyclic);

/// N / C(n, w). Throws Error(Domain) for codes without a constant weight.
Rational efficiency(const GrayCode& code);

/// Every column of the N x n code matrix is a cyclic (row) shift of column 0.
bool is_single_track(const GrayCode& code);

/// Counter view of a code: word -> position map built once.
class CodeIndex {
 public:
  explicit CodeIndex(GrayCode code);

  /// Throws Error(NotFound) when v is not a codeword.
  std::size_t rank(const Word& v) const;
  const Word& unrank(std::size_t i) const;
  /// words[(rank(v) + 1) mod N].
  const Word& next_word(const Word& v) const;

  const GrayCode& code() const noexcept { return code_; }

 private:
  GrayCode code_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

}  // namespace lrmgray
