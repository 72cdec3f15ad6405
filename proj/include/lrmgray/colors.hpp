#pragma once

// The first-moment color chi(v) = (sum_j j * v_j) mod n, per-color counts of
// S(n, w), and necessary conditions for cyclic optimal codes.

#include <cstdint>
#include <string>
#include <vector>

#include "lrmgray/words.hpp"

namespace lrmgray {

int color(const Word& v);

struct ColorHistogram {
  int n = 0;
  int w = 0;
  std::vector<std::int64_t> counts;  // counts[a], a in Z_n

  std::int64_t total() const;
  bool uniform() const;
  friend bool operator==(const ColorHistogram&, const ColorHistogram&) = default;
};

/// Counts by enumerating S(n, w). Requires 1 <= w <= n-1 (Error(Domain)) and
/// C(n, w) <= 10^7 (Error(Resource)). workers > 1 splits the enumeration by
/// the position of the lowest 1; the merged histogram is identical.
ColorHistogram color_counts_bruteforce(int n, int w, int workers = 1);

/// Closed form, summed over d | gcd(n, w):
///   (1/n) sum (-1)^{w(d+1)/d} phi(d) mu(d/g)/phi(d/g) C(n/d, w/d),  g = gcd(d, a).
std::int64_t color_count_formula(int n, int w, int a);
ColorHistogram color_counts_formula(int n, int w);

/// Count of color 0 minus count of color 1, from the reduced sum with weight
/// phi(d) - mu(d). Zero whenever gcd(n, w) = 1.
std::int64_t color_count_difference(int n, int w);

/// n | N: necessary for any cyclic constant-weight code of size N.
bool cyclic_size_condition(std::int64_t n, std::int64_t size);

enum class Feasibility { Possible, RuledOut };

struct VerdictReason {
  std::string rule;    // short identifier of the violated condition
  std::string detail;  // human-readable numbers
};

struct FeasibilityVerdict {
  Feasibility status = Feasibility::Possible;
  std::vector<VerdictReason> reasons;

  bool ruled_out() const noexcept { return status == Feasibility::RuledOut; }
  bool has_rule(const std::string& rule) const;
};

inline constexpr const char* kRuleCyclicSize = "cyclic-size-divisibility";
inline constexpr const char* kRulePrimeWeight = "prime-weight-common-factor";
inline constexpr const char* kRuleColorBalance = "color-balance";

/// Necessary conditions only: Possible never means a code exists.
FeasibilityVerdict optimal_cyclic_feasible(int n, int w);

}  // namespace lrmgray
