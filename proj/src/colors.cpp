#include "lrmgray/colors.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

void check_weight_range(int n, int w) {
  if (n < 2 || w < 1 || w > n - 1) {
    throw Error(ErrorKind::Domain, "need 1 <= w <= n-1, got n=" + std::to_string(n) +
                                       ", w=" + std::to_string(w));
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// (-1)^{w(d+1)/d}; d | w so the exponent is the integer (w/d)(d+1).
std::int64_t sign_term(std::int64_t w, std::int64_t d) {
  return ((w / d) * (d + 1)) % 2 == 0 ? 1 : -1;
}

// Histogram of words whose lowest 1 sits at `first`; the remaining w-1 ones
// are chosen from positions (first, n).
void count_from(int n, int w, int first, std::vector<std::int64_t>& counts) {
  std::vector<int> pos(static_cast<std::size_t>(w));
  pos[0] = first;
  const int rest = w - 1;
  if (n - first - 1 < rest) return;
  for (int i = 0; i < rest; ++i) pos[static_cast<std::size_t>(i + 1)] = first + 1 + i;
  while (true) {
    std::int64_t sum = 0;
    for (int p : pos) sum += p;
    ++counts[static_cast<std::size_t>(sum % n)];
    // advance the combination in pos[1..w-1]
    int i = rest;
    while (i >= 1 && pos[static_cast<std::size_t>(i)] == n - 1 - (rest - i)) --i;
    if (i < 1) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int k = i + 1; k <= rest; ++k) {
      pos[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
}

}  // namespace

int color(const Word& v) {
  std::int64_t sum = 0;
  for (int j = 0; j < v.size(); ++j) sum += static_cast<std::int64_t>(j) * v.bit(j);
  return static_cast<int>(sum % v.size());
}

std::int64_t ColorHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

bool ColorHistogram::uniform() const {
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) ==
         counts.end();
}

ColorHistogram color_counts_bruteforce(int n, int w, int workers) {
  check_weight_range(n, w);
  if (binomial(n, w) > 10'000'000) {
    throw Error(ErrorKind::Resource, "C(" + std::to_string(n) + ", " + std::to_string(w) +
                                         ") exceeds the enumeration cap 10^7");
  }
  const int lanes = std::max(1, std::min(workers, n));
  std::vector<std::vector<std::int64_t>> partial(
      static_cast<std::size_t>(lanes), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  auto run_lane = [&](int lane) {
    for (int first = lane; first < n; first += lanes) {
      count_from(n, w, first, partial[static_cast<std::size_t>(lane)]);
    }
  };
  if (lanes == 1) {
    run_lane(0);
  } else {
    std::vector<std::jthread> threads;
    for (int lane = 0; lane < lanes; ++lane) threads.emplace_back(run_lane, lane);
  }
  ColorHistogram h{n, w, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  for (const auto& p : partial) {
    for (int a = 0; a < n; ++a) h.counts[static_cast<std::size_t>(a)] += p[static_cast<std::size_t>(a)];
  }
  return h;
}

std::int64_t color_count_formula(int n, int w, int a) {
  check_weight_range(n, w);
  if (a < 0 || a >= n) throw Error(ErrorKind::Domain, "color out of range");
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, w))) {
    const std::int64_t g = std::gcd(d, static_cast<std::int64_t>(a));
    const std::int64_t q = d / g;
    // phi(q) | phi(d) because q | d.
    const std::int64_t ramanujan = euler_phi(d) / euler_phi(q) * mobius(q);
    sum += sign_term(w, d) * ramanujan * binomial(n / d, w / d);
  }
  if (sum % n != 0) {
    throw Error(ErrorKind::Domain, "color count sum not divisible by n");
  }
  return sum / n;
}

ColorHistogram color_counts_formula(int n, int w) {
  ColorHistogram h{n, w, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  for (int a = 0; a < n; ++a) h.counts[static_cast<std::size_t>(a)] = color_count_formula(n, w, a);
  return h;
}

std::int64_t color_count_difference(int n, int w) {
  check_weight_range(n, w);
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(std::gcd(n, w))) {
    sum += sign_term(w, d) * (euler_phi(d) - mobius(d)) * binomial(n / d, w / d);
  }
  if (sum % n != 0) {
    throw Error(ErrorKind::Domain, "color difference sum not divisible by n");
  }
  return sum / n;
}

bool cyclic_size_condition(std::int64_t n, std::int64_t size) {
  return n > 0 && size % n == 0;
}

bool FeasibilityVerdict::has_rule(const std::string& rule) const {
  return std::any_of(reasons.begin(), reasons.end(),
                     [&](const VerdictReason& r) { return r.rule == rule; });
}

FeasibilityVerdict optimal_cyclic_feasible(int n, int w) {
  check_weight_range(n, w);
  FeasibilityVerdict verdict;
  const std::int64_t total = binomial(n, w);
  if (!cyclic_size_condition(n, total)) {
    verdict.reasons.push_back(
        {kRuleCyclicSize, std::to_string(n) + " does not divide C(" + std::to_string(n) +
                              ", " + std::to_string(w) + ") = " + std::to_string(total)});
  }
  const int g = std::gcd(n, w);
  if (is_prime(w) && g != 1) {
    verdict.reasons.push_back(
        {kRulePrimeWeight, "w=" + std::to_string(w) + " is prime and gcd(" +
                               std::to_string(n) + ", " + std::to_string(w) + ") = " +
                               std::to_string(g)});
  }
  const ColorHistogram h = color_counts_formula(n, w);
  if (!h.uniform()) {
    const auto [lo, hi] = std::minmax_element(h.counts.begin(), h.counts.end());
    verdict.reasons.push_back(
        {kRuleColorBalance, "color counts of S(" + std::to_string(n) + ", " +
                                std::to_string(w) + ") range over [" + std::to_string(*lo) +
                                ", " + std::to_string(*hi) + "]; count(0) - count(1) = " +
                                std::to_string(color_count_difference(n, w))});
  }
  if (!verdict.reasons.empty()) verdict.status = Feasibility::RuledOut;
  return verdict;
}

}  // namespace lrmgray
