#include "lrmgray/chargesim.hpp"

#include <algorithm>
#include <string>

#include "lrmgray/error.hpp"
#include "lrmgray/lrm.hpp"

namespace lrmgray {

namespace {

// Realization for 2w <= n.
std::vector<std::int64_t> realize_low_weight(const Word& v, int w) {
  const int n = v.size();
  const std::int64_t base = (n - w) / w;
  std::int64_t ceilings = (n - w) % w;
  std::vector<std::int64_t> levels(static_cast<std::size_t>(n), 0);
  for (int j = 0; j + 1 < n; ++j) {
    std::int64_t step = 1;
    if (v.bit(j) == 1) {
      step = -base;
      if (ceilings > 0) {
        step -= 1;
        --ceilings;
      }
    }
    levels[static_cast<std::size_t>(j + 1)] = levels[static_cast<std::size_t>(j)] + step;
  }
  return levels;
}

}  // namespace

Word ChargeState::word() const { return word_from_charges(std::span<const std::int64_t>(levels)); }

std::vector<std::int64_t> ChargeState::differences() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    d[static_cast<std::size_t>(j)] =
        levels[static_cast<std::size_t>((j + 1) % n)] - levels[static_cast<std::size_t>(j)];
  }
  return d;
}

ChargeState realize(const Word& v, int w) {
  const int n = v.size();
  if (v.weight() != w || !v.in_ambient_space()) {
    throw Error(ErrorKind::Domain, "realize: " + v.to_string() + " is not in S(" +
                                       std::to_string(n) + ", " + std::to_string(w) + ")");
  }
  if (2 * w <= n) return {n, realize_low_weight(v, w)};

  // Complement and reverse: u_p = 1 - v_{n-1-p}, weight n - w.
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) bits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(1 - v.bit(n - 1 - p));
  const auto reflected = realize_low_weight(Word(std::move(bits)), n - w);
  ChargeState state{n, std::vector<std::int64_t>(static_cast<std::size_t>(n))};
  for (int p = 0; p < n; ++p) {
    state.levels[static_cast<std::size_t>(p)] = reflected[static_cast<std::size_t>(mod(-p, n))];
  }
  return state;
}

ChargeState push_cell(const ChargeState& state, int cell) {
  const int n = state.n;
  if (cell < 0 || cell >= n) throw Error(ErrorKind::InvalidPush, "cell index out of range");
  const auto at = [&](std::int64_t i) { return state.levels[static_cast<std::size_t>(mod(i, n))]; };
  // bit (cell-1) = [c_{cell-1} > c_cell], bit cell = [c_cell > c_{cell+1}]
  const bool left_one = at(cell - 1) > at(cell);
  const bool right_zero = at(cell) < at(cell + 1);
  if (!left_one || !right_zero) {
    throw Error(ErrorKind::InvalidPush,
                "pushing cell " + std::to_string(cell) + " is not a constant-weight move");
  }
  ChargeState next = state;
  next.levels[static_cast<std::size_t>(cell)] = std::max(at(cell - 1), at(cell + 1)) + 1;
  return next;
}

ChargeState step_tau(const ChargeState& state, int j) {
  return push_cell(state, static_cast<int>(mod(j + 1, state.n)));
}

std::int64_t jump_bound(int n, int w) {
  const int lo = std::min(w, n - w);
  return (n + lo - 1) / lo;
}

TraversalStats traverse(const GrayCode& code, int laps) {
  if (laps < 1) throw Error(ErrorKind::Domain, "traverse needs laps >= 1");
  if (!code.cyclic || !code.w || code.words.empty()) {
    throw Error(ErrorKind::Domain, "traverse needs a cyclic constant-weight code");
  }
  const int n = code.n;
  const std::size_t count = code.words.size();
  if (code.transitions.size() != count) {
    throw Error(ErrorKind::Domain, "cyclic code needs one transition per word");
  }

  TraversalStats stats;
  stats.jump_bound = jump_bound(n, *code.w);
  ChargeState state = realize(code.words.front(), *code.w);
  stats.max_level = *std::max_element(state.levels.begin(), state.levels.end());

  for (int lap = 0; lap < laps; ++lap) {
    for (std::size_t i = 0; i < count; ++i) {
      const int j = code.transitions[i];
      const int cell = static_cast<int>(mod(j + 1, n));
      const auto before_left = state.levels[static_cast<std::size_t>(cell)] -
                               state.levels[static_cast<std::size_t>(mod(cell - 1, n))];
      const auto before_right = state.levels[static_cast<std::size_t>(mod(cell + 1, n))] -
                                state.levels[static_cast<std::size_t>(cell)];
      const std::int64_t old_level = state.levels[static_cast<std::size_t>(cell)];
      try {
        state = step_tau(state, j);
      } catch (const Error& e) {
        throw Error(ErrorKind::TraversalIntegrity,
                    "step " + std::to_string(stats.steps) + ": " + e.what());
      }
      ++stats.steps;
      const std::int64_t new_level = state.levels[static_cast<std::size_t>(cell)];
      stats.max_jump = std::max(stats.max_jump, new_level - old_level);
      stats.max_level = std::max(stats.max_level, new_level);

      const auto after_left = new_level - state.levels[static_cast<std::size_t>(mod(cell - 1, n))];
      const auto after_right = state.levels[static_cast<std::size_t>(mod(cell + 1, n))] - new_level;
      const bool same_pair = std::minmax(before_left, before_right) ==
                             std::minmax(after_left, after_right);
      if (!same_pair) stats.diff_multiset_preserved = false;

      const Word& expected = code.words[(i + 1) % count];
      if (state.word() != expected) {
        throw Error(ErrorKind::TraversalIntegrity,
                    "step " + std::to_string(stats.steps) + ": demodulated " +
                        state.word().to_string() + ", expected " + expected.to_string());
      }
      if (!stats.diff_multiset_preserved) {
        throw Error(ErrorKind::TraversalIntegrity,
                    "step " + std::to_string(stats.steps) + ": difference multiset changed");
      }
    }
  }
  return stats;
}

}  // namespace lrmgray
