#include "lrmgray/lrm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

template <typename T>
Word word_from_levels(std::span<const T> c) {
  const std::size_t n = c.size();
  if (n < 2) throw Error(ErrorKind::Domain, "need at least two readings");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t p = 0; p < n; ++p) {
    const T a = c[p];
    const T b = c[(p + 1) % n];
    if (a == b) {
      throw Error(ErrorKind::IllDefinedPermutation,
                  "equal adjacent readings at cells " + std::to_string(p) + " and " +
                      std::to_string((p + 1) % n));
    }
    bits[p] = a > b ? 1 : 0;
  }
  return Word(std::move(bits));
}

}  // namespace

LrmParams::LrmParams(int s, int t, int n) : s_(s), t_(t), n_(n) {
  if (s < 1 || s > t || t > n || n % s != 0) {
    throw Error(ErrorKind::Domain, "LRM parameters need 1 <= s <= t <= n and s | n");
  }
}

Permutation induced_permutation(std::span<const double> window) {
  std::vector<int> order(window.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return window[a] > window[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (window[order[i - 1]] == window[order[i]]) {
      throw Error(ErrorKind::IllDefinedPermutation, "window has repeated readings");
    }
  }
  Permutation f;
  f.one_line.reserve(order.size());
  for (int pos : order) f.one_line.push_back(pos + 1);
  return f;
}

std::vector<Permutation> demodulate(std::span<const double> readings,
                                    const LrmParams& params) {
  const int n = params.n();
  if (static_cast<int>(readings.size()) != n) {
    throw Error(ErrorKind::Domain, "expected " + std::to_string(n) + " readings");
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n / params.s()));
  std::vector<double> window(static_cast<std::size_t>(params.t()));
  for (int p = 0; p < n; p += params.s()) {
    for (int i = 0; i < params.t(); ++i) {
      window[static_cast<std::size_t>(i)] = readings[static_cast<std::size_t>((p + i) % n)];
    }
    out.push_back(induced_permutation(window));
  }
  return out;
}

Word word_from_charges(std::span<const double> readings) {
  return word_from_levels(readings);
}

Word word_from_charges(std::span<const std::int64_t> levels) {
  return word_from_levels(levels);
}

bool is_realizable_word(const Word& v) { return v.in_ambient_space(); }

}  // namespace lrmgray
