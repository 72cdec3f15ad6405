#include "lrmgray/weight2.hpp"

#include <array>
#include <string>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

void require_odd(int n, int min_n) {
  if (n < min_n || n % 2 == 0) {
    throw Error(ErrorKind::Domain, "weight-2 row/column indexing needs odd n >= " +
                                       std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

}  // namespace

Word rowcol_to_word(RowCol rc, int n) {
  require_odd(n, 3);
  if (rc.k < 1 || rc.k > (n - 1) / 2) {
    throw Error(ErrorKind::Domain, "row " + std::to_string(rc.k) + " outside [1, " +
                                       std::to_string((n - 1) / 2) + "]");
  }
  const std::array<int, 2> ones{rc.col, rc.col + rc.k};
  return Word::from_positions(n, ones);
}

RowCol word_to_rowcol(const Word& v) {
  const int n = v.size();
  require_odd(n, 3);
  const auto ones = v.ones();
  if (ones.size() != 2) throw Error(ErrorKind::Domain, "word_to_rowcol needs weight 2");
  const int gap = ones[1] - ones[0];
  if (gap <= (n - 1) / 2) return {gap, ones[0]};
  return {n - gap, ones[1]};
}

std::vector<RowCol> graph_neighbors(RowCol rc, int n) {
  require_odd(n, 5);
  const int top = (n - 1) / 2;
  if (rc.k < 1 || rc.k > top) throw Error(ErrorKind::Domain, "row out of range");
  const int l = static_cast<int>(mod(rc.col, n));
  if (rc.k == 1) return {{2, l}};
  if (rc.k < top) return {{rc.k + 1, l}, {rc.k - 1, static_cast<int>(mod(l + 1, n))}};
  return {{top - 1, static_cast<int>(mod(l + 1, n))},
          {top, static_cast<int>(mod(l + (n + 1) / 2, n))}};
}

GrayCode build_weight2(int n) {
  require_odd(n, 3);
  const int top = (n - 1) / 2;
  const auto total = static_cast<std::size_t>(binomial(n, 2));

  std::vector<Word> words;
  words.reserve(total);
  RowCol cur{1, 0};
  words.push_back(rowcol_to_word(cur, n));
  while (words.size() < total) {
    const int k = cur.k;
    const int l = cur.col;
    if (k % 2 == 1 && k < top) {
      cur = {k + 1, l};
    } else if (k % 2 == 1) {
      cur = {k, static_cast<int>(mod(l + (n + 1) / 2, n))};
    } else if (l != mod(n - k / 2, n)) {
      cur = {k - 1, static_cast<int>(mod(l + 1, n))};
    } else {
      cur = {k + 1, l};
    }
    words.push_back(rowcol_to_word(cur, n));
  }

  const Word& last = words.back();
  const bool closes = find_transition(last, words.front()).has_value();
  return GrayCode::from_words(std::move(words), closes);
}

BoundReport cyclic_weight2_bound(int n) {
  if (n < 7 || n % 2 == 0) {
    throw Error(ErrorKind::Domain, "cyclic weight-2 bound needs odd n >= 7");
  }
  const std::int64_t all = binomial(n, 2);
  const std::int64_t uncovered = static_cast<std::int64_t>(n - 3) * (n - 5) / 8;
  const std::int64_t max_size = all - uncovered;
  return {n, uncovered, max_size, Rational(max_size, all)};
}

}  // namespace lrmgray
