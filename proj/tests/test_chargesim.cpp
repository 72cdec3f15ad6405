#include <doctest.h>

#include <algorithm>

#include "lrmgray/chargesim.hpp"
#include "lrmgray/weight3.hpp"
#include "support.hpp"

using namespace lrmgray;
using lrmgray::testing::W;

namespace {

// Reversing and complementing maps a tau move at j to a tau move at n-2-j.
Word reverse_complement(const Word& v) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(v.size()));
  for (int p = 0; p < v.size(); ++p) bits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(1 - v.bit(v.size() - 1 - p));
  return Word(std::move(bits));
}

}  // namespace

TEST_CASE("realization examples") {
  CHECK(realize(W("11000"), 2).levels == std::vector<std::int64_t>{0, -2, -3, -2, -1});
  CHECK(realize(W("10100"), 2).levels == std::vector<std::int64_t>{0, -2, -1, -2, -1});
  CHECK(realize(W("11100"), 3).levels == std::vector<std::int64_t>{0, -1, -2, -3, -2});
  CHECK(realize(W("11000"), 2).word() == W("11000"));
  CHECK(realize(W("11000"), 2).differences() == std::vector<std::int64_t>{-2, -1, 1, 1, 1});
  CHECK(testing::throws_kind([] { (void)realize(W("11000"), 3); }, ErrorKind::Domain));
}

TEST_CASE("push examples") {
  const ChargeState s = realize(W("11000"), 2);
  const ChargeState pushed = push_cell(s, 2);
  CHECK(pushed.levels == std::vector<std::int64_t>{0, -2, -1, -2, -1});
  CHECK(pushed.word() == W("10100"));
  CHECK(step_tau(s, 1).levels == pushed.levels);
  CHECK(testing::throws_kind([&] { (void)push_cell(s, 0); }, ErrorKind::InvalidPush));
  CHECK(testing::throws_kind([&] { (void)push_cell(s, 1); }, ErrorKind::InvalidPush));
  CHECK(testing::throws_kind([&] { (void)step_tau(s, 2); }, ErrorKind::InvalidPush));
}

TEST_CASE("jump bound") {
  CHECK(jump_bound(5, 2) == 3);
  CHECK(jump_bound(11, 3) == 4);
  CHECK(jump_bound(10, 7) == 4);
}

TEST_CASE("property: realization reads back, and a push realizes exactly tau") {
  for (int n = 2; n <= 9; ++n) {
    for (const Word& v : testing::all_ambient_words(n)) {
      const ChargeState s = realize(v, v.weight());
      CHECK(s.word() == v);
      auto d = s.differences();
      CHECK(std::count_if(d.begin(), d.end(), [](std::int64_t x) { return x < 0; }) == v.weight());
      for (int j = 0; j < n; ++j) {
        if (is_constant_weight_window(v, j)) {
          const ChargeState t = step_tau(s, j);
          CHECK(t.word() == apply_tau(v, j));
          for (int p = 0; p < n; ++p) {
            if (p != (j + 1) % n) CHECK(t.levels[static_cast<std::size_t>(p)] == s.levels[static_cast<std::size_t>(p)]);
          }
        } else {
          CHECK(testing::throws_kind([&] { (void)step_tau(s, j); }, ErrorKind::InvalidPush));
        }
      }
    }
  }
}

TEST_CASE("traversal of the optimal n = 5 code") {
  const GrayCode code = GrayCode::from_words(testing::table_one(), true);
  const TraversalStats st = traverse(code, 1);
  CHECK(st.steps == 10);
  CHECK(st.jump_bound == 3);
  CHECK(st.max_jump <= 3);
  CHECK(st.diff_multiset_preserved);
  CHECK(traverse(code, 4).steps == 40);
  CHECK(testing::throws_kind([&] { (void)traverse(code, 0); }, ErrorKind::Domain));
  CHECK(testing::throws_kind([&] { (void)traverse(GrayCode::from_words(testing::table_one(), false), 1); }, ErrorKind::Domain));
}

TEST_CASE("traversal with more ones than zeros") {
  std::vector<Word> words;
  for (const Word& v : testing::table_one()) words.push_back(reverse_complement(v));
  const GrayCode code = GrayCode::from_words(words, true);
  REQUIRE(validate_code(code, true, true).ok);
  CHECK(code.w == 3);
  const TraversalStats st = traverse(code, 2);
  CHECK(st.steps == 20);
  CHECK(st.max_jump <= st.jump_bound);
}

TEST_CASE("traversal of the n = 11 weight-3 code") {
  const TraversalStats st = traverse(build_weight3(11), 2);
  CHECK(st.steps == 330);
  CHECK(st.jump_bound == 4);
  CHECK(st.max_jump <= 4);
  CHECK(st.diff_multiset_preserved);
}
