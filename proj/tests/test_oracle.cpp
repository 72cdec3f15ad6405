#include <doctest.h>

#include <map>
#include <string>

#include "lrmgray/oracle.hpp"
#include "lrmgray/weight2.hpp"
#include "lrmgray/weight3.hpp"
#include "support.hpp"

using namespace lrmgray;
using lrmgray::testing::W;

namespace {

// Naive reference on strings: longest simple path, or cycle, by plain DFS.
struct Naive {
  std::vector<std::string> vertices;
  std::map<std::string, int> id;
  std::vector<std::vector<int>> succ;
  std::vector<bool> used;
  int best = 0;

  Naive(int n, int w) {
    for (const Word& v : testing::all_words(n, w)) {
      id[v.to_string()] = static_cast<int>(vertices.size());
      vertices.push_back(v.to_string());
    }
    for (const std::string& s : vertices) {
      std::vector<int> out;
      for (int j = 0; j < n; ++j) {
        const int k = (j + 1) % n;
        if (s[static_cast<std::size_t>(j)] == '1' && s[static_cast<std::size_t>(k)] == '0') {
          std::string t = s;
          t[static_cast<std::size_t>(j)] = '0';
          t[static_cast<std::size_t>(k)] = '1';
          out.push_back(id.at(t));
        }
      }
      succ.push_back(out);
    }
    used.assign(vertices.size(), false);
  }

  void path_dfs(int v, int len) {
    best = std::max(best, len);
    for (int u : succ[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(u)]) continue;
      used[static_cast<std::size_t>(u)] = true;
      path_dfs(u, len + 1);
      used[static_cast<std::size_t>(u)] = false;
    }
  }

  // Cycles are counted once, from their smallest vertex.
  void cycle_dfs(int start, int v, int len) {
    for (int u : succ[static_cast<std::size_t>(v)]) {
      if (u == start) best = std::max(best, len);
      if (u <= start || used[static_cast<std::size_t>(u)]) continue;
      used[static_cast<std::size_t>(u)] = true;
      cycle_dfs(start, u, len + 1);
      used[static_cast<std::size_t>(u)] = false;
    }
  }

  int longest(bool cyclic) {
    best = 0;
    for (int s = 0; s < static_cast<int>(vertices.size()); ++s) {
      used[static_cast<std::size_t>(s)] = true;
      if (cyclic) {
        cycle_dfs(s, s, 1);
      } else {
        path_dfs(s, 1);
      }
      used[static_cast<std::size_t>(s)] = false;
    }
    return best;
  }
};

void check_witness(const SearchResult& r) {
  CHECK(static_cast<std::int64_t>(r.witness.size()) == r.best_length);
  if (r.best_length == 0) return;
  CHECK(r.witness.w == r.w);
  CHECK(validate_code(r.witness, true, r.cyclic).ok);
  CHECK(reverify(r.witness).ok);
}

}  // namespace

TEST_CASE("oracle examples") {
  const auto r52 = longest_code(5, 2);
  CHECK(r52.best_length == 10);
  CHECK(r52.exhausted);
  check_witness(r52);

  const auto r32 = longest_code(3, 2);
  CHECK(r32.best_length == 3);
  check_witness(r32);

  const auto r62 = longest_code(6, 2);
  CHECK(r62.best_length <= 12);
  CHECK(r62.best_length == 12);

  const auto r72 = longest_code(7, 2);
  CHECK(r72.best_length <= 20);
  CHECK(r72.best_length % 7 == 0);
  CHECK(r72.best_length == 14);

  CHECK(testing::throws_kind([] { (void)longest_code(5, 0); }, ErrorKind::Domain));
  CHECK(testing::throws_kind([] { (void)longest_code(5, 5); }, ErrorKind::Domain));
  CHECK(testing::throws_kind([] { (void)longest_code(65, 2); }, ErrorKind::Domain));
  CHECK(testing::throws_kind([] { (void)longest_code(30, 15); }, ErrorKind::Resource));
}

TEST_CASE("known optima up to n = 9") {
  struct Case {
    int n, w;
    std::int64_t cyclic, path;
  };
  const Case cases[] = {{6, 3, 18, 19}, {7, 3, 28, 35}, {8, 2, 16, 25}, {8, 3, 56, 56}, {9, 2, 18, 36}};
  for (const Case& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.w);
    const auto cyc = longest_code(c.n, c.w);
    CHECK(cyc.exhausted);
    CHECK(cyc.best_length == c.cyclic);
    check_witness(cyc);
    SearchOptions open;
    open.cyclic = false;
    const auto path = longest_code(c.n, c.w, open);
    CHECK(path.exhausted);
    CHECK(path.best_length == c.path);
    check_witness(path);
  }
  const auto r84 = longest_code(8, 4);
  CHECK(r84.best_length == 64);
  const auto r93 = longest_code(9, 3);
  CHECK(r93.exhausted);
  CHECK(r93.best_length == 81);
  check_witness(r93);
}

TEST_CASE("property: oracle matches a naive search for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int w = 1; w < n; ++w) {
      CAPTURE(n);
      CAPTURE(w);
      Naive naive(n, w);
      const auto cyc = longest_code(n, w);
      CHECK(cyc.exhausted);
      CHECK(cyc.best_length == naive.longest(true));
      check_witness(cyc);
      SearchOptions open;
      open.cyclic = false;
      const auto path = longest_code(n, w, open);
      CHECK(path.exhausted);
      CHECK(path.best_length == naive.longest(false));
      check_witness(path);
    }
  }
  Naive n72(7, 2);
  CHECK(longest_code(7, 2).best_length == n72.longest(true));
}

TEST_CASE("property: pruning switches never change the optimum") {
  for (int n = 3; n <= 7; ++n) {
    for (int w = 1; w < n; ++w) {
      for (bool cyclic : {true, false}) {
        CAPTURE(n);
        CAPTURE(w);
        CAPTURE(cyclic);
        SearchOptions base;
        base.cyclic = cyclic;
        const auto ref = longest_code(n, w, base);
        SearchOptions no_color = base;
        no_color.color_pruning = false;
        CHECK(longest_code(n, w, no_color).best_length == ref.best_length);
        SearchOptions no_ham = base;
        no_ham.hamiltonian_phase = false;
        CHECK(longest_code(n, w, no_ham).best_length == ref.best_length);
        if (n <= 6) {
          SearchOptions bare = base;
          bare.quotient_rotations = false;
          bare.color_pruning = false;
          bare.hamiltonian_phase = false;
          CHECK(longest_code(n, w, bare).best_length == ref.best_length);
        }
      }
    }
  }
}

TEST_CASE("property: the witness does not depend on the worker count") {
  for (auto [n, w] : {std::pair{7, 3}, std::pair{8, 2}, std::pair{9, 3}}) {
    SearchOptions one;
    SearchOptions many;
    many.workers = 3;
    const auto a = longest_code(n, w, one);
    const auto b = longest_code(n, w, many);
    CHECK(a.best_length == b.best_length);
    CHECK(a.witness.words == b.witness.words);
  }
}

TEST_CASE("property: cyclic weight-2 optima respect the uncovered-word bound") {
  for (int n = 7; n <= 11; n += 2) {
    const auto r = longest_code(n, 2);
    CHECK(r.exhausted);
    CHECK(r.best_length <= cyclic_weight2_bound(n).max_cyclic_size);
    CHECK(r.best_length % n == 0);
  }
}

TEST_CASE("budget exhaustion is reported") {
  SearchOptions tiny;
  tiny.budget = 5;
  tiny.hamiltonian_phase = false;
  const auto r = longest_code(9, 3, tiny);
  CHECK_FALSE(r.exhausted);
  CHECK(r.best_length <= 81);
}

TEST_CASE("reverification") {
  CHECK(reverify(build_weight3(11), true).ok);
  CHECK(reverify(GrayCode::from_words(testing::table_one(), true), true).ok);
  CHECK(reverify(build_weight2(9)).ok);
  CHECK_FALSE(reverify(build_weight2(9), true).ok);

  GrayCode broken = build_weight3(11);
  broken.words[7] = broken.words[7].with_bit(10, 1 - broken.words[7].bit(10));
  const auto report = reverify(broken);
  CHECK_FALSE(report.ok);
  bool near = false;
  for (const auto& f : report.failures) near = near || f.position == 6 || f.position == 7;
  CHECK(near);
}

TEST_CASE("single-track base search") {
  const auto r11 = single_track_search(11, 3);
  CHECK(r11.exhausted);
  CHECK(r11.full_period_necklaces == 15);
  CHECK(r11.best_base_length == 15);
  CHECK(r11.code_size() == 165);

  const auto r10 = single_track_search(10, 3);
  CHECK(r10.exhausted);
  CHECK(r10.full_period_necklaces == 12);
  CHECK(r10.best_base_length == 9);
  const GrayCode lifted = lift_single_track(r10.base, r10.shift);
  CHECK(lifted.size() == 90);
  CHECK(reverify(lifted, true).ok);
}
