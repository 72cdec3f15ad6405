#include "lrmgray/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

#include "lrmgray/colors.hpp"
#include "lrmgray/error.hpp"
#include "lrmgray/numeric.hpp"

namespace lrmgray {

namespace {

template <class F>
void for_each_combination(int n, int w, F&& f) {
  std::vector<int> pos(static_cast<std::size_t>(w));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    f(pos);
    int i = w - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < w; ++k) pos[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(k - 1)] + 1;
  }
}

struct Digraph {
  int n = 0;
  std::vector<Word> words;               // sorted lexicographically
  std::vector<std::vector<int>> succ;    // ascending vertex ids
  std::vector<std::vector<int>> pred;
  std::vector<int> color;
  std::vector<int> rep_of;               // vertex id of the necklace representative
  std::vector<std::int64_t> color_total;
};

Digraph build_digraph(int n, int w) {
  Digraph g;
  g.n = n;
  for_each_combination(n, w, [&](const std::vector<int>& pos) { g.words.push_back(Word::from_positions(n, pos)); });
  std::sort(g.words.begin(), g.words.end());

  const std::size_t count = g.words.size();
  std::unordered_map<Word, int, WordHash> id;
  for (std::size_t i = 0; i < count; ++i) id.emplace(g.words[i], static_cast<int>(i));
  g.succ.resize(count);
  g.pred.resize(count);
  g.color.resize(count);
  g.rep_of.resize(count);
  g.color_total.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& s : constant_weight_successors(g.words[i])) {
      const int u = id.at(s.word);
      g.succ[i].push_back(u);
      g.pred[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
    }
    std::sort(g.succ[i].begin(), g.succ[i].end());
    g.color[i] = color(g.words[i]);
    g.rep_of[i] = id.at(necklace_canonical_rep(g.words[i]));
    ++g.color_total[static_cast<std::size_t>(g.color[i])];
  }
  return g;
}

struct Shared {
  std::atomic<std::uint64_t> expansions{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::int64_t> best{0};
  // Smallest start index whose search reached the root upper bound.
  std::atomic<int> saturated_start{std::numeric_limits<int>::max()};
};

struct StartResult {
  std::int64_t length = 0;
  std::vector<int> path;
};

class PathSearch {
 public:
  PathSearch(const Digraph& g, const SearchOptions& opt, Shared& shared, std::int64_t upper)
      : g_(g), opt_(opt), shared_(shared), upper_(upper),
        state_(g.words.size(), kFree), fwd_(g.words.size(), 0), bwd_(g.words.size(), 0),
        path_colors_(static_cast<std::size_t>(g.n), 0),
        reach_colors_(static_cast<std::size_t>(g.n), 0) {}

  StartResult run(int start_index, int start) {
    StartResult result;
    // A cycle can be rotated onto the least necklace it touches, so a cyclic
    // search from a representative never needs earlier necklaces.
    const bool restrict = opt_.cyclic && opt_.quotient_rotations;
    if (restrict) {
      for (std::size_t u = 0; u < state_.size(); ++u) {
        if (g_.rep_of[u] < start) state_[u] = kBlocked;
      }
    }

    struct Frame {
      int vertex;
      std::size_t next_child;
    };
    std::vector<Frame> stack;
    std::vector<int> path;
    auto push = [&](int v) {
      stack.push_back({v, 0});
      path.push_back(v);
      state_[static_cast<std::size_t>(v)] = kOnPath;
      ++path_colors_[static_cast<std::size_t>(g_.color[static_cast<std::size_t>(v)])];
    };
    auto pop = [&] {
      const int v = stack.back().vertex;
      stack.pop_back();
      path.pop_back();
      state_[static_cast<std::size_t>(v)] = kFree;
      --path_colors_[static_cast<std::size_t>(g_.color[static_cast<std::size_t>(v)])];
    };

    push(start);
    bool fresh = true;
    while (!stack.empty()) {
      if (fresh) {
        fresh = false;
        const int v = stack.back().vertex;
        if (shared_.out_of_budget.load(std::memory_order_relaxed)) break;
        if (shared_.saturated_start.load(std::memory_order_relaxed) < start_index) break;
        if (shared_.expansions.fetch_add(1, std::memory_order_relaxed) + 1 > opt_.budget) {
          shared_.out_of_budget.store(true);
          break;
        }
        const auto len = static_cast<std::int64_t>(path.size());
        const auto& out = g_.succ[static_cast<std::size_t>(v)];
        const bool closes = !opt_.cyclic || std::binary_search(out.begin(), out.end(), start);
        if (closes && len > result.length) {
          result.length = len;
          result.path = path;
          std::int64_t prev = shared_.best.load();
          while (len > prev && !shared_.best.compare_exchange_weak(prev, len)) {
          }
          if (len >= upper_) {
            int cur = shared_.saturated_start.load();
            while (start_index < cur && !shared_.saturated_start.compare_exchange_weak(cur, start_index)) {
            }
            break;
          }
        }
        const std::int64_t bound = subtree_bound(v, start, len, closes);
        if (bound <= result.length || bound < shared_.best.load(std::memory_order_relaxed)) {
          pop();
          continue;
        }
      }
      Frame& top = stack.back();
      const auto& children = g_.succ[static_cast<std::size_t>(top.vertex)];
      bool descended = false;
      while (top.next_child < children.size()) {
        const int u = children[top.next_child++];
        if (state_[static_cast<std::size_t>(u)] == kFree) {
          push(u);
          fresh = true;
          descended = true;
          break;
        }
      }
      if (!descended) pop();
    }
    while (!stack.empty()) pop();
    if (restrict) std::fill(state_.begin(), state_.end(), kFree);
    return result;
  }

 private:
  static constexpr std::uint8_t kFree = 0;
  static constexpr std::uint8_t kOnPath = 1;
  static constexpr std::uint8_t kBlocked = 2;

  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(fwd_.begin(), fwd_.end(), 0);
      std::fill(bwd_.begin(), bwd_.end(), 0);
      epoch_ = 1;
    }
  }

  // Marks free vertices reachable from `root` along `adj`.
  void flood(int root, const std::vector<std::vector<int>>& adj, std::vector<std::uint32_t>& mark) {
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (int u : adj[static_cast<std::size_t>(queue_[head])]) {
        auto& m = mark[static_cast<std::size_t>(u)];
        if (state_[static_cast<std::size_t>(u)] != kFree || m == epoch_) continue;
        m = epoch_;
        queue_.push_back(u);
      }
    }
  }

  // Upper bound on the final length of any extension of the current path.
  std::int64_t subtree_bound(int v, int start, std::int64_t len, bool closes) {
    next_epoch();
    flood(v, g_.succ, fwd_);
    std::fill(reach_colors_.begin(), reach_colors_.end(), 0);
    std::int64_t reach = 0;
    if (opt_.cyclic) {
      // Extension vertices must be reachable from v and able to return to start.
      flood(start, g_.pred, bwd_);
      for (int u : queue_) {
        if (fwd_[static_cast<std::size_t>(u)] != epoch_) continue;
        ++reach;
        ++reach_colors_[static_cast<std::size_t>(g_.color[static_cast<std::size_t>(u)])];
      }
      if (reach == 0) return closes ? len : 0;
    } else {
      for (int u : queue_) {
        if (u == v) continue;
        ++reach;
        ++reach_colors_[static_cast<std::size_t>(g_.color[static_cast<std::size_t>(u)])];
      }
    }
    std::int64_t bound = len + reach;
    if (!opt_.color_pruning) return bound;
    const int n = g_.n;
    if (opt_.cyclic) {
      std::int64_t q = std::numeric_limits<std::int64_t>::max();
      for (int a = 0; a < n; ++a) {
        q = std::min(q, path_colors_[static_cast<std::size_t>(a)] + reach_colors_[static_cast<std::size_t>(a)]);
      }
      return std::min(bound, q * n);
    }
    const int c0 = g_.color[static_cast<std::size_t>(start)];
    for (int a = 0; a < n; ++a) {
      const std::int64_t avail = path_colors_[static_cast<std::size_t>(a)] + reach_colors_[static_cast<std::size_t>(a)];
      bound = std::min(bound, mod(a - c0, n) + n * avail);
    }
    return bound;
  }

  const Digraph& g_;
  const SearchOptions& opt_;
  Shared& shared_;
  std::int64_t upper_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> fwd_;
  std::vector<std::uint32_t> bwd_;
  std::uint32_t epoch_ = 0;
  std::vector<std::int64_t> path_colors_;
  std::vector<std::int64_t> reach_colors_;
  std::vector<int> queue_;
};

// Search for a cycle through every vertex by choosing successor edges.
// Propagation commits an edge whenever a vertex has a single remaining in- or
// out-edge, and forbids edges that would close a committed fragment early.
// Branching extends the fragment that starts at vertex 0 (the least word,
// which any such cycle contains) in ascending successor order, so the first
// cycle found is the lexicographically least.
struct HamiltonianOutcome {
  bool found = false;
  bool out_of_budget = false;
  std::vector<int> path;
};

class HamiltonianSearch {
 public:
  explicit HamiltonianSearch(const Digraph& g) : g_(g), count_(static_cast<int>(g.words.size())) {
    pred_slot_.resize(g.succ.size());
    for (std::size_t x = 0; x < g.succ.size(); ++x) {
      for (int y : g.succ[x]) {
        const auto& p = g.pred[static_cast<std::size_t>(y)];
        pred_slot_[x].push_back(static_cast<int>(std::find(p.begin(), p.end(), static_cast<int>(x)) - p.begin()));
      }
    }
  }

  HamiltonianOutcome run(std::uint64_t budget, std::uint64_t& used) {
    HamiltonianOutcome out;
    State root;
    const auto n = static_cast<std::size_t>(count_);
    root.out_mask.resize(n);
    root.in_mask.resize(n);
    root.next.assign(n, -1);
    root.prev.assign(n, -1);
    root.other_end.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      root.out_mask[x] = static_cast<std::uint8_t>((1u << g_.succ[x].size()) - 1);
      root.in_mask[x] = static_cast<std::uint8_t>((1u << g_.pred[x].size()) - 1);
      root.other_end[x] = static_cast<int>(x);
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (!propagate(root, all)) return out;

    std::vector<State> stack{root};
    std::vector<int> branch_next{0};
    while (!stack.empty()) {
      if (++used > budget) {
        out.out_of_budget = true;
        return out;
      }
      State& st = stack.back();
      int tail = 0;
      while (st.next[static_cast<std::size_t>(tail)] >= 0 && st.next[static_cast<std::size_t>(tail)] != 0) {
        tail = st.next[static_cast<std::size_t>(tail)];
      }
      if (st.committed == count_) {
        out.found = true;
        for (int v = 0;;) {
          out.path.push_back(v);
          v = st.next[static_cast<std::size_t>(v)];
          if (v == 0) break;
        }
        return out;
      }
      const auto& succ = g_.succ[static_cast<std::size_t>(tail)];
      int& k = branch_next.back();
      while (k < static_cast<int>(succ.size()) && !(st.out_mask[static_cast<std::size_t>(tail)] >> k & 1u)) ++k;
      if (k >= static_cast<int>(succ.size())) {
        stack.pop_back();
        branch_next.pop_back();
        continue;
      }
      State child = st;
      const int y = succ[static_cast<std::size_t>(k)];
      ++k;
      std::vector<int> touched;
      if (commit(child, tail, y, touched) && propagate(child, touched) && strongly_connected(child)) {
        stack.push_back(std::move(child));
        branch_next.push_back(0);
      }
    }
    return out;
  }

 private:
  struct State {
    std::vector<std::uint8_t> out_mask;  // bit k: edge to succ[x][k] still allowed
    std::vector<std::uint8_t> in_mask;   // bit k: edge from pred[x][k] still allowed
    std::vector<int> next;
    std::vector<int> prev;
    std::vector<int> other_end;          // valid at fragment endpoints
    int committed = 0;
  };

  void remove_edge(State& st, int x, int k, std::vector<int>& touched) {
    auto& om = st.out_mask[static_cast<std::size_t>(x)];
    if (!(om >> k & 1u)) return;
    om = static_cast<std::uint8_t>(om & ~(1u << k));
    const int y = g_.succ[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
    auto& im = st.in_mask[static_cast<std::size_t>(y)];
    im = static_cast<std::uint8_t>(im & ~(1u << pred_slot_[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)]));
    touched.push_back(x);
    touched.push_back(y);
  }

  bool commit(State& st, int x, int y, std::vector<int>& touched) {
    const auto ux = static_cast<std::size_t>(x);
    const auto uy = static_cast<std::size_t>(y);
    if (st.next[ux] == y) return true;
    if (st.next[ux] >= 0 || st.prev[uy] >= 0) return false;
    const int head = st.other_end[ux];
    const int tail = st.other_end[uy];
    if (head == y && st.committed + 1 < count_) return false;
    st.next[ux] = y;
    st.prev[uy] = x;
    ++st.committed;
    const auto& succ = g_.succ[ux];
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (succ[k] != y) remove_edge(st, x, static_cast<int>(k), touched);
    }
    const auto& pred = g_.pred[uy];
    for (int p : pred) {
      if (p == x) continue;
      const auto& ps = g_.succ[static_cast<std::size_t>(p)];
      remove_edge(st, p, static_cast<int>(std::find(ps.begin(), ps.end(), y) - ps.begin()), touched);
    }
    if (head == y) return true;  // closes the full cycle
    st.other_end[static_cast<std::size_t>(head)] = tail;
    st.other_end[static_cast<std::size_t>(tail)] = head;
    if (st.committed + 1 < count_) {
      const auto& ts = g_.succ[static_cast<std::size_t>(tail)];
      const auto it = std::find(ts.begin(), ts.end(), head);
      if (it != ts.end()) remove_edge(st, tail, static_cast<int>(it - ts.begin()), touched);
    }
    return true;
  }

  bool propagate(State& st, std::vector<int>& work) {
    while (!work.empty()) {
      const int z = work.back();
      work.pop_back();
      const auto uz = static_cast<std::size_t>(z);
      const std::uint8_t om = st.out_mask[uz];
      const std::uint8_t im = st.in_mask[uz];
      if (om == 0 || im == 0) return false;
      if (st.next[uz] < 0 && std::popcount(om) == 1) {
        const int y = g_.succ[uz][static_cast<std::size_t>(std::countr_zero(om))];
        if (!commit(st, z, y, work)) return false;
      }
      if (st.prev[uz] < 0 && std::popcount(im) == 1) {
        const int x = g_.pred[uz][static_cast<std::size_t>(std::countr_zero(im))];
        if (!commit(st, x, z, work)) return false;
      }
    }
    return true;
  }

  // Every vertex must lie on one cycle, so the allowed edges must leave the
  // graph strongly connected.
  bool strongly_connected(const State& st) {
    const auto n = static_cast<std::size_t>(count_);
    for (int pass = 0; pass < 2; ++pass) {
      seen_.assign(n, 0);
      queue_.assign(1, 0);
      seen_[0] = 1;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        const auto x = static_cast<std::size_t>(queue_[head]);
        const auto& adj = pass == 0 ? g_.succ[x] : g_.pred[x];
        const std::uint8_t mask = pass == 0 ? st.out_mask[x] : st.in_mask[x];
        for (std::size_t k = 0; k < adj.size(); ++k) {
          const auto y = static_cast<std::size_t>(adj[k]);
          if (!(mask >> k & 1u) || seen_[y]) continue;
          seen_[y] = 1;
          queue_.push_back(static_cast<int>(y));
        }
      }
      if (queue_.size() != n) return false;
    }
    return true;
  }

  const Digraph& g_;
  int count_;
  std::vector<std::vector<int>> pred_slot_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> queue_;
};

// Every tau move advances the color by one, so a cycle through all vertices
// crosses the color classes in order and restricts to a perfect matching
// between each class and the next. Such a cycle exists iff some choice of
// matchings composes to a single cycle on class 0. The reachable bijections
// from class 0 are deduplicated class by class (entries packed 4 bits each).
// Returns nullopt when classes are uneven or too large, or on budget cutoff.
std::optional<bool> layered_hamiltonian_exists(const Digraph& g, std::uint64_t budget, std::uint64_t& used) {
  const int n = g.n;
  std::vector<std::vector<int>> layer(static_cast<std::size_t>(n));
  std::vector<int> local(g.words.size());
  for (std::size_t v = 0; v < g.words.size(); ++v) {
    auto& l = layer[static_cast<std::size_t>(g.color[v])];
    local[v] = static_cast<int>(l.size());
    l.push_back(static_cast<int>(v));
  }
  const std::size_t size = layer[0].size();
  for (const auto& l : layer) {
    if (l.size() != size) return std::nullopt;
  }
  if (size == 0 || size > 16) return std::nullopt;

  using Perm = std::uint64_t;
  auto entry = [](Perm p, std::size_t i) { return static_cast<int>((p >> (4 * i)) & 15u); };

  std::vector<std::vector<std::vector<int>>> matchings(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const auto& from = layer[static_cast<std::size_t>(c)];
    auto& out = matchings[static_cast<std::size_t>(c)];
    std::vector<int> current;
    auto extend = [&](auto&& self, std::size_t i, unsigned taken) -> bool {
      if (++used > budget) return false;
      if (i == from.size()) {
        out.push_back(current);
        return true;
      }
      for (int u : g.succ[static_cast<std::size_t>(from[i])]) {
        const int b = local[static_cast<std::size_t>(u)];
        if (taken >> b & 1u) continue;
        current.push_back(b);
        if (!self(self, i + 1, taken | 1u << b)) return false;
        current.pop_back();
      }
      return true;
    };
    if (!extend(extend, 0, 0)) return std::nullopt;
    if (out.empty()) return false;
  }

  Perm identity = 0;
  for (std::size_t i = 0; i < size; ++i) identity |= static_cast<Perm>(i) << (4 * i);
  std::vector<Perm> reach{identity};
  constexpr std::size_t kChunk = 1u << 22;
  for (int c = 0; c + 1 < n; ++c) {
    const auto& ms = matchings[static_cast<std::size_t>(c)];
    std::vector<Perm> next;
    for (std::size_t b = 0; b < reach.size(); b += kChunk) {
      const std::size_t e = std::min(reach.size(), b + kChunk);
      if ((used += (e - b) * ms.size()) > budget) return std::nullopt;
      std::vector<Perm> fresh;
      fresh.reserve((e - b) * ms.size());
      for (std::size_t k = b; k < e; ++k) {
        for (const auto& m : ms) {
          Perm q = 0;
          for (std::size_t i = 0; i < size; ++i) {
            q |= static_cast<Perm>(m[static_cast<std::size_t>(entry(reach[k], i))]) << (4 * i);
          }
          fresh.push_back(q);
        }
      }
      std::sort(fresh.begin(), fresh.end());
      fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
      std::vector<Perm> merged;
      merged.reserve(next.size() + fresh.size());
      std::set_union(next.begin(), next.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
      next.swap(merged);
    }
    reach.swap(next);
  }
  const auto& last = matchings[static_cast<std::size_t>(n - 1)];
  if ((used += reach.size() * last.size()) > budget) return std::nullopt;
  for (Perm p : reach) {
    for (const auto& m : last) {
      std::size_t x = 0;
      std::size_t steps = 0;
      do {
        x = static_cast<std::size_t>(m[static_cast<std::size_t>(entry(p, x))]);
        ++steps;
      } while (x != 0);
      if (steps == size) return true;
    }
  }
  return false;
}

}  // namespace

SearchResult longest_code(int n, int w, const SearchOptions& options) {
  if (n < 2 || n > 64 || w < 1 || w > n - 1) {
    throw Error(ErrorKind::Domain, "longest_code needs 1 <= w <= n-1 and n <= 64");
  }
  if (binomial(n, w) > 1'000'000) {
    throw Error(ErrorKind::Resource, "C(n, w) exceeds the search cap 10^6");
  }
  if (options.budget == 0) throw Error(ErrorKind::Domain, "search budget must be positive");

  const Digraph g = build_digraph(n, w);
  std::vector<int> starts;
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    if (!options.quotient_rotations || g.rep_of[i] == static_cast<int>(i)) starts.push_back(static_cast<int>(i));
  }

  // Root bound: every word, and for cycles an equal count of each color.
  std::int64_t upper = static_cast<std::int64_t>(g.words.size());
  if (options.cyclic) {
    upper = n * *std::min_element(g.color_total.begin(), g.color_total.end());
  }

  SearchResult out;
  out.n = n;
  out.w = w;
  out.cyclic = options.cyclic;

  // With uniform colors a full-length cycle is possible in principle. Settle
  // that case first on at most half the budget: an exact existence test over
  // the color classes, then an ordered search for the least witness.
  std::uint64_t spent = 0;
  const auto vertices = static_cast<std::int64_t>(g.words.size());
  if (options.cyclic && options.hamiltonian_phase && upper == vertices && vertices > 2) {
    const std::uint64_t phase_budget = options.budget / 2;
    const auto exists = layered_hamiltonian_exists(g, phase_budget, spent);
    if (exists == false) {
      upper -= n;  // colors force lengths in multiples of n
    } else if (spent < phase_budget) {
      const auto ham = HamiltonianSearch(g).run(phase_budget, spent);
      if (ham.found) {
        out.best_length = vertices;
        out.exhausted = true;
        out.expansions = spent;
        std::vector<Word> words;
        for (int v : ham.path) words.push_back(g.words[static_cast<std::size_t>(v)]);
        out.witness = GrayCode::from_words(std::move(words), true);
        return out;
      }
      if (!ham.out_of_budget) upper -= n;
    }
    spent = std::min(spent, phase_budget);
  }

  Shared shared;
  shared.expansions = spent;
  std::vector<StartResult> results(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    PathSearch search(g, options, shared, upper);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= starts.size()) break;
      results[i] = search.run(static_cast<int>(i), starts[i]);
    }
  };
  const int lanes = std::max(1, options.workers);
  if (lanes == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < lanes; ++t) threads.emplace_back(worker);
  }

  out.exhausted = !shared.out_of_budget.load();
  out.expansions = std::min(shared.expansions.load(), options.budget);
  const StartResult* best = nullptr;
  for (const auto& r : results) {
    if (r.length > 0 && (best == nullptr || r.length > best->length)) best = &r;
  }
  if (best != nullptr) {
    out.best_length = best->length;
    std::vector<Word> words;
    words.reserve(best->path.size());
    for (int v : best->path) words.push_back(g.words[static_cast<std::size_t>(v)]);
    out.witness = GrayCode::from_words(std::move(words), options.cyclic);
  }
  return out;
}

SingleTrackSearchResult single_track_search(int n, int w, std::uint64_t budget) {
  if (n < 2 || w < 1 || w > n - 1) throw Error(ErrorKind::Domain, "need 1 <= w <= n-1");
  if (binomial(n, w) > 1'000'000) {
    throw Error(ErrorKind::Resource, "C(n, w) exceeds the search cap 10^6");
  }
  // Full-period necklace representatives, ascending.
  std::set<Word> rep_set;
  for_each_combination(n, w, [&](const std::vector<int>& pos) {
    const Word v = Word::from_positions(n, pos);
    if (is_full_period(v)) rep_set.insert(necklace_canonical_rep(v));
  });
  const std::vector<Word> reps(rep_set.begin(), rep_set.end());
  std::unordered_map<Word, int, WordHash> rep_id;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_id.emplace(reps[i], static_cast<int>(i));

  SingleTrackSearchResult out;
  out.n = n;
  out.w = w;
  out.full_period_necklaces = static_cast<std::int64_t>(reps.size());
  out.exhausted = true;

  std::vector<std::uint8_t> used(reps.size(), 0);
  std::vector<Word> path;
  std::uint64_t expansions = 0;

  // Any window of |G'| consecutive words of a lifted code is again a valid
  // G', so the search may start at the least necklace it uses, in its
  // representative rotation.
  for (std::size_t s = 0; s < reps.size() && out.exhausted; ++s) {
    const int start = static_cast<int>(s);
    struct Frame {
      std::vector<Successor> children;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    auto enter = [&](const Word& v) {
      path.push_back(v);
      used[static_cast<std::size_t>(rep_id.at(necklace_canonical_rep(v)))] = 1;
      stack.push_back({constant_weight_successors(v), 0});
    };
    auto leave = [&] {
      used[static_cast<std::size_t>(rep_id.at(necklace_canonical_rep(path.back())))] = 0;
      path.pop_back();
      stack.pop_back();
    };
    enter(reps[s]);
    bool fresh = true;
    while (!stack.empty()) {
      if (fresh) {
        fresh = false;
        if (++expansions > budget) {
          out.exhausted = false;
          break;
        }
        const auto len = static_cast<std::int64_t>(path.size());
        if (len > out.best_base_length) {
          for (const auto& succ : stack.back().children) {
            if (necklace_canonical_rep(succ.word) != reps[s]) continue;
            int r = 0;
            while (cyclic_shift(reps[s], r) != succ.word) ++r;
            if (std::gcd(r, n) == 1) {
              out.best_base_length = len;
              out.shift = r;
              out.base = path;
              break;
            }
          }
        }
        std::int64_t remaining = 0;
        for (std::size_t k = s + 1; k < reps.size(); ++k) remaining += used[k] ? 0 : 1;
        if (len + remaining <= out.best_base_length) {
          leave();
          continue;
        }
      }
      Frame& top = stack.back();
      bool descended = false;
      while (top.next < top.children.size()) {
        const Word& u = top.children[top.next++].word;
        const int id = rep_id.count(necklace_canonical_rep(u)) ? rep_id.at(necklace_canonical_rep(u)) : -1;
        if (id <= start || used[static_cast<std::size_t>(id)]) continue;
        enter(u);
        fresh = true;
        descended = true;
        break;
      }
      if (!descended) leave();
    }
    while (!stack.empty()) leave();
  }
  out.expansions = std::min(expansions, budget);
  return out;
}

ValidationReport reverify(const GrayCode& code, bool expect_single_track) {
  ValidationReport report;
  report.checked_properties = {"ambient-space", "distinct", "tau-adjacent"};
  if (code.cyclic) report.checked_properties.push_back("cyclic");
  if (code.w) {
    report.checked_properties.push_back("constant-weight");
    report.checked_properties.push_back("color-step");
  }
  if (expect_single_track) report.checked_properties.push_back("single-track");

  std::vector<std::string> rows;
  rows.reserve(code.words.size());
  for (const auto& v : code.words) rows.push_back(v.to_string());
  const std::size_t count = rows.size();
  const std::size_t n = static_cast<std::size_t>(code.n);

  auto chi = [&](const std::string& s) {
    std::size_t sum = 0;
    for (std::size_t j = 0; j < s.size(); ++j) sum += s[j] == '1' ? j : 0;
    return sum % n;
  };

  std::set<std::string> seen;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& s = rows[i];
    if (s.size() != n) {
      report.fail(i, "length mismatch");
      continue;
    }
    if (s.find('0') == std::string::npos || s.find('1') == std::string::npos) {
      report.fail(i, "word not in S(n)");
    }
    if (code.w && static_cast<int>(std::count(s.begin(), s.end(), '1')) != *code.w) {
      report.fail(i, "weight differs from " + std::to_string(*code.w));
    }
    if (!seen.insert(s).second) report.fail(i, "repeated word");
  }

  auto adjacent = [&](const std::string& a, const std::string& b) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string t = a;
      t[j] = '0';
      t[(j + 1) % n] = '1';
      if (t == b && t != a) return true;
    }
    return false;
  };
  const std::size_t steps = code.cyclic ? count : (count == 0 ? 0 : count - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const std::string& a = rows[i];
    const std::string& b = rows[(i + 1) % count];
    if (a.size() != n || b.size() != n) continue;
    if (count > 1 && !adjacent(a, b)) {
      report.fail(i, "no tau step to the next word");
    }
    if (code.w && count > 1 && chi(b) != (chi(a) + 1) % n) {
      report.fail(i, "color does not advance by 1");
    }
  }

  if (expect_single_track && count > 1) {
    std::vector<std::string> cols(n, std::string(count, '0'));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t c = 0; c < n && c < rows[i].size(); ++c) cols[c][i] = rows[i][c];
    }
    const std::string doubled = cols[0] + cols[0];
    for (std::size_t c = 1; c < n; ++c) {
      if (doubled.find(cols[c]) == std::string::npos) {
        report.fail(c, "column is not a cyclic shift of column 0");
      }
    }
  }
  return report;
}

}  // namespace lrmgray
