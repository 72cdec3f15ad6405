#include "lrmgray/words.hpp"

#include <algorithm>
#include <numeric>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

// KMP occurrence test of pattern inside the cyclic sequence text.
bool is_rotation_of(const std::vector<std::uint8_t>& pattern,
                    const std::vector<std::uint8_t>& text) {
  const std::size_t m = pattern.size();
  if (m != text.size()) return false;
  if (m == 0) return true;
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < 2 * m - 1; ++i) {
    const auto c = text[i % m];
    while (k > 0 && c != pattern[k]) k = fail[k - 1];
    if (c == pattern[k]) ++k;
    if (k == m) return true;
  }
  return false;
}

}  // namespace

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) {
    throw Error(ErrorKind::Domain, "word length must be at least 2");
  }
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorKind::Domain, "word bits must be 0 or 1");
  }
}

Word Word::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::Parse,
                  "invalid character in word '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

Word Word::from_positions(int n, std::span<const int> ones) {
  if (n < 2) throw Error(ErrorKind::Domain, "word length must be at least 2");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  for (int p : ones) bits[static_cast<std::size_t>(mod(p, n))] = 1;
  return Word(std::move(bits));
}

Word Word::zeros(int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "word length must be at least 2");
  return Word(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

int Word::weight() const noexcept {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<int> Word::ones() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

bool Word::in_ambient_space() const noexcept {
  const int wt = weight();
  return wt != 0 && wt != size();
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word Word::with_bit(std::int64_t i, int value) const {
  Word copy = *this;
  copy.bits_[static_cast<std::size_t>(mod(i, size()))] =
      static_cast<std::uint8_t>(value != 0);
  return copy;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the bit bytes.
  std::size_t h = 1469598103934665603ULL;
  for (auto b : w.bits()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

Word apply_tau(const Word& v, int j) {
  if (!v.in_ambient_space()) {
    throw Error(ErrorKind::AmbientSpace,
                "tau applied to " + v.to_string() + " outside S(n)");
  }
  if (j < 0 || j >= v.size()) {
    throw Error(ErrorKind::Domain, "tau index out of range");
  }
  Word r = v.with_bit(j, 0).with_bit(j + 1, 1);
  if (!r.in_ambient_space()) {
    throw Error(ErrorKind::AmbientSpace,
                "tau_" + std::to_string(j) + "(" + v.to_string() +
                    ") leaves S(n)");
  }
  return r;
}

bool is_constant_weight_window(const Word& v, int j) {
  return v.bit(j) == 1 && v.bit(j + 1) == 0;
}

std::vector<Successor> constant_weight_successors(const Word& v) {
  std::vector<Successor> out;
  for (int j = 0; j < v.size(); ++j) {
    if (is_constant_weight_window(v, j)) {
      out.push_back({j, v.with_bit(j, 0).with_bit(j + 1, 1)});
    }
  }
  return out;
}

std::optional<int> find_transition(const Word& from, const Word& to) {
  if (from.size() != to.size() || from == to) return std::nullopt;
  const int n = from.size();
  for (int j = 0; j < n; ++j) {
    if (to.bit(j) != 0 || to.bit(j + 1) != 1) continue;
    bool rest_equal = true;
    for (int k = 0; k < n && rest_equal; ++k) {
      if (k == j || k == (j + 1) % n) continue;
      rest_equal = from.bit(k) == to.bit(k);
    }
    if (rest_equal) return j;
  }
  return std::nullopt;
}

Word cyclic_shift(const Word& v, std::int64_t m) {
  const int n = v.size();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    bits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v.bit(k - m));
  }
  return Word(std::move(bits));
}

int period(const Word& v) {
  const int n = v.size();
  for (int i = 1; i < n; ++i) {
    if (n % i != 0) continue;
    bool same = true;
    for (int k = 0; k < n && same; ++k) same = v.bit(k) == v.bit(k + i);
    if (same) return i;
  }
  return n;
}

bool is_full_period(const Word& v) { return period(v) == v.size(); }

Word necklace_canonical_rep(const Word& v) {
  Word best = v;
  for (int m = 1; m < v.size(); ++m) {
    Word r = cyclic_shift(v, m);
    if (r < best) best = std::move(r);
  }
  return best;
}

GrayCode GrayCode::from_words(std::vector<Word> words, bool cyclic) {
  GrayCode code;
  code.cyclic = cyclic;
  if (!words.empty()) {
    code.n = words.front().size();
    const int wt = words.front().weight();
    const bool constant = std::all_of(words.begin(), words.end(),
                                      [&](const Word& x) { return x.weight() == wt; });
    if (constant) code.w = wt;
  }
  const std::size_t count = words.size();
  const std::size_t edges = cyclic ? count : (count == 0 ? 0 : count - 1);
  code.transitions.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const Word& a = words[i];
    const Word& b = words[(i + 1) % count];
    code.transitions.push_back(find_transition(a, b).value_or(-1));
  }
  code.words = std::move(words);
  return code;
}

void ValidationReport::fail(std::size_t position, std::string reason) {
  ok = false;
  failures.push_back({position, std::move(reason)});
}

ValidationReport validate_code(const GrayCode& code, bool expect_constant_weight,
                               bool expect_cyclic) {
  ValidationReport report;
  report.checked_properties = {"ambient-space", "distinct", "tau-adjacent"};
  if (expect_constant_weight) report.checked_properties.push_back("constant-weight");
  if (expect_cyclic) report.checked_properties.push_back("cyclic");

  const std::size_t count = code.words.size();
  const int n = code.n;
  const int wt = count > 0 ? code.words.front().weight() : 0;

  std::unordered_map<Word, std::size_t, WordHash> seen;
  seen.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Word& v = code.words[i];
    if (v.size() != n) {
      report.fail(i, "length " + std::to_string(v.size()) + " != n");
      continue;
    }
    if (!v.in_ambient_space()) report.fail(i, "word not in S(n)");
    if (expect_constant_weight && v.weight() != wt) {
      report.fail(i, "weight " + std::to_string(v.weight()) + " != " +
                         std::to_string(wt));
    }
    auto [it, inserted] = seen.emplace(v, i);
    if (!inserted) {
      report.fail(i, "duplicate of position " + std::to_string(it->second));
    }
  }

  auto check_step = [&](std::size_t i, std::size_t next, std::size_t t) {
    const Word& a = code.words[i];
    const Word& b = code.words[next];
    if (a.size() != n || b.size() != n) return;
    const int recorded = t < code.transitions.size() ? code.transitions[t] : -1;
    if (recorded < 0 || recorded >= n) {
      report.fail(i, "no tau transition to next word");
      return;
    }
    if (!a.in_ambient_space()) return;
    Word image = a.with_bit(recorded, 0).with_bit(recorded + 1, 1);
    if (image != b) {
      report.fail(i, "tau_" + std::to_string(recorded) + " does not reach next word");
    }
  };

  for (std::size_t i = 0; i + 1 < count; ++i) check_step(i, i + 1, i);
  if (expect_cyclic) {
    if (!code.cyclic) report.fail(count == 0 ? 0 : count - 1, "code not marked cyclic");
    if (count > 1) check_step(count - 1, 0, count - 1);
  }
  return report;
}

Rational efficiency(const GrayCode& code) {
  if (!code.w) throw Error(ErrorKind::Domain, "efficiency needs a constant-weight code");
  return Rational(static_cast<std::int64_t>(code.size()), binomial(code.n, *code.w));
}

bool is_single_track(const GrayCode& code) {
  const std::size_t rows = code.words.size();
  if (rows <= 1) return true;
  auto column = [&](int c) {
    std::vector<std::uint8_t> col(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      col[i] = static_cast<std::uint8_t>(code.words[i].bit(c));
    }
    return col;
  };
  const auto track = column(0);
  for (int c = 1; c < code.n; ++c) {
    if (!is_rotation_of(column(c), track)) return false;
  }
  return true;
}

CodeIndex::CodeIndex(GrayCode code) : code_(std::move(code)) {
  index_.reserve(code_.words.size());
  for (std::size_t i = 0; i < code_.words.size(); ++i) index_.emplace(code_.words[i], i);
}

std::size_t CodeIndex::rank(const Word& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw Error(ErrorKind::NotFound, "word " + v.to_string() + " is not in the code");
  }
  return it->second;
}

const Word& CodeIndex::unrank(std::size_t i) const {
  if (i >= code_.words.size()) throw Error(ErrorKind::NotFound, "rank out of range");
  return code_.words[i];
}

const Word& CodeIndex::next_word(const Word& v) const {
  return code_.words[(rank(v) + 1) % code_.words.size()];
}

}  // namespace lrmgray
