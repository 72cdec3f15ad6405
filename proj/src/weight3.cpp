#include "lrmgray/weight3.hpp"

#include <numeric>
#include <stdexcept>
#include <set>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

std::string show(const Configuration& c) {
  return "(" + std::to_string(c.d0) + ", " + std::to_string(c.d1) + ", " +
         std::to_string(c.d2) + ")";
}

std::array<int, 3> sorted_ones(const Word& v) {
  const auto ones = v.ones();
  if (ones.size() != 3) {
    throw Error(ErrorKind::Domain, "weight-3 word expected, got " + v.to_string());
  }
  return {ones[0], ones[1], ones[2]};
}

// Rotation r of the gap triple starting at the r-th smallest 1.
Configuration rotation(const Configuration& c, int r) {
  switch (r % 3) {
    case 0: return c;
    case 1: return {c.d1, c.d2, c.d0};
    default: return {c.d2, c.d0, c.d1};
  }
}

void check_base(std::span<const Word> base, int shift, int n) {
  if (std::gcd(static_cast<int>(mod(shift, n)), n) != 1) {
    throw Error(ErrorKind::Precondition,
                "lift shift must be coprime to n: gcd(" + std::to_string(n) + ", " +
                    std::to_string(mod(shift, n)) + ") = " +
                    std::to_string(std::gcd(static_cast<int>(mod(shift, n)), n)));
  }
  std::set<Word> reps;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].size() != n) throw Error(ErrorKind::Precondition, "mixed word lengths");
    if (!is_full_period(base[i])) {
      throw Error(ErrorKind::Precondition,
                  "base word " + base[i].to_string() + " is not full period");
    }
    if (!reps.insert(necklace_canonical_rep(base[i])).second) {
      throw Error(ErrorKind::Precondition,
                  "base word " + base[i].to_string() + " repeats a necklace");
    }
  }
}

}  // namespace

char to_char(MoveKind m) noexcept {
  switch (m) {
    case MoveKind::A: return 'A';
    case MoveKind::B: return 'B';
    case MoveKind::C: return 'C';
  }
  return '?';
}

Configuration configuration(const Word& v) {
  const int n = v.size();
  const auto [i0, i1, i2] = sorted_ones(v);
  return {i1 - i0, i2 - i1, static_cast<int>(mod(i0 - i2, n))};
}

bool is_canonical(const Configuration& c, int n) noexcept {
  const int third = n / 3;
  return c.d0 >= 1 && c.d1 >= 1 && c.d2 >= 1 && c.sum() == n && c.d1 <= third &&
         c.d2 > third;
}

std::optional<Configuration> canonical_rotation(const Configuration& c, int n) {
  for (int r = 0; r < 3; ++r) {
    const Configuration rc = rotation(c, r);
    if (is_canonical(rc, n)) return rc;
  }
  return std::nullopt;
}

int canonical_anchor(const Word& v) {
  const int n = v.size();
  const auto ones = sorted_ones(v);
  const Configuration c = configuration(v);
  for (int r = 0; r < 3; ++r) {
    if (is_canonical(rotation(c, r), n)) return ones[static_cast<std::size_t>(r)];
  }
  throw Error(ErrorKind::Domain,
              "word " + v.to_string() + " has no canonical configuration (not full period)");
}

Configuration canonicalize(const Word& v) {
  const Configuration c = configuration(v);
  if (auto rc = canonical_rotation(c, v.size())) return *rc;
  throw Error(ErrorKind::Domain,
              "word " + v.to_string() + " has no canonical configuration (not full period)");
}

Configuration displace(const Configuration& c, MoveKind m) noexcept {
  switch (m) {
    case MoveKind::A: return {c.d0 + 1, c.d1 - 1, c.d2};
    case MoveKind::B: return {c.d0, c.d1 + 1, c.d2 - 1};
    case MoveKind::C: return {c.d0 - 1, c.d1, c.d2 + 1};
  }
  return c;
}

int move_transition(const Word& v, MoveKind m) {
  const int n = v.size();
  const Configuration c = canonicalize(v);
  const Configuration target = displace(c, m);
  if (!is_canonical(target, n)) {
    throw Error(ErrorKind::InvalidMove, std::string("move ") + to_char(m) + " from " +
                                            show(c) + " leads to non-canonical " +
                                            show(target));
  }
  const int anchor = canonical_anchor(v);
  int offset = 0;
  switch (m) {
    case MoveKind::A: offset = c.d0; break;
    case MoveKind::B: offset = c.d0 + c.d1; break;
    case MoveKind::C: offset = 0; break;
  }
  return static_cast<int>(mod(anchor + offset, n));
}

Word apply_move(const Word& v, MoveKind m) {
  const int j = move_transition(v, m);
  Word r = apply_tau(v, j);
  const Configuration expected = displace(canonicalize(v), m);
  if (canonicalize(r) != expected) {
    throw std::logic_error("apply_move: canonical configuration mismatch");
  }
  return r;
}

std::int64_t serpentine_length(int n) {
  if (n < 9) throw Error(ErrorKind::Domain, "serpentine needs n >= 9");
  static constexpr std::array<std::array<std::int64_t, 2>, 9> kTerms{{
      {-5, 18}, {-5, 22}, {-5, 24}, {-7, 30}, {-7, 30},
      {-7, 28}, {-9, 36}, {-9, 32}, {-9, 26},
  }};
  const auto& t = kTerms[static_cast<std::size_t>(n % 9)];
  const std::int64_t nn = n;
  return (nn * nn + t[0] * nn + t[1]) / 6;
}

ConfigPath serpentine_path(int n) {
  if (n < 9) throw Error(ErrorKind::Domain, "serpentine needs n >= 9");
  const int third = n / 3;
  const int climb = 3 * (third / 3);
  const Configuration start{1, 1, n - 2};

  ConfigPath path;
  path.n = n;
  path.steps.push_back(start);
  std::set<Configuration> seen{start};

  Configuration cur = start;
  while (true) {
    const auto [d0, d1, d2] = cur;
    MoveKind m;
    if (d0 == 1 && d1 < climb) {
      m = MoveKind::B;  // climb the d0 = 1 row
    } else if (d1 % 3 == 0) {
      m = MoveKind::A;  // zigzag: right column back to left column
    } else if (d1 % 3 == 2 && d2 > third + 1) {
      m = MoveKind::B;  // zigzag: left column to right column
    } else if (d1 % 3 == 2) {
      m = MoveKind::A;  // bottom of the zigzag: drop into the return column
    } else if (d0 > 2) {
      m = MoveKind::C;  // return column, heading back up
    } else if (d1 > 1) {
      m = MoveKind::A;  // top of a return column: enter the next column pair
    } else {
      m = MoveKind::C;  // (2, 1, n-3) closes onto (1, 1, n-2)
    }
    const Configuration next = displace(cur, m);
    path.moves.push_back(m);
    if (next == start) break;
    if (!is_canonical(next, n) || !seen.insert(next).second) {
      throw std::logic_error("serpentine_path: invalid step to " + show(next) +
                             " for n=" + std::to_string(n));
    }
    path.steps.push_back(next);
    cur = next;
  }
  path.closed = true;
  return path;
}

RealizedPath realize_path(int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < 3 && i < n; ++i) bits[static_cast<std::size_t>(i)] = 1;
  return realize_path(n, Word(std::move(bits)));
}

RealizedPath realize_path(int n, const Word& seed) {
  if (seed.size() != n || seed.weight() != 3 || !is_full_period(seed) ||
      canonicalize(seed) != Configuration{1, 1, n - 2}) {
    throw Error(ErrorKind::Domain, "seed must be a weight-3 word with canonical "
                                   "configuration (1, 1, n-2)");
  }
  const ConfigPath path = serpentine_path(n);

  // Positions of the three ones, labelled in canonical order from the anchor.
  const int anchor = canonical_anchor(seed);
  std::array<std::int64_t, 3> pos{anchor, anchor + 1, anchor + 2};
  // Which seed-order 1 each label refers to (seed order = increasing index).
  const auto seed_ones = seed.ones();
  std::array<std::size_t, 3> seed_slot{};
  for (std::size_t label = 0; label < 3; ++label) {
    for (std::size_t s = 0; s < 3; ++s) {
      if (seed_ones[s] == mod(pos[label], n)) seed_slot[label] = s;
    }
  }

  auto word_at = [&] {
    const std::array<int, 3> ones{static_cast<int>(mod(pos[0], n)),
                                  static_cast<int>(mod(pos[1], n)),
                                  static_cast<int>(mod(pos[2], n))};
    return Word::from_positions(n, ones);
  };

  RealizedPath out{.words = {}, .transitions = {}, .closing_word = seed};
  out.words.reserve(path.steps.size());
  out.transitions.reserve(path.moves.size());
  out.words.push_back(seed);
  for (std::size_t i = 0; i < path.moves.size(); ++i) {
    std::size_t label = 0;
    switch (path.moves[i]) {
      case MoveKind::C: label = 0; break;
      case MoveKind::A: label = 1; break;
      case MoveKind::B: label = 2; break;
    }
    out.transitions.push_back(static_cast<int>(mod(pos[label], n)));
    ++pos[label];
    ++out.push_counts[seed_slot[label]];
    if (i + 1 < path.moves.size()) {
      out.words.push_back(word_at());
    } else {
      out.closing_word = word_at();
    }
  }
  for (int r = 0; r < n; ++r) {
    if (cyclic_shift(seed, r) == out.closing_word) {
      out.shift = r;
      break;
    }
  }
  return out;
}

GrayCode lift_single_track(std::span<const Word> base, int shift) {
  if (base.empty()) throw Error(ErrorKind::Precondition, "empty base code");
  const int n = base.front().size();
  check_base(base, shift, n);

  std::vector<int> inner;
  inner.reserve(base.size());
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    const auto j = find_transition(base[i], base[i + 1]);
    if (!j) {
      throw Error(ErrorKind::Precondition, "base words " + std::to_string(i) + " and " +
                                               std::to_string(i + 1) +
                                               " are not tau-adjacent");
    }
    inner.push_back(*j);
  }
  const auto seam = find_transition(base.back(), cyclic_shift(base.front(), shift));
  if (!seam) {
    throw Error(ErrorKind::Seam, "E^" + std::to_string(shift) +
                                     " of the first base word is not a tau image of "
                                     "the last base word");
  }
  inner.push_back(*seam);

  GrayCode code;
  code.n = n;
  code.w = base.front().weight();
  code.cyclic = true;
  code.words.reserve(base.size() * static_cast<std::size_t>(n));
  code.transitions.reserve(base.size() * static_cast<std::size_t>(n));
  for (int copy = 0; copy < n; ++copy) {
    const std::int64_t offset = mod(static_cast<std::int64_t>(copy) * shift, n);
    for (std::size_t i = 0; i < base.size(); ++i) {
      code.words.push_back(cyclic_shift(base[i], offset));
      code.transitions.push_back(static_cast<int>(mod(inner[i] + offset, n)));
    }
  }
  return code;
}

bool is_admissible(int n) {
  const std::int64_t third = serpentine_length(n) / 3;
  return std::gcd(static_cast<std::int64_t>(n), third) == 1;
}

GrayCode build_weight3(int n) {
  if (n < 9) throw Error(ErrorKind::Domain, "weight-3 construction needs n >= 9");
  const std::int64_t third = serpentine_length(n) / 3;
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(n), third);
  if (g != 1) {
    throw Error(ErrorKind::Precondition, "gcd(" + std::to_string(n) + ", " +
                                             std::to_string(third) + ") \u2260 1 (it is " +
                                             std::to_string(g) + ")");
  }
  const RealizedPath path = realize_path(n);
  return lift_single_track(path.words, static_cast<int>(third % n));
}

std::optional<std::string> admissible_residue_class(int n) {
  struct ResidueClass {
    int modulus;
    std::vector<int> residues;
  };
  static const std::vector<ResidueClass> kClasses{
      {18, {7, 11}},
      {90, {13, 31, 49, 67}},
      {126, {5, 23, 41, 59, 95, 113}},
      {198, {1, 19, 37, 73, 91, 109, 127, 145, 163, 181}},
      {234, {17, 35, 53, 71, 89, 107, 125, 161, 179, 197, 215, 233}},
  };
  for (const auto& cls : kClasses) {
    const int r = n % cls.modulus;
    for (int residue : cls.residues) {
      if (r != residue) continue;
      std::string label;
      for (std::size_t i = 0; i < cls.residues.size(); ++i) {
        if (i) label += ", ";
        label += std::to_string(cls.residues[i]);
      }
      return label + " (mod " + std::to_string(cls.modulus) + ")";
    }
  }
  return std::nullopt;
}

SingleTrackIndex::SingleTrackIndex(std::vector<Word> base, int shift)
    : n_(base.empty() ? 0 : base.front().size()), shift_(0), shift_inverse_(0),
      base_(std::move(base)) {
  if (base_.empty()) throw Error(ErrorKind::Precondition, "empty base code");
  check_base(base_, shift, n_);
  shift_ = static_cast<int>(mod(shift, n_));
  for (int x = 1; x < n_; ++x) {
    if (mod(static_cast<std::int64_t>(x) * shift_, n_) == 1) shift_inverse_ = x;
  }
  for (std::size_t i = 0; i < base_.size(); ++i) {
    necklace_.emplace(necklace_canonical_rep(base_[i]), i);
  }
}

std::size_t SingleTrackIndex::rank(const Word& v) const {
  if (v.size() != n_) throw Error(ErrorKind::NotFound, "word length mismatch");
  const auto it = necklace_.find(necklace_canonical_rep(v));
  if (it == necklace_.end()) {
    throw Error(ErrorKind::NotFound, "word " + v.to_string() + " is not in the code");
  }
  const Word& b = base_[it->second];
  for (int r = 0; r < n_; ++r) {
    if (cyclic_shift(b, r) == v) {
      const auto copy = static_cast<std::size_t>(mod(static_cast<std::int64_t>(r) * shift_inverse_, n_));
      return copy * base_.size() + it->second;
    }
  }
  throw Error(ErrorKind::NotFound, "word " + v.to_string() + " is not in the code");
}

Word SingleTrackIndex::unrank(std::size_t i) const {
  if (i >= size()) throw Error(ErrorKind::NotFound, "rank out of range");
  const std::size_t copy = i / base_.size();
  const std::size_t offset = i % base_.size();
  return cyclic_shift(base_[offset], mod(static_cast<std::int64_t>(copy) * shift_, n_));
}

Word SingleTrackIndex::next_word(const Word& v) const {
  return unrank((rank(v) + 1) % size());
}

}  // namespace lrmgray
