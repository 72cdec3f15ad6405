#include "lrmgray/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrmgray/chargesim.hpp"
#include "lrmgray/codefile.hpp"
#include "lrmgray/colors.hpp"
#include "lrmgray/error.hpp"
#include "lrmgray/oracle.hpp"
#include "lrmgray/weight2.hpp"
#include "lrmgray/weight3.hpp"

namespace lrmgray {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_target(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Domain, "cannot write " + path);
  file << text;
}

std::string fraction(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct GenerateArgs {
  int n = 0;
  int w = 0;
  std::string construction = "auto";
  std::string format = "text";
  std::string output;
};

int cmd_generate(const GenerateArgs& a, Io io) {
  std::string which = a.construction;
  if (which == "auto") {
    if (a.w == 2) which = "c1";
    else if (a.w == 3) which = "c2";
    else {
      io.err << "error: no construction for weight " << a.w << " (supported: 2, 3)\n";
      return kExitInfeasible;
    }
  }
  if ((which == "c1" && a.w != 2) || (which == "c2" && a.w != 3)) {
    io.err << "error: construction " << which << " needs w=" << (which == "c1" ? 2 : 3) << "\n";
    return kExitInfeasible;
  }
  GrayCode code;
  try {
    code = which == "c1" ? build_weight2(a.n) : build_weight3(a.n);
  } catch (const Error& e) {
    io.err << "error: precondition failed for n=" << a.n << ", w=" << a.w << ": " << e.what() << "\n";
    return kExitInfeasible;
  }
  const CodeFile file = make_code_file(std::move(code), which);
  write_target(a.output, a.format == "json" ? to_json(file) : to_text(file), io.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  bool cyclic = false;
  bool single_track = false;
  bool constant_weight = false;
};

void print_failures(const char* label, const ValidationReport& r, std::ostream& out) {
  out << label << ": " << (r.ok ? "ok" : "FAILED") << '\n';
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  at " << r.failures[i].position << ": " << r.failures[i].reason << '\n';
  }
  if (r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more\n";
}

int cmd_verify(const VerifyArgs& a, Io io) {
  CodeFile file;
  try {
    file = parse_code_file(read_source(a.file, io.in));
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  GrayCode code = std::move(file.code);
  const bool want_cyclic = a.cyclic || code.cyclic;
  if (want_cyclic && !code.cyclic) code = GrayCode::from_words(std::move(code.words), true);
  const bool want_cw = a.constant_weight || file.declared_w.has_value();
  const bool want_st = a.single_track || file.single_track;

  bool ok = true;
  io.out << "n=" << code.n << " size=" << code.size() << '\n';
  if (file.declared_w && code.w != file.declared_w) {
    io.out << "header: FAILED (declared w=" << *file.declared_w << " does not match the codewords)\n";
    ok = false;
  }
  const ValidationReport fast = validate_code(code, want_cw, want_cyclic);
  print_failures("validate", fast, io.out);
  const ValidationReport slow = reverify(code, want_st);
  print_failures("reverify", slow, io.out);
  ok = ok && fast.ok && slow.ok;
  if (want_st) {
    const bool st = is_single_track(code);
    io.out << "single_track: " << (st ? "ok" : "FAILED") << '\n';
    ok = ok && st;
  }
  if (code.w && !code.words.empty()) io.out << "efficiency=" << fraction(efficiency(code)) << '\n';
  io.out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_feasible(int n, int w, Io io) {
  const FeasibilityVerdict v = optimal_cyclic_feasible(n, w);
  const ColorHistogram h = color_counts_formula(n, w);
  io.out << "n=" << n << " w=" << w << " C(n,w)=" << binomial(n, w) << '\n';
  io.out << "color_histogram=" << (h.uniform() ? "uniform" : "non-uniform") << '\n';
  io.out << "color_difference=" << color_count_difference(n, w) << '\n';
  for (const auto& r : v.reasons) io.out << "ruled out by " << r.rule << ": " << r.detail << '\n';
  io.out << "verdict: " << (v.ruled_out() ? "ruled out" : "possible") << '\n';
  return v.ruled_out() ? kExitInfeasible : kExitOk;
}

int cmd_colors(int n, int w, const std::string& mode, Io io) {
  const bool formula = mode != "brute";
  const bool brute = mode != "formula";
  ColorHistogram f;
  ColorHistogram b;
  if (formula) f = color_counts_formula(n, w);
  if (brute) b = color_counts_bruteforce(n, w);
  io.out << "color";
  if (formula) io.out << "\tformula";
  if (brute) io.out << "\tbrute";
  io.out << '\n';
  bool ok = true;
  for (int a = 0; a < n; ++a) {
    io.out << a;
    if (formula) io.out << '\t' << f.counts[static_cast<std::size_t>(a)];
    if (brute) io.out << '\t' << b.counts[static_cast<std::size_t>(a)];
    if (formula && brute && f.counts[static_cast<std::size_t>(a)] != b.counts[static_cast<std::size_t>(a)]) {
      io.out << "\tMISMATCH";
      ok = false;
    }
    io.out << '\n';
  }
  if (formula && brute) io.out << "result: " << (ok ? "agree" : "MISMATCH") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_simulate(const std::string& path, int laps, const std::string& format, Io io) {
  CodeFile file;
  try {
    file = parse_code_file(read_source(path, io.in));
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  TraversalStats s;
  try {
    s = traverse(file.code, laps);
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::TraversalIntegrity ? kExitVerifyFailed : kExitInfeasible;
  }
  const bool within = s.max_jump <= s.jump_bound;
  if (format == "json") {
    nlohmann::json j{{"steps", s.steps},
                     {"laps", laps},
                     {"max_jump", s.max_jump},
                     {"jump_bound", s.jump_bound},
                     {"max_level", s.max_level},
                     {"diff_multiset_preserved", s.diff_multiset_preserved},
                     {"within_bound", within}};
    io.out << j.dump(1) << '\n';
  } else {
    io.out << "steps=" << s.steps << '\n'
           << "max_jump=" << s.max_jump << '\n'
           << "jump_bound=" << s.jump_bound << '\n'
           << "max_level=" << s.max_level << '\n'
           << "diff_multiset_preserved=" << (s.diff_multiset_preserved ? "true" : "false") << '\n'
           << "result: " << (within ? "PASS" : "FAIL (jump above bound)") << '\n';
  }
  return within ? kExitOk : kExitVerifyFailed;
}

struct SearchArgs {
  int n = 0;
  int w = 0;
  bool path = false;
  bool single_track = false;
  std::uint64_t budget = 50'000'000;
  int workers = 1;
  bool no_color_pruning = false;
  bool no_quotient = false;
  std::string output;
};

int cmd_search(const SearchArgs& a, Io io) {
  if (a.single_track) {
    const SingleTrackSearchResult r = single_track_search(a.n, a.w, a.budget);
    io.out << "n=" << r.n << " w=" << r.w << " mode=single-track\n"
           << "full_period_necklaces=" << r.full_period_necklaces << '\n'
           << "best_base_length=" << r.best_base_length << '\n'
           << "shift=" << r.shift << '\n'
           << "code_size=" << r.code_size() << '\n'
           << "exhausted=" << (r.exhausted ? "true" : "false") << '\n'
           << "expansions=" << r.expansions << '\n';
    if (!a.output.empty() && !r.base.empty()) {
      write_target(a.output, to_text(make_code_file(lift_single_track(r.base, r.shift), "search")), io.out);
    }
    return kExitOk;
  }
  SearchOptions opt;
  opt.cyclic = !a.path;
  opt.budget = a.budget;
  opt.workers = a.workers;
  opt.color_pruning = !a.no_color_pruning;
  opt.quotient_rotations = !a.no_quotient;
  const SearchResult r = longest_code(a.n, a.w, opt);
  io.out << "n=" << r.n << " w=" << r.w << " mode=" << (r.cyclic ? "cyclic" : "path") << '\n'
         << "words=" << binomial(a.n, a.w) << '\n'
         << "best_length=" << r.best_length << '\n'
         << "exhausted=" << (r.exhausted ? "true" : "false") << '\n'
         << "expansions=" << r.expansions << '\n';
  if (!a.output.empty() && r.best_length > 0) {
    write_target(a.output, to_text(make_code_file(r.witness, "search")), io.out);
  }
  return kExitOk;
}

int cmd_next(const std::string& path, const std::string& word, Io io) {
  const CodeFile file = parse_code_file(read_source(path, io.in));
  const CodeIndex index(file.code);
  const Word v = Word::from_string(word);
  const std::size_t i = index.rank(v);
  if (!file.code.cyclic && i + 1 == file.code.size()) {
    io.err << "error: " << word << " is the last word of a non-cyclic code\n";
    return kExitInfeasible;
  }
  io.out << index.next_word(v).to_string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Constant-weight Gray codes for (1,2,n) local rank modulation"};
  app.name("lrmgray");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a constructed code");
  generate->add_option("-n,--n", gen.n, "Word length")->required();
  generate->add_option("-w,--w", gen.w, "Weight")->required();
  generate->add_option("-c,--construction", gen.construction, "auto, c1 (w=2) or c2 (w=3)")
      ->check(CLI::IsMember({"auto", "c1", "c2"}));
  generate->add_option("-f,--format", gen.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a code file");
  verify->add_option("file", ver.file, "Code file, or - for stdin")->required();
  verify->add_flag("--cyclic", ver.cyclic, "Require cyclic closure");
  verify->add_flag("--single-track", ver.single_track, "Require the single-track property");
  verify->add_flag("--constant-weight", ver.constant_weight, "Require constant weight");

  int fn = 0;
  int fw = 0;
  auto* feasible = app.add_subcommand("feasible", "Necessary conditions for an optimal cyclic code");
  feasible->add_option("n", fn)->required();
  feasible->add_option("w", fw)->required();

  int cn = 0;
  int cw = 0;
  std::string cmode = "both";
  auto* colors = app.add_subcommand("colors", "Color histogram of S(n, w)");
  colors->add_option("n", cn)->required();
  colors->add_option("w", cw)->required();
  colors->add_option("-m,--mode", cmode, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));

  std::string sim_file;
  int laps = 3;
  std::string sim_format = "text";
  auto* simulate = app.add_subcommand("simulate", "Drive charge levels through a cyclic code");
  simulate->add_option("file", sim_file, "Code file, or - for stdin")->required();
  simulate->add_option("-l,--laps", laps)->check(CLI::PositiveNumber);
  simulate->add_option("-f,--format", sim_format)->check(CLI::IsMember({"text", "json"}));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive longest-code search");
  search->add_option("n", sa.n)->required();
  search->add_option("w", sa.w)->required();
  search->add_flag("--path", sa.path, "Longest path instead of longest cycle");
  search->add_flag("--single-track", sa.single_track, "Longest single-track base list");
  search->add_option("-b,--budget", sa.budget, "Node expansion limit")->check(CLI::PositiveNumber);
  search->add_option("-j,--workers", sa.workers)->check(CLI::PositiveNumber);
  search->add_flag("--no-color-pruning", sa.no_color_pruning);
  search->add_flag("--no-quotient", sa.no_quotient);
  search->add_option("-o,--output", sa.output, "Write the witness as a code file");

  std::string next_file;
  std::string next_word;
  auto* next = app.add_subcommand("next", "Successor of a word in a code");
  next->add_option("file", next_file, "Code file, or - for stdin")->required();
  next->add_option("word", next_word)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }

  try {
    if (*generate) return cmd_generate(gen, io);
    if (*verify) return cmd_verify(ver, io);
    if (*feasible) return cmd_feasible(fn, fw, io);
    if (*colors) return cmd_colors(cn, cw, cmode, io);
    if (*simulate) return cmd_simulate(sim_file, laps, sim_format, io);
    if (*search) return cmd_search(sa, io);
    if (*next) return cmd_next(next_file, next_word, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitInfeasible;
}

}  // namespace lrmgray
