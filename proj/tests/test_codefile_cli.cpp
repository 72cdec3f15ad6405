#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "lrmgray/cli.hpp"
#include "lrmgray/codefile.hpp"
#include "lrmgray/weight2.hpp"
#include "lrmgray/weight3.hpp"
#include "support.hpp"

using namespace lrmgray;
using lrmgray::testing::W;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("text code files") {
  const CodeFile file = make_code_file(GrayCode::from_words(testing::table_one(), true), "c1");
  CHECK(file.single_track);
  const std::string text = to_text(file);
  CHECK(contains(text, "# n=5\n"));
  CHECK(contains(text, "# w=2\n"));
  CHECK(contains(text, "# efficiency=1/1\n"));
  CHECK(contains(text, "\n11000\n10100\n"));
  const CodeFile back = parse_code_file(text);
  CHECK(back.code.words == file.code.words);
  CHECK(back.code.cyclic);
  CHECK(back.declared_w == 2);
  CHECK(back.construction == "c1");
}

TEST_CASE("json code files") {
  const CodeFile file = make_code_file(build_weight3(11), "c2");
  const std::string text = to_json(file);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["n"] == 11);
  CHECK(j["size"] == 165);
  CHECK(j["single_track"] == true);
  CHECK(j["efficiency"]["num"] == 1);
  CHECK(j["words"].size() == 165);
  const CodeFile back = parse_code_file(text);
  CHECK(back.code.words == file.code.words);
  CHECK(back.code.transitions == file.code.transitions);
}

TEST_CASE("property: both formats round-trip every constructed code") {
  std::vector<GrayCode> codes{build_weight2(5), build_weight2(9), build_weight3(13), build_weight3(17)};
  for (const GrayCode& code : codes) {
    const CodeFile file = make_code_file(code, "x");
    for (const std::string& text : {to_text(file), to_json(file)}) {
      const CodeFile back = parse_code_file(text);
      CHECK(back.code.words == code.words);
      CHECK(back.code.cyclic == code.cyclic);
      CHECK(back.single_track == file.single_track);
    }
  }
}

TEST_CASE("malformed code files") {
  CHECK(testing::throws_kind([] { (void)parse_code_file("# n=5\n1100\n"); }, ErrorKind::Parse));
  CHECK(testing::throws_kind([] { (void)parse_code_file("11000\n1102x\n"); }, ErrorKind::Parse));
  CHECK(testing::throws_kind([] { (void)parse_code_file("{\"n\": 5"); }, ErrorKind::Parse));
  CHECK(testing::throws_kind([] { (void)parse_code_file(""); }, ErrorKind::Parse));
}

TEST_CASE("cli generate and verify") {
  const Run gen = run({"generate", "-n", "11", "-w", "3"});
  CHECK(gen.code == kExitOk);
  CHECK(contains(gen.out, "# size=165"));
  const Run ver = run({"verify", "-", "--cyclic", "--single-track", "--constant-weight"}, gen.out);
  CHECK(ver.code == kExitOk);
  CHECK(contains(ver.out, "result: PASS"));

  const Run json = run({"generate", "-n", "5", "-w", "2", "-f", "json"});
  CHECK(json.code == kExitOk);
  CHECK(run({"verify", "-", "--cyclic"}, json.out).code == kExitOk);

  const Run bad = run({"generate", "-n", "9", "-w", "3"});
  CHECK(bad.code == kExitInfeasible);
  CHECK(contains(bad.err, "gcd(9, 3)"));
  CHECK(run({"generate", "-n", "9", "-w", "4"}).code == kExitInfeasible);
  CHECK(run({"generate", "-n", "9", "-w", "2", "-c", "c2"}).code == kExitInfeasible);

  // a non-cyclic code fails the cyclic check
  const Run open = run({"generate", "-n", "9", "-w", "2"});
  CHECK(open.code == kExitOk);
  CHECK(run({"verify", "-", "--constant-weight"}, open.out).code == kExitOk);
  CHECK(run({"verify", "-", "--cyclic"}, open.out).code == kExitVerifyFailed);

  std::string swapped = "11000\n01100\n10100\n";
  CHECK(run({"verify", "-"}, swapped).code == kExitVerifyFailed);
}

TEST_CASE("cli feasible, colors, simulate, search, next") {
  const Run f = run({"feasible", "12", "6"});
  CHECK(f.code == kExitInfeasible);
  CHECK(contains(f.out, "color_difference=-2"));
  CHECK(contains(f.out, "ruled out by color-balance"));
  CHECK(run({"feasible", "5", "2"}).code == kExitOk);

  const Run c = run({"colors", "12", "6"});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "result: agree"));

  const Run gen = run({"generate", "-n", "11", "-w", "3"});
  const Run sim = run({"simulate", "-", "--laps", "3"}, gen.out);
  CHECK(sim.code == kExitOk);
  CHECK(contains(sim.out, "steps=495"));
  CHECK(run({"simulate", "-", "--laps", "0"}, gen.out).code == kExitInfeasible);

  const Run s = run({"search", "7", "2"});
  CHECK(s.code == kExitOk);
  CHECK(contains(s.out, "best_length=14"));
  CHECK(contains(s.out, "exhausted=true"));

  const Run five = run({"generate", "-n", "5", "-w", "2"});
  const Run nx = run({"next", "-", "01001"}, five.out);
  CHECK(nx.code == kExitOk);
  CHECK(contains(nx.out, "11000"));
  CHECK(run({"next", "-", "11100"}, five.out).code != kExitOk);

  CHECK(run({"bogus"}).code == kExitInfeasible);
  CHECK(run({"--help"}).code == kExitOk);
}
