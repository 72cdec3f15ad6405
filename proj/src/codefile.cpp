#include "lrmgray/codefile.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lrmgray/error.hpp"

namespace lrmgray {

namespace {

std::string decimal(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view key) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, "header " + std::string(key) + " is not an integer: " + std::string(s));
  }
  return value;
}

bool parse_bool(std::string_view s, std::string_view key) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw Error(ErrorKind::Parse, "header " + std::string(key) + " is not a boolean: " + std::string(s));
}

CodeFile finish(std::vector<Word> words, std::optional<int> n, bool cyclic) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (n && words[i].size() != *n) {
      throw Error(ErrorKind::Parse, "codeword " + std::to_string(i) + " has length " +
                                        std::to_string(words[i].size()) + ", header says n=" +
                                        std::to_string(*n));
    }
    if (words[i].size() != words[0].size()) {
      throw Error(ErrorKind::Parse, "codeword " + std::to_string(i) + " length differs from codeword 0");
    }
  }
  CodeFile file;
  file.code = GrayCode::from_words(std::move(words), cyclic);
  if (file.code.words.empty()) {
    if (!n) throw Error(ErrorKind::Parse, "empty code without an n header");
    file.code.n = *n;
  }
  return file;
}

CodeFile parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(Word::from_string(w.get<std::string>()));
    std::optional<int> n;
    if (j.contains("n")) n = j.at("n").get<int>();
    CodeFile file = finish(std::move(words), n, j.value("cyclic", false));
    file.single_track = j.value("single_track", false);
    file.construction = j.value("construction", std::string{});
    if (j.contains("w") && !j.at("w").is_null()) file.declared_w = j.at("w").get<int>();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad code JSON: ") + e.what());
  }
}

CodeFile parse_text(std::string_view text) {
  std::optional<int> n;
  std::optional<int> w;
  bool cyclic = false;
  bool single_track = false;
  std::string construction;
  std::vector<Word> words;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      line = trim(line.substr(1));
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) continue;  // free-form comment
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key == "n") n = parse_int(value, key);
      else if (key == "w") w = parse_int(value, key);
      else if (key == "cyclic") cyclic = parse_bool(value, key);
      else if (key == "single_track") single_track = parse_bool(value, key);
      else if (key == "construction") construction = std::string(value);
      continue;
    }
    try {
      words.push_back(Word::from_string(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  CodeFile file = finish(std::move(words), n, cyclic);
  file.single_track = single_track;
  file.construction = std::move(construction);
  file.declared_w = w;
  return file;
}

}  // namespace

CodeFile make_code_file(GrayCode code, std::string construction) {
  CodeFile file;
  file.single_track = code.cyclic && is_single_track(code);
  file.declared_w = code.w;
  file.code = std::move(code);
  file.construction = std::move(construction);
  return file;
}

std::string to_text(const CodeFile& file) {
  const GrayCode& c = file.code;
  std::ostringstream out;
  out << "# n=" << c.n << '\n';
  if (c.w) out << "# w=" << *c.w << '\n';
  out << "# cyclic=" << (c.cyclic ? "true" : "false") << '\n';
  out << "# single_track=" << (file.single_track ? "true" : "false") << '\n';
  if (!file.construction.empty()) out << "# construction=" << file.construction << '\n';
  out << "# size=" << c.size() << '\n';
  if (c.w && !c.words.empty()) {
    const Rational e = efficiency(c);
    out << "# efficiency=" << e.numerator() << '/' << e.denominator() << '\n';
    out << "# efficiency_decimal=" << decimal(e) << '\n';
  }
  for (const auto& v : c.words) out << v.to_string() << '\n';
  return out.str();
}

std::string to_json(const CodeFile& file) {
  const GrayCode& c = file.code;
  nlohmann::json j;
  j["n"] = c.n;
  j["w"] = c.w ? nlohmann::json(*c.w) : nlohmann::json(nullptr);
  j["cyclic"] = c.cyclic;
  j["single_track"] = file.single_track;
  j["size"] = c.size();
  if (c.w && !c.words.empty()) {
    const Rational e = efficiency(c);
    j["efficiency"] = {{"num", e.numerator()}, {"den", e.denominator()}};
  } else {
    j["efficiency"] = nullptr;
  }
  if (!file.construction.empty()) j["construction"] = file.construction;
  auto& words = j["words"] = nlohmann::json::array();
  for (const auto& v : c.words) words.push_back(v.to_string());
  j["transitions"] = c.transitions;
  return j.dump(1) + "\n";
}

CodeFile parse_code_file(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

}  // namespace lrmgray
