#include "fibcalc/cli/script.hpp"

#include <algorithm>
#include <cctype>

namespace fibcalc {

const std::vector<std::pair<std::string, int>>& script_verbs() {
  static const std::vector<std::pair<std::string, int>> verbs = {
      {"load", 1},       {"spin", 1},       {"halfspin", 1},   {"double", 2},     {"disktwist", 3},  {"stallingstwist", 3},
      {"glucktwist", 1}, {"torustwist", 2}, {"connectsum", 2}, {"report", 1},     {"plan", 2}};
  return verbs;
}

namespace {

struct Token {
  std::string text;
  int column;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '/'; }

bool is_identifier(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const int column = static_cast<int>(i) + 1;
    if (c == '=') {
      out.push_back({"=", column});
      ++i;
      continue;
    }
    if (!is_ident_char(c)) throw ScriptError(line_no, column, std::string("unexpected character '") + c + "'");
    std::size_t j = i;
    while (j < line.size() && is_ident_char(line[j])) ++j;
    out.push_back({std::string(line.substr(i, j - i)), column});
    i = j;
  }
  return out;
}

}  // namespace

SurgeryScript parse_script(std::string_view text) {
  SurgeryScript script;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    std::vector<Token> toks = tokenize(line, line_no);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    Statement st;
    st.line = line_no;
    std::size_t k = 0;
    if (toks.size() >= 2 && toks[1].text == "=") {
      if (!is_identifier(toks[0].text)) throw ScriptError(line_no, toks[0].column, "invalid binding name '" + toks[0].text + "'");
      st.binding = toks[0].text;
      k = 2;
      if (k == toks.size()) throw ScriptError(line_no, toks[1].column + 1, "missing verb after '='");
    }
    for (std::size_t i = k; i < toks.size(); ++i)
      if (toks[i].text == "=") throw ScriptError(line_no, toks[i].column, "unexpected '='");
    st.verb = toks[k].text;
    const auto& verbs = script_verbs();
    const auto it = std::find_if(verbs.begin(), verbs.end(), [&](const auto& v) { return v.first == st.verb; });
    if (it == verbs.end()) throw ScriptError(line_no, toks[k].column, "unknown verb '" + st.verb + "'");
    for (std::size_t i = k + 1; i < toks.size(); ++i) st.args.push_back(toks[i].text);
    if (static_cast<int>(st.args.size()) != it->second) {
      const int column = st.args.size() > static_cast<std::size_t>(it->second)
                             ? toks[k + 1 + static_cast<std::size_t>(it->second)].column
                             : static_cast<int>(line.find('#') == std::string_view::npos ? line.size() : line.find('#')) + 1;
      throw ScriptError(line_no, column, "verb '" + st.verb + "' takes " + std::to_string(it->second) + " argument" +
                                             (it->second == 1 ? "" : "s") + ", got " + std::to_string(st.args.size()));
    }
    script.statements.push_back(std::move(st));
    if (end == text.size()) break;
  }
  return script;
}

std::string print_script(const SurgeryScript& script) {
  std::string out;
  for (const auto& st : script.statements) {
    if (st.binding) out += *st.binding + " = ";
    out += st.verb;
    for (const auto& a : st.args) out += " " + a;
    out += "\n";
  }
  return out;
}

}  // namespace fibcalc
