#include "agw/textio.hpp"

#include <fstream>
#include <sstream>

#include "agw/error.hpp"

namespace agw {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  int number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  if (out.empty()) throw ParseError("empty input: missing '" + std::string(kFormatHeader) + "' header");
  auto [key, value] = split_key(out.front().text);
  if (key != "format") throw ParseError("missing '" + std::string(kFormatHeader) + "' header", out.front().number);
  if (value != "agw/1") throw ParseError("unsupported format version '" + std::string(value) + "'", out.front().number);
  out.erase(out.begin());
  return out;
}

std::pair<std::string_view, std::string_view> split_key(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return {{}, line};
  std::string_view key = trim(line.substr(0, colon));
  for (char c : key)
    if (!((c >= 'a' && c <= 'z') || c == '_')) return {{}, line};
  return {key, trim(line.substr(colon + 1))};
}

std::vector<Symbol> parse_symbol_list(std::string_view text) {
  std::vector<Symbol> out;
  for (auto w : split_words(text)) {
    if (w == "#") throw ParseError("blank '#' cannot be an alphabet symbol");
    out.push_back(Symbol::intern(w));
  }
  return out;
}

std::string join_symbols(const std::vector<Symbol>& symbols) {
  std::string out;
  for (Symbol s : symbols) {
    if (!out.empty()) out += ' ';
    out += s.token();
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

}  // namespace agw
