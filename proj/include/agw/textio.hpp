#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agw/symbol.hpp"

namespace agw {

/// Version tag every file format starts with.
inline constexpr std::string_view kFormatHeader = "format: agw/1";

/// A non-blank input line with its `%` comment stripped.
struct TextLine {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_words(std::string_view s);

/// Content lines of `text`. The first content line must be the format
/// header, which is consumed; an absent or unknown version throws
/// ParseError.
std::vector<TextLine> content_lines(std::string_view text);

/// Splits `key: value` when the line starts with `key:`; otherwise returns
/// an empty key.
std::pair<std::string_view, std::string_view> split_key(std::string_view line);

std::vector<Symbol> parse_symbol_list(std::string_view text);
std::string join_symbols(const std::vector<Symbol>& symbols);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace agw
