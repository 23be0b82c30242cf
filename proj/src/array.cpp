#include "agw/array.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "agw/error.hpp"

namespace agw {

// Dense storage bound; parse rejects literals spanning more than this.
static constexpr Position kMaxLiteralExtent = Position{1} << 24;

Array1D Array1D::from_cells(std::span<const std::pair<Position, Symbol>> cells) {
  std::map<Position, Symbol> sorted;
  for (const auto& [pos, sym] : cells) {
    if (sym.is_blank())
      sorted.erase(pos);
    else
      sorted[pos] = sym;
  }
  Array1D out;
  if (sorted.empty()) return out;
  out.origin_ = sorted.begin()->first;
  const Position last = sorted.rbegin()->first;
  out.cells_.assign(static_cast<std::size_t>(last - out.origin_ + 1), Symbol::blank());
  for (const auto& [pos, sym] : sorted) out.cells_[static_cast<std::size_t>(pos - out.origin_)] = sym;
  out.count_ = sorted.size();
  return out;
}

Array1D Array1D::from_row(Position origin, std::vector<Symbol> row) {
  auto first = std::find_if(row.begin(), row.end(), [](Symbol s) { return !s.is_blank(); });
  Array1D out;
  if (first == row.end()) return out;
  auto last = std::find_if(row.rbegin(), row.rend(), [](Symbol s) { return !s.is_blank(); }).base();
  out.origin_ = origin + (first - row.begin());
  row.erase(last, row.end());
  row.erase(row.begin(), first);
  out.cells_ = std::move(row);
  out.count_ = static_cast<std::size_t>(
      std::count_if(out.cells_.begin(), out.cells_.end(), [](Symbol s) { return !s.is_blank(); }));
  return out;
}

std::vector<std::pair<Position, Symbol>> Array1D::cells() const {
  std::vector<std::pair<Position, Symbol>> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i].is_blank()) out.emplace_back(origin_ + static_cast<Position>(i), cells_[i]);
  return out;
}

Array1D Array1D::normalized() const {
  Array1D out = *this;
  out.origin_ = 0;
  return out;
}

Array1D Array1D::translated(Position v) const {
  Array1D out = *this;
  if (!out.cells_.empty()) out.origin_ += v;
  return out;
}

std::size_t Array1D::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(cells_.empty() ? 0 : static_cast<std::uint64_t>(origin_));
  for (Symbol s : cells_) mix(s.id());
  return static_cast<std::size_t>(h);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\n' || text[j] == '\r')) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Position parse_position(std::string_view digits) {
  Position v = 0;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("malformed position '" + std::string(digits) + "'");
  return v;
}

}  // namespace

Array1D parse_array(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) return {};

  if (tokens.front().front() == '@') {
    if (tokens.size() % 2 != 0) throw ParseError("positioned array literal needs '@<int> <token>' pairs");
    std::map<Position, Symbol> cells;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
      if (tokens[i].front() != '@') throw ParseError("expected '@<int>', got '" + std::string(tokens[i]) + "'");
      Position pos = parse_position(tokens[i].substr(1));
      if (tokens[i + 1] == "#") throw ParseError("blank token in positioned array literal");
      Symbol sym = Symbol::intern(tokens[i + 1]);
      if (!cells.emplace(pos, sym).second)
        throw ParseError("duplicate position " + std::to_string(pos) + " in array literal");
    }
    if (cells.rbegin()->first - cells.begin()->first > kMaxLiteralExtent)
      throw ParseError("array literal extent too large");
    std::vector<std::pair<Position, Symbol>> flat(cells.begin(), cells.end());
    return Array1D::from_cells(flat).normalized();
  }

  std::vector<Symbol> row;
  row.reserve(tokens.size());
  for (auto tok : tokens) {
    if (tok.front() == '@') throw ParseError("mixed compact and positioned array literal");
    row.push_back(Symbol::intern(tok));
  }
  return Array1D::from_row(0, std::move(row)).normalized();
}

std::string render_array(const Array1D& a) {
  std::string out;
  for (Symbol s : a.row()) {
    if (!out.empty()) out += ' ';
    out += s.token();
  }
  return out;
}

Array1D normalize(const Array1D& a) { return a.normalized(); }

Array1D translate(const Array1D& a, Position v) { return a.translated(v); }

bool equivalent(const Array1D& a, const Array1D& b) { return a.normalized() == b.normalized(); }

ShapeMetrics shape_of(const Array1D& a) {
  ShapeMetrics m;
  m.size = a.size();
  if (!a.empty()) {
    m.min_pos = a.min_pos();
    m.max_pos = a.max_pos();
    m.extent = a.max_pos() - a.min_pos();
  }
  return m;
}

bool shape_equal(const Array1D& a, const Array1D& b) {
  if (a.size() != b.size() || a.row().size() != b.row().size()) return false;
  auto ra = a.row();
  auto rb = b.row();
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i].is_blank() != rb[i].is_blank()) return false;
  return true;
}

}  // namespace agw
