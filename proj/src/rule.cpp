#include "agw/rule.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <unordered_map>

#include "agw/error.hpp"

namespace agw {

namespace {

void sort_cells(std::vector<PatternCell>& cells) {
  std::sort(cells.begin(), cells.end(), [](const PatternCell& a, const PatternCell& b) { return a.offset < b.offset; });
}

void require_distinct(const std::vector<PatternCell>& cells, const char* what) {
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (cells[i].offset == cells[i - 1].offset)
      throw ValidationError(std::string("duplicate offset ") + std::to_string(cells[i].offset) + " in " + what);
}

std::string cells_text(const std::vector<PatternCell>& cells) {
  std::string out = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cells[i].offset);
    out += '=';
    out += cells[i].entry.token();
  }
  out += '}';
  return out;
}

}  // namespace

Rule Rule::insertion(std::vector<PatternCell> selector, std::vector<PatternCell> payload, std::string label) {
  Rule r;
  r.kind_ = RuleKind::insertion;
  r.selector_ = std::move(selector);
  r.payload_ = std::move(payload);
  r.label_ = std::move(label);
  r.finish();
  return r;
}

Rule Rule::deletion(std::vector<PatternCell> selector, std::vector<PatternCell> payload, std::string label) {
  Rule r;
  r.kind_ = RuleKind::deletion;
  r.selector_ = std::move(selector);
  r.payload_ = std::move(payload);
  r.label_ = std::move(label);
  r.finish();
  return r;
}

Rule Rule::classical(std::vector<PatternCell> lhs, std::vector<PatternCell> rhs, std::string label) {
  Rule r;
  r.kind_ = RuleKind::classical;
  r.selector_ = std::move(lhs);
  r.payload_ = std::move(rhs);
  r.label_ = std::move(label);
  r.finish();
  return r;
}

void Rule::finish() {
  sort_cells(selector_);
  sort_cells(payload_);
  const bool classical = kind_ == RuleKind::classical;
  require_distinct(selector_, classical ? "lhs" : "selector");
  require_distinct(payload_, classical ? "rhs" : "payload");

  if (selector_.empty() && payload_.empty()) throw ValidationError("rule has an empty pattern");

  if (classical) {
    if (selector_.size() != payload_.size() ||
        !std::equal(selector_.begin(), selector_.end(), payload_.begin(),
                    [](const PatternCell& a, const PatternCell& b) { return a.offset == b.offset; }))
      throw ValidationError("classical rule sides must cover the same window");
  } else {
    for (const auto& p : payload_) {
      if (p.entry.is_blank()) throw ValidationError("blank entry in insertion/deletion payload");
      for (const auto& s : selector_)
        if (s.offset == p.offset)
          throw ValidationError("selector and payload overlap at offset " + std::to_string(p.offset));
    }
  }

  requirements_.clear();
  blank_offsets_.clear();
  for (const auto& s : selector_) {
    if (s.entry.is_blank())
      blank_offsets_.push_back(s.offset);
    else
      requirements_.push_back(s);
  }
  if (kind_ == RuleKind::deletion)
    requirements_.insert(requirements_.end(), payload_.begin(), payload_.end());
  if (kind_ == RuleKind::insertion)
    for (const auto& p : payload_) blank_offsets_.push_back(p.offset);

  min_offset_ = std::numeric_limits<Position>::max();
  max_offset_ = std::numeric_limits<Position>::min();
  for (const auto* side : {&selector_, &payload_})
    for (const auto& c : *side) {
      min_offset_ = std::min(min_offset_, c.offset);
      max_offset_ = std::max(max_offset_, c.offset);
    }
}

bool Rule::applies_at(const Array1D& a, Position v) const {
  for (const auto& req : requirements_)
    if (a.at(v + req.offset) != req.entry) return false;
  for (Position o : blank_offsets_)
    if (a.occupied(v + o)) return false;
  return true;
}

std::pair<Position, Position> Rule::anchor_window(const Array1D& a) const {
  if (a.empty()) return {-min_offset_, -min_offset_};
  return {a.min_pos() - 1 - max_offset_, a.max_pos() + 1 - min_offset_};
}

std::vector<Position> Rule::match_sites(const Array1D& a) const {
  std::vector<Position> out;
  if (requirements_.empty()) {
    auto [lo, hi] = anchor_window(a);
    for (Position v = lo; v <= hi; ++v)
      if (applies_at(a, v)) out.push_back(v);
    return out;
  }
  const PatternCell& key = requirements_.front();
  const auto row = a.row();
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != key.entry) continue;
    const Position v = a.min_pos() + static_cast<Position>(i) - key.offset;
    if (applies_at(a, v)) out.push_back(v);
  }
  return out;
}

Array1D Rule::apply_in_place(const Array1D& a, Position v) const {
  if (!applies_at(a, v))
    throw ContractError("rule '" + to_text() + "' does not apply at anchor " + std::to_string(v));

  Position lo = v + min_offset_;
  Position hi = v + max_offset_;
  if (!a.empty()) {
    lo = std::min(lo, a.min_pos());
    hi = std::max(hi, a.max_pos());
  }
  std::vector<Symbol> row(static_cast<std::size_t>(hi - lo + 1), Symbol::blank());
  const auto src = a.row();
  if (!a.empty()) std::copy(src.begin(), src.end(), row.begin() + (a.min_pos() - lo));

  for (const auto& c : payload_) {
    auto& cell = row[static_cast<std::size_t>(v + c.offset - lo)];
    cell = kind_ == RuleKind::deletion ? Symbol::blank() : c.entry;
  }
  return Array1D::from_row(lo, std::move(row));
}

Array1D Rule::apply_at(const Array1D& a, Position v) const { return apply_in_place(a, v).normalized(); }

std::vector<Symbol> Rule::symbols() const {
  std::vector<Symbol> out;
  for (const auto* side : {&selector_, &payload_})
    for (const auto& c : *side)
      if (!c.entry.is_blank()) out.push_back(c.entry);
  return out;
}

std::string Rule::to_text() const {
  std::string out;
  if (!label_.empty()) out += label_ + ": ";
  switch (kind_) {
    case RuleKind::insertion: out += "ins sel" + cells_text(selector_) + " put" + cells_text(payload_); break;
    case RuleKind::deletion: out += "del sel" + cells_text(selector_) + " rem" + cells_text(payload_); break;
    case RuleKind::classical: out += "cls lhs" + cells_text(selector_) + " rhs" + cells_text(payload_); break;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses `name{off=tok,...}` starting at `s`; advances `s` past it.
std::vector<PatternCell> parse_group(std::string_view& s, std::string_view name, bool allow_blank) {
  s = trim(s);
  if (s.substr(0, name.size()) != name || s.size() <= name.size() || s[name.size()] != '{')
    throw ParseError("expected '" + std::string(name) + "{...}' in rule");
  s.remove_prefix(name.size() + 1);
  auto close = s.find('}');
  if (close == std::string_view::npos) throw ParseError("unterminated '{' in rule");
  std::string_view body = trim(s.substr(0, close));
  s.remove_prefix(close + 1);

  std::vector<PatternCell> cells;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<offset>=<token>' in rule, got '" + std::string(item) + "'");
    std::string_view off_text = trim(item.substr(0, eq));
    std::string_view tok = trim(item.substr(eq + 1));
    if (!off_text.empty() && off_text.front() == '+') off_text.remove_prefix(1);
    Position off = 0;
    auto [ptr, ec] = std::from_chars(off_text.data(), off_text.data() + off_text.size(), off);
    if (ec != std::errc{} || ptr != off_text.data() + off_text.size() || off_text.empty())
      throw ParseError("malformed offset '" + std::string(off_text) + "' in rule");
    if (tok == "#" && !allow_blank) throw ParseError("blank '#' not allowed in " + std::string(name) + "{}");
    cells.push_back({off, Symbol::intern(tok)});
  }
  return cells;
}

}  // namespace

Rule parse_rule(std::string_view text) {
  std::string_view s = trim(text);
  std::string label;
  {
    auto sp = s.find_first_of(" \t");
    std::string_view first = s.substr(0, sp);
    if (!first.empty() && first.back() == ':') {
      label = std::string(first.substr(0, first.size() - 1));
      if (label.empty()) throw ParseError("empty rule label");
      s = sp == std::string_view::npos ? std::string_view{} : trim(s.substr(sp));
    }
  }
  auto sp = s.find_first_of(" \t");
  std::string_view kind = s.substr(0, sp);
  s = sp == std::string_view::npos ? std::string_view{} : s.substr(sp);

  Rule r = [&] {
    if (kind == "ins") {
      auto sel = parse_group(s, "sel", true);
      auto put = parse_group(s, "put", false);
      return Rule::insertion(std::move(sel), std::move(put), label);
    }
    if (kind == "del") {
      auto sel = parse_group(s, "sel", true);
      auto rem = parse_group(s, "rem", false);
      return Rule::deletion(std::move(sel), std::move(rem), label);
    }
    if (kind == "cls") {
      auto lhs = parse_group(s, "lhs", true);
      auto rhs = parse_group(s, "rhs", true);
      return Rule::classical(std::move(lhs), std::move(rhs), label);
    }
    throw ParseError("unknown rule kind '" + std::string(kind) + "' (expected ins, del or cls)");
  }();
  if (!trim(s).empty()) throw ParseError("trailing text after rule: '" + std::string(trim(s)) + "'");
  return r;
}

std::int64_t rule_norm(const Rule& r) { return r.norm(); }

std::vector<Position> match_sites(const Rule& r, const Array1D& a) { return r.match_sites(a); }

Array1D apply_at(const Rule& r, const Array1D& a, Position v) { return r.apply_at(a, v); }

std::vector<Rule> string_ops_to_rules(const std::vector<Symbol>& alphabet) {
  std::set<Symbol, SymbolTextLess> letters(alphabet.begin(), alphabet.end());
  letters.erase(Symbol::blank());
  if (letters.empty()) throw ValidationError("string_ops_to_rules needs a non-empty alphabet");

  std::vector<Rule> out;
  for (Symbol a : letters)
    for (Symbol b : letters) {
      out.push_back(Rule::insertion({{0, b}}, {{1, a}}));
      out.push_back(Rule::insertion({{0, b}}, {{-1, a}}));
    }
  for (Symbol a : letters) {
    out.push_back(Rule::deletion({{1, Symbol::blank()}}, {{0, a}}));
    out.push_back(Rule::deletion({{-1, Symbol::blank()}}, {{0, a}}));
  }
  return out;
}

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
  // Anchor each rule on its least common required symbol.
  std::unordered_map<std::uint32_t, std::size_t> freq;
  for (const auto& r : rules_)
    for (const auto& req : r.requirements()) ++freq[req.entry.id()];

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& reqs = rules_[i].requirements();
    if (reqs.empty()) {
      unkeyed_.push_back(static_cast<std::uint32_t>(i));
      continue;
    }
    const PatternCell* key = &reqs.front();
    for (const auto& req : reqs)
      if (freq[req.entry.id()] < freq[key->entry.id()]) key = &req;
    const auto id = key->entry.id();
    if (id >= by_symbol_.size()) by_symbol_.resize(id + 1);
    by_symbol_[id].push_back({static_cast<std::uint32_t>(i), key->offset});
  }
}

bool RuleSet::any_match(const Array1D& a) const {
  const auto row = a.row();
  for (std::size_t i = 0; i < row.size(); ++i) {
    const auto id = row[i].id();
    if (id == 0 || id >= by_symbol_.size()) continue;
    const Position pos = a.min_pos() + static_cast<Position>(i);
    for (const Keyed& k : by_symbol_[id])
      if (rules_[k.rule].applies_at(a, pos - k.offset)) return true;
  }
  for (std::uint32_t r : unkeyed_) {
    auto [lo, hi] = rules_[r].anchor_window(a);
    for (Position v = lo; v <= hi; ++v)
      if (rules_[r].applies_at(a, v)) return true;
  }
  return false;
}

}  // namespace agw
