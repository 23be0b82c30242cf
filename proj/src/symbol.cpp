#include "agw/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "agw/error.hpp"

namespace agw {
namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

// identifier followed by primes; `allow_bar` admits one trailing '!'.
bool valid_plain(std::string_view t, bool allow_bar) {
  std::size_t i = 0;
  while (i < t.size() && is_ident_char(t[i])) ++i;
  if (i == 0) return false;
  while (i < t.size() && t[i] == '\'') ++i;
  if (allow_bar && i < t.size() && t[i] == '!') ++i;
  return i == t.size();
}

bool valid_composite(std::string_view t) {
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return false;
  std::string_view body = t.substr(1, t.size() - 2);
  int fields = 0;
  while (true) {
    auto dot = body.find('.');
    std::string_view field = body.substr(0, dot);
    if (!valid_plain(field, false)) return false;
    ++fields;
    if (dot == std::string_view::npos) break;
    body.remove_prefix(dot + 1);
  }
  return fields == 4;
}

class Interner {
public:
  Interner() {
    names_.emplace_back("#");
    ids_.emplace(names_.back(), 0);
  }

  std::uint32_t intern(std::string_view token) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(token); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(token); it != ids_.end()) return it->second;
    names_.emplace_back(token);
    auto id = static_cast<std::uint32_t>(names_.size() - 1);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::string_view name(std::uint32_t id) {
    std::shared_lock lock(mutex_);
    return names_[id];
  }

private:
  std::shared_mutex mutex_;
  std::deque<std::string> names_;  // deque: stable addresses for the string_view keys
  std::unordered_map<std::string_view, std::uint32_t> ids_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

bool Symbol::is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  if (token.front() == '[') return valid_composite(token);
  return valid_plain(token, true);
}

Symbol Symbol::intern(std::string_view token) {
  if (token == "#") return blank();
  if (!is_valid_token(token)) throw ParseError("malformed symbol token '" + std::string(token) + "'");
  return Symbol(interner().intern(token));
}

std::string_view Symbol::token() const { return interner().name(id_); }

bool Symbol::is_barred() const {
  auto t = token();
  return !is_blank() && t.back() == '!';
}

bool Symbol::is_composite() const { return !is_blank() && token().front() == '['; }

}  // namespace agw
