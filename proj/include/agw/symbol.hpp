#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace agw {

/// An interned alphabet symbol.
///
/// Tokens follow a small lexical grammar: a base identifier made of
/// letters, digits and underscores, followed by any number of prime marks
/// and at most one trailing bar marker `!` (e.g. `S`, `a'`, `E!`, `a'!`),
/// or a composite `[f1.f2.f3.f4]` whose four fields are identifiers with
/// optional primes. The token `#` is the blank; it is representable as a
/// Symbol value (see blank()) but never occupies an array cell.
///
/// Interning is process-wide and thread-safe; comparing two symbols is an
/// integer comparison.
class Symbol {
public:
  constexpr Symbol() noexcept = default;

  /// Interns a token after validating it. Throws ParseError on a lexical
  /// error. `#` yields the blank symbol.
  static Symbol intern(std::string_view token);

  static constexpr Symbol blank() noexcept { return Symbol{}; }

  static bool is_valid_token(std::string_view token) noexcept;

  constexpr bool is_blank() const noexcept { return id_ == 0; }
  constexpr std::uint32_t id() const noexcept { return id_; }

  /// The token text; `#` for the blank.
  std::string_view token() const;

  bool is_barred() const;
  bool is_composite() const;

  friend constexpr bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend constexpr bool operator!=(Symbol a, Symbol b) noexcept { return a.id_ != b.id_; }

private:
  explicit constexpr Symbol(std::uint32_t id) noexcept : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Orders symbols by token text (not by interning order), so that sorted
/// output is stable across runs.
struct SymbolTextLess {
  bool operator()(Symbol a, Symbol b) const { return a.token() < b.token(); }
};

}  // namespace agw

template <>
struct std::hash<agw::Symbol> {
  std::size_t operator()(agw::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id()); }
};
