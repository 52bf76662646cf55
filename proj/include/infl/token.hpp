#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace infl {

enum class TokenKind : unsigned char { Atom, Star, Pair, Left, Right, Finset };

namespace detail {
struct TokenNode;
}

/// Immutable, interned label naming an element of a web.
///
/// Tokens are built inductively: named atoms, the unit token `*`, ordered
/// pairs (webs of tensor and linear implication), left/right tags (webs of
/// with and plus) and finite token-sets (webs of the exponential).
/// Structurally equal tokens share one node, so equality and hashing are
/// pointer operations. The ordering is structural and total: variant rank
/// first, then components.
class Token {
 public:
  static Token atom(std::string_view name);
  static Token star();
  static Token pair(Token first, Token second);
  static Token left(Token inner);
  static Token right(Token inner);
  /// Elements are sorted and deduplicated before interning.
  static Token finset(std::vector<Token> elems);

  TokenKind kind() const noexcept;
  const std::string& name() const noexcept;  // Atom only
  Token first() const;                       // Pair only
  Token second() const;                      // Pair only
  Token inner() const;                       // Left/Right only
  std::span<const Token> elems() const;      // Finset only

  bool is_finset() const noexcept { return kind() == TokenKind::Finset; }

  friend bool operator==(Token a, Token b) noexcept { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Token a, Token b);

  std::size_t hash() const noexcept { return std::hash<const void*>{}(node_); }

 private:
  explicit Token(const detail::TokenNode* node) : node_(node) {}
  friend struct detail::TokenNode;
  static Token intern(TokenKind kind, std::string_view name, std::vector<Token> kids);

  const detail::TokenNode* node_;
};

/// A finite token-set, always sorted by the canonical order and duplicate-free.
using TokenSet = std::vector<Token>;

TokenSet make_token_set(std::vector<Token> tokens);
bool is_subset(const TokenSet& sub, const TokenSet& super);
TokenSet set_union(const TokenSet& a, const TokenSet& b);

/// Canonical text form: `name`, `*`, `(t,u)`, `L t`, `R t`, `{t,u}`.
std::string to_string(Token t);
std::string to_string(const TokenSet& s);

/// Canonical order on token-sets: lexicographic on the sorted elements.
std::strong_ordering compare_sets(const TokenSet& a, const TokenSet& b);

}  // namespace infl

template <>
struct std::hash<infl::Token> {
  std::size_t operator()(infl::Token t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<std::pair<infl::Token, infl::Token>> {
  std::size_t operator()(const std::pair<infl::Token, infl::Token>& p) const noexcept {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};
