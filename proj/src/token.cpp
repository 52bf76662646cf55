#include "infl/token.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace infl {
namespace detail {

struct TokenNode {
  TokenKind kind;
  std::string name;
  std::vector<Token> kids;
  std::size_t hash;
};

namespace {

struct NodeHash {
  std::size_t operator()(const TokenNode* n) const noexcept { return n->hash; }
};

struct NodeEq {
  bool operator()(const TokenNode* a, const TokenNode* b) const noexcept {
    return a->kind == b->kind && a->name == b->name && a->kids == b->kids;
  }
};

std::size_t node_hash(TokenKind kind, std::string_view name, const std::vector<Token>& kids) {
  std::size_t h = std::hash<std::string_view>{}(name) ^ (static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ull);
  for (Token k : kids) {
    h ^= k.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// Append-only; nodes live for the lifetime of the process.
class Interner {
 public:
  const TokenNode* get(TokenKind kind, std::string_view name, std::vector<Token> kids) {
    TokenNode probe{kind, std::string(name), std::move(kids), 0};
    probe.hash = node_hash(kind, name, probe.kids);
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(&probe); it != index_.end()) {
      return *it;
    }
    storage_.push_back(std::move(probe));
    const TokenNode* node = &storage_.back();
    index_.insert(node);
    return node;
  }

 private:
  std::mutex mutex_;
  std::deque<TokenNode> storage_;
  std::unordered_set<const TokenNode*, NodeHash, NodeEq> index_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace
}  // namespace detail

Token Token::intern(TokenKind kind, std::string_view name, std::vector<Token> kids) {
  return Token(detail::interner().get(kind, name, std::move(kids)));
}

Token Token::atom(std::string_view name) { return intern(TokenKind::Atom, name, {}); }
Token Token::star() { return intern(TokenKind::Star, "", {}); }
Token Token::pair(Token first, Token second) { return intern(TokenKind::Pair, "", {first, second}); }
Token Token::left(Token inner) { return intern(TokenKind::Left, "", {inner}); }
Token Token::right(Token inner) { return intern(TokenKind::Right, "", {inner}); }

Token Token::finset(std::vector<Token> elems) {
  return intern(TokenKind::Finset, "", make_token_set(std::move(elems)));
}

TokenKind Token::kind() const noexcept { return node_->kind; }
const std::string& Token::name() const noexcept { return node_->name; }

Token Token::first() const {
  if (kind() != TokenKind::Pair) throw std::logic_error("first() on non-pair token " + to_string(*this));
  return node_->kids[0];
}

Token Token::second() const {
  if (kind() != TokenKind::Pair) throw std::logic_error("second() on non-pair token " + to_string(*this));
  return node_->kids[1];
}

Token Token::inner() const {
  if (kind() != TokenKind::Left && kind() != TokenKind::Right) {
    throw std::logic_error("inner() on untagged token " + to_string(*this));
  }
  return node_->kids[0];
}

std::span<const Token> Token::elems() const {
  if (kind() != TokenKind::Finset) throw std::logic_error("elems() on non-set token " + to_string(*this));
  return node_->kids;
}

std::strong_ordering operator<=>(Token a, Token b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() == TokenKind::Atom) {
    return a.name().compare(b.name()) <=> 0;
  }
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  return std::lexicographical_compare_three_way(ka.begin(), ka.end(), kb.begin(), kb.end());
}

TokenSet make_token_set(std::vector<Token> tokens) {
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

bool is_subset(const TokenSet& sub, const TokenSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

TokenSet set_union(const TokenSet& a, const TokenSet& b) {
  TokenSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::strong_ordering compare_sets(const TokenSet& a, const TokenSet& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(Token t) {
  switch (t.kind()) {
    case TokenKind::Atom:
      return t.name();
    case TokenKind::Star:
      return "*";
    case TokenKind::Pair:
      return "(" + to_string(t.first()) + "," + to_string(t.second()) + ")";
    case TokenKind::Left:
      return "L " + to_string(t.inner());
    case TokenKind::Right:
      return "R " + to_string(t.inner());
    case TokenKind::Finset: {
      std::string out = "{";
      bool first = true;
      for (Token e : t.elems()) {
        if (!first) out += ",";
        out += to_string(e);
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

std::string to_string(const TokenSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += to_string(s[i]);
  }
  return out + "}";
}

}  // namespace infl
