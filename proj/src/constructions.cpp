#include "infl/constructions.hpp"

#include <algorithm>

#include "infl/fixtures.hpp"

namespace infl {

namespace {

bool is_left(Token t) { return t.kind() == TokenKind::Left; }
bool is_right(Token t) { return t.kind() == TokenKind::Right; }
bool is_pair(Token t) { return t.kind() == TokenKind::Pair; }

/// Splits a set of tagged tokens into its two components; false if untagged.
bool split_tags(std::span<const Token> ts, TokenSet& left, TokenSet& right) {
  for (Token t : ts) {
    if (is_left(t)) {
      left.push_back(t.inner());
    } else if (is_right(t)) {
      right.push_back(t.inner());
    } else {
      return false;
    }
  }
  left = make_token_set(std::move(left));
  right = make_token_set(std::move(right));
  return true;
}

bool split_pairs(std::span<const Token> ts, TokenSet& firsts, TokenSet& seconds) {
  for (Token t : ts) {
    if (!is_pair(t)) return false;
    firsts.push_back(t.first());
    seconds.push_back(t.second());
  }
  firsts = make_token_set(std::move(firsts));
  seconds = make_token_set(std::move(seconds));
  return true;
}

std::vector<Token> tagged_web(const Lis& a1, const Lis& a2) {
  std::vector<Token> web;
  for (Token t : a1.web()) web.push_back(Token::left(t));
  for (Token t : a2.web()) web.push_back(Token::right(t));
  return web;
}

std::vector<Token> product_web(const Lis& a, const Lis& b) {
  std::vector<Token> web;
  for (Token x : a.web()) {
    for (Token y : b.web()) web.push_back(Token::pair(x, y));
  }
  return web;
}

void require_same(const Lis& a, const Lis& b, const Caps& caps, const char* what) {
  if (!same_object(a, b, caps)) {
    throw ObjectMismatch(std::string(what) + ": " + a.signature() + " vs " + b.signature());
  }
}

/// The ∀J condition of linear implication: every sub-selection with a
/// consistent first projection has a consistent second projection. Selections
/// are explored depth-first; consistency of the first projection is
/// subset-closed, so inconsistent branches are pruned.
bool lollipop_con(const Lis& a, const Lis& b, std::span<const Token> ts) {
  std::vector<Token> pairs(ts.begin(), ts.end());
  for (Token t : pairs) {
    if (!is_pair(t)) return false;
  }
  TokenSet firsts;
  TokenSet seconds;
  std::function<bool(std::size_t)> explore = [&](std::size_t next) -> bool {
    for (std::size_t i = next; i < pairs.size(); ++i) {
      firsts.push_back(pairs[i].first());
      seconds.push_back(pairs[i].second());
      bool ok = true;
      if (a.con(make_token_set(firsts))) {
        ok = b.con(make_token_set(seconds)) && explore(i + 1);
      }
      firsts.pop_back();
      seconds.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return explore(0);
}

}  // namespace

LinRel rel_from_predicate(const Lis& source, const Lis& target, const std::function<bool(Token, Token)>& pred,
                          const Caps& caps) {
  require_pairs(source.size(), target.size(), caps, "rel_from_predicate");
  std::vector<IndexPair> out;
  for (std::uint32_t i = 0; i < source.size(); ++i) {
    for (std::uint32_t j = 0; j < target.size(); ++j) {
      if (pred(source.web()[i], target.web()[j])) out.emplace_back(i, j);
    }
  }
  return LinRel::from_indices(source, target, std::move(out));
}

Lis one_obj() { return fixtures::one(); }
Lis bottom_obj() { return fixtures::one(); }
Lis top_obj() { return fixtures::top(); }

Lis with_obj(const Lis& a1, const Lis& a2) {
  return Lis(
      tagged_web(a1, a2),
      [a1, a2](std::span<const Token> ts) {
        TokenSet l, r;
        return split_tags(ts, l, r) && a1.con(l) && a2.con(r);
      },
      [a1, a2](Token x, Token y) {
        if (is_left(x) && is_left(y)) return a1.entails(x.inner(), y.inner());
        if (is_right(x) && is_right(y)) return a2.entails(x.inner(), y.inner());
        return false;
      },
      "(" + a1.signature() + " & " + a2.signature() + ")");
}

Lis plus_obj(const Lis& a1, const Lis& a2) {
  return Lis(
      tagged_web(a1, a2),
      [a1, a2](std::span<const Token> ts) {
        TokenSet first, second;
        for (Token t : ts) {
          if (is_left(t)) {
            first.push_back(t.inner());
          } else if (is_right(t)) {
            second.push_back(t.inner());
          } else {
            return false;
          }
        }
        return a1.con(make_token_set(first)) && a2.con(make_token_set(second));
      },
      [a1, a2](Token x, Token y) {
        if (x.kind() != y.kind()) return false;
        return x.kind() == TokenKind::Left ? a1.entails(x.inner(), y.inner()) : a2.entails(x.inner(), y.inner());
      },
      "(" + a1.signature() + " + " + a2.signature() + ")");
}

LinRel proj(int i, const Lis& a1, const Lis& a2, const Caps& caps) {
  if (i != 1 && i != 2) throw std::invalid_argument("proj: index must be 1 or 2");
  const Lis& comp = i == 1 ? a1 : a2;
  return rel_from_predicate(with_obj(a1, a2), comp,
                            [&](Token x, Token y) {
                              return (i == 1 ? is_left(x) : is_right(x)) && comp.entails(x.inner(), y);
                            },
                            caps);
}

LinRel inj(int i, const Lis& a1, const Lis& a2, const Caps& caps) {
  if (i != 1 && i != 2) throw std::invalid_argument("inj: index must be 1 or 2");
  const Lis& comp = i == 1 ? a1 : a2;
  return rel_from_predicate(comp, plus_obj(a1, a2),
                            [&](Token x, Token y) {
                              return (i == 1 ? is_left(y) : is_right(y)) && comp.entails(x, y.inner());
                            },
                            caps);
}

LinRel pair(const LinRel& r, const LinRel& s, const Caps& caps) {
  require_same(r.source(), s.source(), caps, "pair");
  std::vector<std::pair<Token, Token>> out;
  for (const auto& [c, a] : r.pairs()) out.emplace_back(c, Token::left(a));
  for (const auto& [c, b] : s.pairs()) out.emplace_back(c, Token::right(b));
  return LinRel(r.source(), with_obj(r.target(), s.target()), out);
}

LinRel copair(const LinRel& r, const LinRel& s, const Caps& caps) {
  require_same(r.target(), s.target(), caps, "copair");
  std::vector<std::pair<Token, Token>> out;
  for (const auto& [a, c] : r.pairs()) out.emplace_back(Token::left(a), c);
  for (const auto& [b, c] : s.pairs()) out.emplace_back(Token::right(b), c);
  return LinRel(plus_obj(r.source(), s.source()), r.target(), out);
}

LinRel with_mor(const LinRel& r, const LinRel& s) {
  std::vector<std::pair<Token, Token>> out;
  for (const auto& [a, b] : r.pairs()) out.emplace_back(Token::left(a), Token::left(b));
  for (const auto& [a, b] : s.pairs()) out.emplace_back(Token::right(a), Token::right(b));
  return LinRel(with_obj(r.source(), s.source()), with_obj(r.target(), s.target()), out);
}

Lis tensor_obj(const Lis& a, const Lis& b) {
  return Lis(
      product_web(a, b),
      [a, b](std::span<const Token> ts) {
        TokenSet f, s;
        return split_pairs(ts, f, s) && a.con(f) && b.con(s);
      },
      [a, b](Token x, Token y) {
        return is_pair(x) && is_pair(y) && a.entails(x.first(), y.first()) && b.entails(x.second(), y.second());
      },
      "(" + a.signature() + " * " + b.signature() + ")");
}

LinRel tensor_mor(const LinRel& r, const LinRel& s) {
  const Lis src = tensor_obj(r.source(), s.source());
  const Lis tgt = tensor_obj(r.target(), s.target());
  std::vector<IndexPair> out;
  out.reserve(r.size() * s.size());
  const auto rp = r.pairs();
  const auto sp = s.pairs();
  for (const auto& [a, c] : rp) {
    for (const auto& [b, d] : sp) {
      out.emplace_back(src.index_or_throw(Token::pair(a, b)), tgt.index_or_throw(Token::pair(c, d)));
    }
  }
  return LinRel::from_indices(src, tgt, std::move(out));
}

LinRel assoc_tensor(const Lis& a, const Lis& b, const Lis& c, const Caps& caps) {
  return rel_from_predicate(tensor_obj(a, tensor_obj(b, c)), tensor_obj(tensor_obj(a, b), c),
                            [&](Token x, Token y) {
                              return a.entails(x.first(), y.first().first()) &&
                                     b.entails(x.second().first(), y.first().second()) &&
                                     c.entails(x.second().second(), y.second());
                            },
                            caps);
}

LinRel sym_tensor(const Lis& a, const Lis& b, const Caps& caps) {
  return rel_from_predicate(tensor_obj(a, b), tensor_obj(b, a),
                            [&](Token x, Token y) {
                              return a.entails(x.first(), y.second()) && b.entails(x.second(), y.first());
                            },
                            caps);
}

LinRel runit_tensor(const Lis& a, const Caps& caps) {
  return rel_from_predicate(tensor_obj(a, one_obj()), a,
                            [&](Token x, Token y) { return x.second() == Token::star() && a.entails(x.first(), y); },
                            caps);
}

LinRel lunit_tensor(const Lis& a, const Caps& caps) {
  return rel_from_predicate(tensor_obj(one_obj(), a), a,
                            [&](Token x, Token y) { return x.first() == Token::star() && a.entails(x.second(), y); },
                            caps);
}

LinRel assoc_with(const Lis& a, const Lis& b, const Lis& c, const Caps& caps) {
  return rel_from_predicate(with_obj(a, with_obj(b, c)), with_obj(with_obj(a, b), c),
                            [&](Token x, Token y) {
                              if (is_left(x)) {
                                return is_left(y) && is_left(y.inner()) && a.entails(x.inner(), y.inner().inner());
                              }
                              Token rest = x.inner();
                              if (is_left(rest)) {
                                return is_left(y) && is_right(y.inner()) && b.entails(rest.inner(), y.inner().inner());
                              }
                              return is_right(y) && c.entails(rest.inner(), y.inner());
                            },
                            caps);
}

LinRel sym_with(const Lis& a, const Lis& b, const Caps& caps) {
  return rel_from_predicate(with_obj(a, b), with_obj(b, a),
                            [&](Token x, Token y) {
                              if (is_left(x)) return is_right(y) && a.entails(x.inner(), y.inner());
                              return is_left(y) && b.entails(x.inner(), y.inner());
                            },
                            caps);
}

LinRel runit_with(const Lis& a, const Caps& caps) {
  return rel_from_predicate(with_obj(a, top_obj()), a,
                            [&](Token x, Token y) { return is_left(x) && a.entails(x.inner(), y); }, caps);
}

LinRel lunit_with(const Lis& a, const Caps& caps) {
  return rel_from_predicate(with_obj(top_obj(), a), a,
                            [&](Token x, Token y) { return is_right(x) && a.entails(x.inner(), y); }, caps);
}

LinRel assoc_tensor_inv(const Lis& a, const Lis& b, const Lis& c, const Caps& caps) {
  return rel_from_predicate(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)),
                            [&](Token x, Token y) {
                              return a.entails(x.first().first(), y.first()) &&
                                     b.entails(x.first().second(), y.second().first()) &&
                                     c.entails(x.second(), y.second().second());
                            },
                            caps);
}

LinRel runit_tensor_inv(const Lis& a, const Caps& caps) {
  return rel_from_predicate(a, tensor_obj(a, one_obj()),
                            [&](Token x, Token y) { return a.entails(x, y.first()); }, caps);
}

LinRel lunit_tensor_inv(const Lis& a, const Caps& caps) {
  return rel_from_predicate(a, tensor_obj(one_obj(), a),
                            [&](Token x, Token y) { return a.entails(x, y.second()); }, caps);
}

LinRel assoc_with_inv(const Lis& a, const Lis& b, const Lis& c, const Caps& caps) {
  return rel_from_predicate(with_obj(with_obj(a, b), c), with_obj(a, with_obj(b, c)),
                            [&](Token x, Token y) {
                              if (is_right(x)) {
                                return is_right(y) && is_right(y.inner()) && c.entails(x.inner(), y.inner().inner());
                              }
                              Token rest = x.inner();
                              if (is_left(rest)) return is_left(y) && a.entails(rest.inner(), y.inner());
                              return is_right(y) && is_left(y.inner()) && b.entails(rest.inner(), y.inner().inner());
                            },
                            caps);
}

LinRel runit_with_inv(const Lis& a, const Caps& caps) {
  return rel_from_predicate(a, with_obj(a, top_obj()),
                            [&](Token x, Token y) { return is_left(y) && a.entails(x, y.inner()); }, caps);
}

LinRel lunit_with_inv(const Lis& a, const Caps& caps) {
  return rel_from_predicate(a, with_obj(top_obj(), a),
                            [&](Token x, Token y) { return is_right(y) && a.entails(x, y.inner()); }, caps);
}

LinRel structural_iso(StructuralKind kind, std::span<const Lis> components, const Caps& caps) {
  auto need = [&](std::size_t n) {
    if (components.size() != n) {
      throw std::invalid_argument("structural_iso: expected " + std::to_string(n) + " component systems");
    }
  };
  switch (kind) {
    case StructuralKind::AssocT: need(3); return assoc_tensor(components[0], components[1], components[2], caps);
    case StructuralKind::SymT: need(2); return sym_tensor(components[0], components[1], caps);
    case StructuralKind::RunitT: need(1); return runit_tensor(components[0], caps);
    case StructuralKind::LunitT: need(1); return lunit_tensor(components[0], caps);
    case StructuralKind::AssocW: need(3); return assoc_with(components[0], components[1], components[2], caps);
    case StructuralKind::SymW: need(2); return sym_with(components[0], components[1], caps);
    case StructuralKind::RunitW: need(1); return runit_with(components[0], caps);
    case StructuralKind::LunitW: need(1); return lunit_with(components[0], caps);
  }
  throw std::invalid_argument("structural_iso: unknown kind");
}

Lis lollipop_obj(const Lis& a, const Lis& b) {
  return Lis(
      product_web(a, b), [a, b](std::span<const Token> ts) { return lollipop_con(a, b, ts); },
      [a, b](Token x, Token y) {
        return is_pair(x) && is_pair(y) && a.entails(y.first(), x.first()) && b.entails(x.second(), y.second());
      },
      "(" + a.signature() + " -o " + b.signature() + ")");
}

LinRel cur(const LinRel& r, const Lis& a, const Lis& c, const Caps& caps) {
  require_same(r.source(), tensor_obj(a, c), caps, "cur");
  std::vector<std::pair<Token, Token>> out;
  for (const auto& [ac, b] : r.pairs()) out.emplace_back(ac.second(), Token::pair(ac.first(), b));
  return LinRel(c, lollipop_obj(a, r.target()), out);
}

LinRel uncur(const LinRel& s, const Lis& a, const Lis& b, const Caps& caps) {
  require_same(s.target(), lollipop_obj(a, b), caps, "uncur");
  std::vector<std::pair<Token, Token>> out;
  for (const auto& [c, ab] : s.pairs()) out.emplace_back(Token::pair(ab.first(), c), ab.second());
  return LinRel(tensor_obj(a, s.source()), b, out);
}

LinRel ev(const Lis& a, const Lis& b, const Caps& caps) {
  return rel_from_predicate(tensor_obj(a, lollipop_obj(a, b)), b,
                            [&](Token x, Token y) {
                              Token f = x.second();
                              return a.entails(x.first(), f.first()) && b.entails(f.second(), y);
                            },
                            caps);
}

Lis dual_obj(const Lis& a) { return lollipop_obj(a, bottom_obj()); }

LinRel delta(const Lis& a, const Caps& caps) {
  return rel_from_predicate(a, lollipop_obj(dual_obj(a), bottom_obj()),
                            [&](Token x, Token y) { return a.entails(x, y.first().first()); }, caps);
}

}  // namespace infl
