#include "infl/bang.hpp"

#include <algorithm>

#include "infl/constructions.hpp"

namespace infl {

TokenSet set_of(Token finset) {
  auto e = finset.elems();
  return TokenSet(e.begin(), e.end());
}

namespace {

TokenSet union_of(std::span<const Token> family) {
  TokenSet out;
  for (Token t : family) {
    if (!t.is_finset()) return {};
    out = set_union(out, set_of(t));
  }
  return out;
}

bool all_finsets(std::span<const Token> ts) {
  return std::all_of(ts.begin(), ts.end(), [](Token t) { return t.is_finset(); });
}

}  // namespace

Lis bang_obj(const Lis& a, const Caps& caps) {
  std::vector<Token> web;
  for (auto& s : consistent_subsets(a, caps)) web.push_back(Token::finset(std::move(s)));
  return Lis(
      std::move(web),
      [a](std::span<const Token> family) { return all_finsets(family) && a.con(union_of(family)); },
      [a](Token x, Token y) {
        for (Token beta : y.elems()) {
          auto from = x.elems();
          if (std::none_of(from.begin(), from.end(), [&](Token alpha) { return a.entails(alpha, beta); })) {
            return false;
          }
        }
        return true;
      },
      "!" + a.signature());
}

LinRel bang_mor(const LinRel& r, const Caps& caps) {
  const Lis src = bang_obj(r.source(), caps);
  const Lis tgt = bang_obj(r.target(), caps);
  require_pairs(src.size(), tgt.size(), caps, "bang_mor");
  std::vector<std::vector<std::uint32_t>> succ(r.source().size());
  for (auto [x, y] : r.index_pairs()) succ[x].push_back(y);

  std::vector<IndexPair> out;
  std::vector<char> image(r.target().size());
  for (std::uint32_t i = 0; i < src.size(); ++i) {
    std::fill(image.begin(), image.end(), 0);
    for (Token alpha : src.web()[i].elems()) {
      for (auto j : succ[r.source().index_or_throw(alpha)]) image[j] = 1;
    }
    for (std::uint32_t k = 0; k < tgt.size(); ++k) {
      auto b = tgt.web()[k].elems();
      if (std::all_of(b.begin(), b.end(), [&](Token beta) { return image[r.target().index_or_throw(beta)] != 0; })) {
        out.emplace_back(i, k);
      }
    }
  }
  return LinRel::from_indices(src, tgt, std::move(out));
}

LinRel dig(const Lis& a, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  const Lis bba = bang_obj(ba, caps);
  return rel_from_predicate(ba, bba,
                            [&](Token b, Token y) { return ba.entails(b, Token::finset(union_of(y.elems()))); },
                            caps);
}

LinRel der(const Lis& a, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  return rel_from_predicate(ba, a, [&](Token b, Token beta) { return ba.entails(b, Token::finset({beta})); }, caps);
}

LinRel codig(const Lis& a, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  const Lis bba = bang_obj(ba, caps);
  return rel_from_predicate(bba, ba, [&](Token x, Token s) { return bba.entails(x, Token::finset({s})); }, caps);
}

LinRel cod(const Lis& a, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  return rel_from_predicate(a, ba, [&](Token alpha, Token b) { return ba.entails(Token::finset({alpha}), b); }, caps);
}

LinRel exp_structural(ExpKind kind, const Lis& a, const Caps& caps) {
  switch (kind) {
    case ExpKind::Dig: return dig(a, caps);
    case ExpKind::Der: return der(a, caps);
    case ExpKind::Codig: return codig(a, caps);
    case ExpKind::Cod: return cod(a, caps);
  }
  throw std::invalid_argument("exp_structural: unknown kind");
}

LinRel seely_m(const Lis& a, const Lis& b, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  const Lis bb = bang_obj(b, caps);
  const Lis target = bang_obj(with_obj(a, b), caps);
  return rel_from_predicate(tensor_obj(ba, bb), target,
                            [&](Token x, Token c) {
                              TokenSet left, right;
                              for (Token t : c.elems()) {
                                (t.kind() == TokenKind::Left ? left : right).push_back(t.inner());
                              }
                              return ba.entails(x.first(), Token::finset(std::move(left))) &&
                                     bb.entails(x.second(), Token::finset(std::move(right)));
                            },
                            caps);
}

LinRel seely_m_inv(const Lis& a, const Lis& b, const Caps& caps) {
  const Lis ba = bang_obj(a, caps);
  const Lis bb = bang_obj(b, caps);
  const Lis source = bang_obj(with_obj(a, b), caps);
  return rel_from_predicate(source, tensor_obj(ba, bb),
                            [&](Token c, Token y) {
                              std::vector<Token> tagged;
                              for (Token t : y.first().elems()) tagged.push_back(Token::left(t));
                              for (Token t : y.second().elems()) tagged.push_back(Token::right(t));
                              return source.entails(c, Token::finset(std::move(tagged)));
                            },
                            caps);
}

LinRel seely_n_inv() {
  const Lis bang_top = bang_obj(top_obj());
  return LinRel(bang_top, one_obj(), {{Token::finset({}), Token::star()}});
}

LinRel seely_n() {
  const Lis bang_top = bang_obj(top_obj());
  return LinRel(one_obj(), bang_top, {{Token::star(), Token::finset({})}});
}

LinRel cokleisli_compose(const Lis& a, const LinRel& r, const LinRel& s, const Caps& caps) {
  return compose(compose(dig(a, caps), bang_mor(r, caps), caps), s, caps);
}

LinRel cokleisli_id(const Lis& a, const Caps& caps) { return der(a, caps); }

}  // namespace infl
