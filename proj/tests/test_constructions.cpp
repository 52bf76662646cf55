#include <algorithm>

#include "doctest.h"
#include "infl/constructions.hpp"
#include "infl/fixtures.hpp"
#include "infl/laws.hpp"

using namespace infl;

namespace {

Token tk(const char* s) { return Token::atom(s); }
Token L(Token t) { return Token::left(t); }
Token R(Token t) { return Token::right(t); }
Token P(Token a, Token b) { return Token::pair(a, b); }
const Token star = Token::star();

// The ∀J condition of linear implication, checked over every sub-selection.
bool lollipop_con_oracle(const Lis& a, const Lis& b, const TokenSet& ts) {
  for (std::size_t m = 0; m < (std::size_t{1} << ts.size()); ++m) {
    TokenSet firsts, seconds;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if ((m >> i) & 1u) {
        firsts.push_back(ts[i].first());
        seconds.push_back(ts[i].second());
      }
    }
    if (a.con(make_token_set(firsts)) && !b.con(make_token_set(seconds))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("with_obj examples") {
  CHECK(with_obj(fixtures::top(), fixtures::top()).size() == 0);
  Lis oo = with_obj(fixtures::one(), fixtures::one());
  CHECK(oo.web() == std::vector<Token>{L(star), R(star)});
  CHECK(oo.con({L(star), R(star)}));
  CHECK(oo.entails(L(star), L(star)));
  CHECK_FALSE(oo.entails(L(star), R(star)));
  Lis vd = with_obj(fixtures::v(), fixtures::d2());
  CHECK_FALSE(vd.con({L(tk("p")), L(tk("q"))}));
  CHECK(vd.con({L(tk("p")), R(tk("0")), R(tk("1"))}));
  CHECK(validate_lis(vd).ok());
}

TEST_CASE("with and plus coincide on the catalog") {
  for (const auto& [na, a] : fixtures::catalog()) {
    for (const auto& [nb, b] : fixtures::catalog()) {
      CAPTURE(na);
      CAPTURE(nb);
      CHECK(lis_equal(with_obj(a, b), plus_obj(a, b)));
    }
  }
}

TEST_CASE("projections and pairing") {
  const Lis one = fixtures::one();
  CHECK(to_string(proj(1, one, one)) == "{(L *,*)}");
  const LinRel id = identity(one);
  const LinRel p = pair(id, id);
  CHECK(to_string(p) == "{(*,L *),(*,R *)}");
  CHECK(compose(p, proj(1, one, one)) == id);
  CHECK(compose(p, proj(2, one, one)) == id);
  std::size_t mediating = 0;
  for (const auto& t : enumerate_homset(one, with_obj(one, one))) {
    if (compose(t, proj(1, one, one)) == id && compose(t, proj(2, one, one)) == id) ++mediating;
  }
  CHECK(mediating == 1);
}

TEST_CASE("copairing can leave the hom-set") {
  // Both summands send * into V, to p and q respectively. {L *, R *} is
  // consistent in ONE + ONE but its image {p, q} is not consistent in V.
  const Lis one = fixtures::one(), v = fixtures::v();
  const LinRel r(one, v, {{star, tk("p")}});
  const LinRel s(one, v, {{star, tk("q")}});
  const LinRel c = copair(r, s);
  CHECK(compose(inj(1, one, one), c) == r);
  CHECK(compose(inj(2, one, one), c) == s);
  CHECK(validate_rel(c).has(Axiom::AR1));
}

TEST_CASE("tensor examples") {
  const Lis oo = tensor_obj(fixtures::one(), fixtures::one());
  CHECK(oo.web() == std::vector<Token>{P(star, star)});
  CHECK(lis_equal(oo, oo));
  const Lis vv = tensor_obj(fixtures::v(), fixtures::v());
  CHECK_FALSE(vv.con({P(tk("p"), tk("p")), P(tk("q"), tk("p"))}));
  CHECK(vv.con({P(tk("p"), tk("p"))}));
  CHECK(tensor_mor(identity(fixtures::v()), identity(fixtures::v())) == identity(vv));
  CHECK(validate_lis(vv).ok());
}

TEST_CASE("structural isomorphisms on fixtures") {
  const Lis one = fixtures::one(), d2 = fixtures::d2(), v = fixtures::v();
  CHECK(to_string(sym_tensor(one, one)) == "{((*,*),(*,*))}");
  CHECK(to_string(runit_tensor(d2)) == "{((0,*),0),((1,*),1)}");
  const LinRel a = assoc_tensor(v, d2, one);
  CHECK(validate_rel(a).ok());
  CHECK(is_iso(a).has_value());
  const std::vector<Lis> three{v, d2, one};
  CHECK(structural_iso(StructuralKind::AssocT, three) == a);
  for (const auto& [name, x] : fixtures::catalog()) {
    CAPTURE(name);
    for (const LinRel& m : {runit_tensor(x), lunit_tensor(x), runit_with(x), lunit_with(x), sym_tensor(x, one),
                            sym_with(x, d2)}) {
      CHECK(validate_rel(m).ok());
      CHECK(is_iso(m).has_value());
    }
  }
}

TEST_CASE("dropping a pair from a structural iso breaks validity or invertibility") {
  const Lis d2 = fixtures::d2(), c2 = fixtures::c2(), v = fixtures::v();
  const std::vector<std::pair<LinRel, LinRel>> isos{
      {sym_tensor(c2, v), sym_tensor(v, c2)},
      {runit_tensor(c2), runit_tensor_inv(c2)},
      {lunit_tensor(d2), lunit_tensor_inv(d2)},
      {assoc_tensor(c2, d2, v), assoc_tensor_inv(c2, d2, v)},
      {sym_with(c2, v), sym_with(v, c2)},
      {assoc_with(c2, v, d2), assoc_with_inv(c2, v, d2)},
  };
  for (const auto& [m, inv] : isos) {
    REQUIRE(is_inverse_pair(m, inv));
    auto ps = m.index_pairs();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::vector<IndexPair> kept(ps.begin(), ps.end());
      kept.erase(kept.begin() + static_cast<long>(i));
      const LinRel cut = LinRel::from_indices(m.source(), m.target(), kept);
      CHECK_FALSE((validate_rel(cut).ok() && is_inverse_pair(cut, inv)));
    }
  }
}

TEST_CASE("linear implication") {
  const Lis vo = lollipop_obj(fixtures::v(), fixtures::one());
  CHECK(vo.con({P(tk("p"), star), P(tk("q"), star)}));
  const Lis dv = lollipop_obj(fixtures::d2(), fixtures::v());
  CHECK_FALSE(dv.con({P(tk("0"), tk("p")), P(tk("1"), tk("q"))}));
  CHECK_FALSE(dv.con({P(tk("0"), tk("p")), P(tk("0"), tk("q"))}));
  const Lis vv = lollipop_obj(fixtures::v(), fixtures::v());
  CHECK(vv.con({P(tk("p"), tk("p")), P(tk("q"), tk("q"))}));
  CHECK(to_string(ev(fixtures::one(), fixtures::one())) == "{((*,(*,*)),*)}");
}

TEST_CASE("linear implication consistency matches the definition") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Lis a = gen_lis(2 * s, 3), b = gen_lis(2 * s + 1, 3);
    Lis ab = lollipop_obj(a, b);
    CAPTURE(s);
    if (ab.size() > 8) continue;
    for (const auto& ts : all_subsets(ab)) CHECK(ab.con(ts) == lollipop_con_oracle(a, b, ts));
    CHECK(validate_lis(ab).ok());
  }
}

TEST_CASE("cur is a bijection between hom-sets on fixtures") {
  const auto cat = fixtures::catalog();
  for (const auto& [na, a] : cat) {
    for (const auto& [nb, b] : cat) {
      for (const auto& [nc, c] : cat) {
        if (a.size() * b.size() * c.size() > 4) continue;
        CAPTURE(na);
        CAPTURE(nb);
        CAPTURE(nc);
        auto lhs = enumerate_homset(tensor_obj(a, c), b);
        auto rhs = enumerate_homset(c, lollipop_obj(a, b));
        REQUIRE(lhs.size() == rhs.size());
        for (const auto& r : lhs) {
          const LinRel k = cur(r, a, c);
          CHECK(std::find(rhs.begin(), rhs.end(), k) != rhs.end());
          CHECK(uncur(k, a, b) == r);
        }
      }
    }
  }
}

TEST_CASE("dual objects") {
  const Lis dv = dual_obj(fixtures::v());
  CHECK(in_inflfull(dv));
  CHECK(dv.entails(P(tk("p"), star), P(tk("p"), star)));
  CHECK_FALSE(dv.entails(P(tk("p"), star), P(tk("q"), star)));
  const Lis dc = dual_obj(fixtures::c2());
  CHECK(dc.entails(P(tk("b"), star), P(tk("a"), star)));
  CHECK_FALSE(dc.entails(P(tk("a"), star), P(tk("b"), star)));
  auto inv = is_iso(delta(fixtures::d2()));
  REQUIRE(inv.has_value());
  CHECK(validate_rel(*inv).ok());
  CHECK_FALSE(is_iso(delta(fixtures::v())).has_value());
}
