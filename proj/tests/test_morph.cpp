#include <algorithm>

#include "doctest.h"
#include "infl/constructions.hpp"
#include "infl/fixtures.hpp"
#include "infl/laws.hpp"
#include "infl/morph.hpp"

using namespace infl;

namespace {

Token tk(const char* s) { return Token::atom(s); }

// Every subset of a × b that passes validate_rel, by plain enumeration.
std::vector<LinRel> homset_oracle(const Lis& a, const Lis& b) {
  std::vector<std::pair<Token, Token>> all;
  for (Token x : a.web()) {
    for (Token y : b.web()) all.emplace_back(x, y);
  }
  std::vector<LinRel> out;
  for (std::size_t m = 0; m < (std::size_t{1} << all.size()); ++m) {
    std::vector<std::pair<Token, Token>> ps;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((m >> i) & 1u) ps.push_back(all[i]);
    }
    LinRel r(a, b, ps);
    if (validate_rel(r).ok()) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const LinRel& x, const LinRel& y) {
    return std::lexicographical_compare(x.index_pairs().begin(), x.index_pairs().end(), y.index_pairs().begin(),
                                        y.index_pairs().end());
  });
  return out;
}

// Relational composition straight from the definition.
std::vector<std::pair<Token, Token>> compose_oracle(const LinRel& r, const LinRel& s) {
  std::vector<std::pair<Token, Token>> out;
  for (Token a : r.source().web()) {
    for (Token c : s.target().web()) {
      for (Token b : r.target().web()) {
        if (r.contains(a, b) && s.contains(b, c)) {
          out.emplace_back(a, c);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validate_rel examples") {
  CHECK(validate_rel(identity(fixtures::one())).ok());
  CHECK(validate_rel(LinRel(fixtures::v(), fixtures::d2(), {{tk("p"), tk("0")}})).ok());
  CHECK(validate_rel(LinRel(fixtures::c2(), fixtures::d2(), {{tk("a"), tk("0")}})).ok());

  auto bad = validate_rel(LinRel(fixtures::c2(), fixtures::d2(), {{tk("b"), tk("0")}}));
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].axiom == Axiom::AR2);

  // {p} and {q} map into {0,1}; a relation sending p and q to inconsistent
  // tokens only fails AR1 when the source set is consistent.
  Lis pq = make_lis("pq", {tk("p"), tk("q")}, {{tk("p"), tk("q")}}, {});
  auto ar1 = validate_rel(LinRel(pq, fixtures::v(), {{tk("p"), tk("p")}, {tk("q"), tk("q")}}));
  REQUIRE(ar1.violations.size() == 1);
  CHECK(ar1.violations[0].axiom == Axiom::AR1);
}

TEST_CASE("identity is the entailment relation") {
  const LinRel id = identity(fixtures::c2());
  CHECK(to_string(id) == "{(a,a),(a,b),(b,b)}");
  CHECK(validate_rel(id).ok());
}

TEST_CASE("composition examples") {
  LinRel r(fixtures::v(), fixtures::d2(), {{tk("p"), tk("0")}});
  LinRel s(fixtures::d2(), fixtures::one(), {{tk("0"), Token::star()}});
  CHECK(to_string(compose(r, s)) == "{(p,*)}");
  CHECK_THROWS_AS(compose(r, r), ObjectMismatch);
}

TEST_CASE("ar2_close adds the forced pairs") {
  LinRel r = ar2_close(fixtures::c2(), fixtures::d2(), {{tk("b"), tk("0")}});
  CHECK(to_string(r) == "{(a,0),(b,0)}");
  CHECK(validate_rel(r).ok());
}

TEST_CASE("hom-set examples") {
  for (const auto& [name, a] : fixtures::catalog()) {
    CAPTURE(name);
    auto to_top = enumerate_homset(a, fixtures::top());
    REQUIRE(to_top.size() == 1);
    CHECK(to_top[0].empty());
    auto from_top = enumerate_homset(fixtures::top(), a);
    REQUIRE(from_top.size() == 1);
    CHECK(from_top[0].empty());
  }
  CHECK(enumerate_homset(fixtures::one(), fixtures::one()).size() == 2);
  Lis big = discrete({"0", "1", "2", "3", "4"});
  CHECK_THROWS_AS(enumerate_homset(big, big), CapExceeded);
}

TEST_CASE("enumerate_homset agrees with filtering every subset") {
  const auto cat = fixtures::catalog();
  for (const auto& [na, a] : cat) {
    for (const auto& [nb, b] : cat) {
      if (a.size() * b.size() > 12) continue;
      CAPTURE(na);
      CAPTURE(nb);
      CHECK(enumerate_homset(a, b) == homset_oracle(a, b));
    }
  }
}

TEST_CASE("is_iso examples") {
  auto inv = is_iso(identity(fixtures::c2()));
  REQUIRE(inv.has_value());
  CHECK(*inv == identity(fixtures::c2()));
  CHECK(is_iso(delta(fixtures::d2())).has_value());
  CHECK_FALSE(is_iso(delta(fixtures::v())).has_value());
  CHECK_FALSE(is_iso(LinRel(fixtures::one(), fixtures::one(), {})).has_value());
}

TEST_CASE("seeded relations compose like the definition and obey the category laws") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Lis a = gen_lis(3 * s, 4), b = gen_lis(3 * s + 1, 4), c = gen_lis(3 * s + 2, 4);
    LinRel r = gen_rel(s, a, b), t = gen_rel(s + 1000, b, c);
    CAPTURE(s);
    const LinRel rt = compose(r, t);
    CHECK(rt == LinRel(a, c, compose_oracle(r, t)));
    CHECK(validate_rel(rt).ok());
    CHECK(compose(identity(a), r) == r);
    CHECK(compose(r, identity(b)) == r);
  }
}

TEST_CASE("ar2_close is the least AR2-closed superset") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Lis a = gen_lis(2 * s + 7, 3), b = gen_lis(2 * s + 8, 3);
    if (a.size() == 0 || b.size() == 0) continue;
    std::vector<std::pair<Token, Token>> seeds{{a.web()[s % a.size()], b.web()[(s / 2) % b.size()]}};
    LinRel r = ar2_close(a, b, seeds);
    CAPTURE(s);
    CHECK_FALSE(validate_rel(r).has(Axiom::AR2));
    // Dropping any pair other than a seed breaks AR2, so nothing is superfluous.
    for (const auto& p : r.pairs()) {
      if (p == seeds[0]) continue;
      auto ps = r.pairs();
      ps.erase(std::find(ps.begin(), ps.end(), p));
      CHECK(validate_rel(LinRel(a, b, ps)).has(Axiom::AR2));
    }
  }
}
