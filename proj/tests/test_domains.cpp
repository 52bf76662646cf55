#include <random>

#include "doctest.h"
#include "infl/bang.hpp"
#include "infl/constructions.hpp"
#include "infl/domains.hpp"
#include "infl/fixtures.hpp"
#include "infl/laws.hpp"

using namespace infl;

namespace {

Token tk(const char* s) { return Token::atom(s); }

TokenSet ts(std::initializer_list<const char*> names) {
  std::vector<Token> out;
  for (auto n : names) out.push_back(tk(n));
  return make_token_set(out);
}

// Points straight from the definition: consistent and closed under ⊢.
std::vector<TokenSet> points_oracle(const Lis& a) {
  std::vector<TokenSet> out;
  for (const auto& s : all_subsets(a)) {
    bool closed = a.con(s);
    for (Token x : s) {
      for (Token y : a.web()) {
        if (a.entails(x, y) && !std::binary_search(s.begin(), s.end(), y)) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// A random inclusion poset over the atoms 0..3.
Poset random_poset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const char* atoms[] = {"0", "1", "2", "3"};
  std::vector<TokenSet> elems;
  const std::size_t n = 2 + rng() % 7;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Token> s;
    for (auto a : atoms) {
      if (rng() % 2) s.push_back(tk(a));
    }
    elems.push_back(make_token_set(s));
  }
  if (rng() % 3) elems.push_back({});
  return Poset(elems);
}

}  // namespace

TEST_CASE("points of the fixtures") {
  CHECK(points(fixtures::one()).elements() == std::vector<TokenSet>{{}, {Token::star()}});
  CHECK(points(fixtures::top()).elements() == std::vector<TokenSet>{{}});
  CHECK(points(fixtures::v()).elements() == std::vector<TokenSet>{{}, ts({"p"}), ts({"q"})});
  CHECK(points(fixtures::c2()).elements() == std::vector<TokenSet>{{}, ts({"b"}), ts({"a", "b"})});
  CHECK_FALSE(is_point(fixtures::c2(), ts({"a"})));
  CHECK_FALSE(is_point(fixtures::v(), ts({"p", "q"})));
}

TEST_CASE("points agree with the definition on seeded systems") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Lis a = gen_lis(s, 4);
    CAPTURE(s);
    auto expect = points_oracle(a);
    const Poset p = points(a);
    CHECK(p.size() == expect.size());
    for (const auto& x : expect) CHECK(p.index_of(x).has_value());
    CHECK(p.bottom().has_value());
    CHECK(p.at(*p.bottom()).empty());
  }
}

TEST_CASE("primes, lubs and bounded-completeness") {
  const Poset v = points(fixtures::v());
  auto ps = primes(v);
  REQUIRE(ps.size() == 2);
  CHECK(v.at(ps[0]) == ts({"p"}));
  CHECK(v.at(ps[1]) == ts({"q"}));
  CHECK_FALSE(lub(v, {ps[0], ps[1]}).has_value());
  CHECK(is_bounded_complete(v));
  CHECK(is_prime_algebraic(v));

  Poset diamond({{}, ts({"x"}), ts({"y"}), ts({"x", "y", "z"}), ts({"x", "y", "w"})});
  CHECK_FALSE(is_bounded_complete(diamond));
  CHECK(check_bounded_complete(diamond).witness.find("no lub") != std::string::npos);

  // The four-element chain bottom < a < b < top: every non-bottom element is prime.
  Poset chain({{}, ts({"a"}), ts({"a", "b"}), ts({"a", "b", "c"})});
  CHECK(primes(chain).size() == 3);
}

TEST_CASE("pairwise prime test agrees with the exhaustive one") {
  std::size_t tested = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Poset p = random_poset(s);
    CAPTURE(s);
    CHECK(primes(p) == primes_exhaustive(p));
    tested += is_bounded_complete(p);
  }
  CHECK(tested > 50);
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Poset p = points(gen_lis(s, 4));
    CHECK(primes(p) == primes_exhaustive(p));
    CHECK(is_prime_algebraic(p));
  }
}

TEST_CASE("minus of small domains") {
  Poset two({{}, ts({"a"})});
  CHECK(minus_obj(two).size() == 1);
  CHECK(find_order_iso(points(minus_obj(two)), two).has_value());
  CHECK(find_order_iso(points(minus_obj(two)), points(fixtures::one())).has_value());
  CHECK(find_order_iso(points(minus_obj(points(fixtures::v()))), points(fixtures::v())).has_value());
  CHECK(minus_obj(points(fixtures::v())).size() == 2);

  Poset no_bottom({ts({"a"}), ts({"b"})});
  CHECK_THROWS_AS(minus_obj(no_bottom), NotInPsd);
}

TEST_CASE("R+ on points") {
  const Lis v = fixtures::v();
  const LinRel d = der(v);
  const TokenSet empty_tok = make_token_set({Token::finset({})});
  const TokenSet x = make_token_set({Token::finset({}), Token::finset({tk("p")})});
  CHECK(apply_plus(d, x) == ts({"p"}));
  CHECK(apply_plus(d, empty_tok).empty());
  CHECK_THROWS_AS(apply_plus(d, make_token_set({Token::finset({tk("p")})})), NotAPoint);
}

TEST_CASE("constant map to the top is not linear") {
  Poset two({{}, ts({"a"})});
  auto c = check_linear_map(two, two, {1, 1});
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.witness.empty());
  CHECK(is_linear_map(two, two, {0, 1}));
  CHECK(is_linear_map(two, two, {0, 0}));
}

TEST_CASE("R+ is linear and minus is natural on seeded morphisms") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    Lis a = gen_lis(2 * s, 3), b = gen_lis(2 * s + 1, 3);
    LinRel r = gen_rel(s, a, b);
    CAPTURE(s);
    const Poset pa = points(a), pb = points(b);
    const PosetMap f = plus_map(r, pa, pb);
    CHECK(is_linear_map(pa, pb, f));
    const LinRel ea = roundtrip_object(a).eta, eb = roundtrip_object(b).eta;
    CHECK(compose(ea, minus_mor(pa, pb, f)) == compose(r, eb));
  }
}

TEST_CASE("round trips") {
  for (const auto& [name, a] : fixtures::catalog()) {
    CAPTURE(name);
    auto rt = roundtrip_object(a);
    CHECK(validate_rel(rt.eta).ok());
    REQUIRE(rt.inverse.has_value());
    CHECK(is_inverse_pair(rt.eta, *rt.inverse));
    CHECK(roundtrip_domain(points(a)).has_value());
  }
  const auto eta_v = roundtrip_object(fixtures::v()).eta;
  CHECK(eta_v.pairs().size() == 2);
  for (std::uint64_t s = 0; s < 40; ++s) {
    Lis a = gen_lis(s + 500, 4);
    CAPTURE(s);
    CHECK(roundtrip_object(a).inverse.has_value());
    CHECK(roundtrip_domain(points(a)).has_value());
  }
}

TEST_CASE("order-iso search") {
  Poset two({{}, ts({"a"})});
  Poset flat({{}, ts({"a"}), ts({"b"})});
  Poset chain({{}, ts({"a"}), ts({"a", "b"})});
  CHECK_FALSE(find_order_iso(flat, chain).has_value());
  CHECK_FALSE(find_order_iso(two, flat).has_value());
  auto f = find_order_iso(product_poset(two, two), points(discrete({"x", "y"})));
  CHECK(f.has_value());
}

TEST_CASE("preservation of & and of hom-sets") {
  const Lis o = fixtures::one(), v = fixtures::v();
  for (auto [a, b] : {std::pair{o, o}, std::pair{v, o}, std::pair{o, v}}) {
    auto rep = preservation_checks(a, b);
    CHECK(rep.ok());
    CHECK(rep.witness.empty());
  }
  for (std::uint64_t s = 0; s < 30; ++s) {
    Lis a = gen_lis(3 * s, 2), b = gen_lis(3 * s + 1, 2);
    CAPTURE(s);
    CHECK(preservation_checks(a, b).ok());
  }
}
