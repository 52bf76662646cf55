#include <algorithm>
#include <set>

#include "doctest.h"
#include "infl/bang.hpp"
#include "infl/classical.hpp"
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

Token arrow_tok(const TokenSet& a, Token b) { return Token::pair(Token::finset(a), b); }

bool trace_subset(const TraceRel& r, const TraceRel& s) {
  return std::all_of(r.pairs().begin(), r.pairs().end(), [&](const auto& p) { return s.contains(p.first, p.second); });
}

// Composition from the definition: try every finite b in the middle web.
std::vector<TraceRel::Pair> compose_oracle(const TraceRel& r, const TraceRel& s) {
  const auto& mid = r.target().web();
  std::vector<TraceRel::Pair> out;
  for (const auto& a : consistent_sets(r.source())) {
    for (Token g : s.target().web()) {
      for (std::size_t m = 0; m < (std::size_t{1} << mid.size()); ++m) {
        TokenSet b;
        for (std::size_t i = 0; i < mid.size(); ++i) {
          if ((m >> i) & 1u) b.push_back(mid[i]);
        }
        const bool via = std::all_of(b.begin(), b.end(), [&](Token x) { return r.contains(a, x); });
        if (via && s.contains(b, g)) {
          out.emplace_back(a, g);
          break;
        }
      }
    }
  }
  return out;
}

std::set<TokenSet> as_token_sets(const std::vector<TraceRel>& rs) {
  std::set<TokenSet> out;
  for (const auto& r : rs) {
    TokenSet x;
    for (const auto& [a, b] : r.pairs()) x.push_back(arrow_tok(a, b));
    out.insert(make_token_set(x));
  }
  return out;
}

}  // namespace

TEST_CASE("identity and composition of traces") {
  const IS one = lis_to_is(fixtures::one());
  CHECK(to_string(identity_is(one)) == "{({*},*)}");
  CHECK(validate_is(one).ok());

  // Composite through a two-token intermediate set.
  const IS d2 = lis_to_is(fixtures::d2());
  TraceRel r(one, d2, {{{Token::star()}, tk("0")}, {{Token::star()}, tk("1")}});
  TraceRel s(d2, one, {{ts({"0", "1"}), Token::star()}});
  REQUIRE(validate_trace(r).ok());
  REQUIRE(validate_trace(s).ok());
  CHECK(to_string(compose_is(r, s)) == "{({*},*)}");
  CHECK(compose_is(r, s) == TraceRel(one, one, compose_oracle(r, s)));
  CHECK_THROWS_AS(compose_is(r, r), ObjectMismatch);
}

TEST_CASE("classical category laws on seeded traces") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Lis a = gen_lis(3 * seed, 3), b = gen_lis(3 * seed + 1, 3), c = gen_lis(3 * seed + 2, 3);
    const TraceRel r = phi_embed(gen_rel(seed, a, b)), s = phi_embed(gen_rel(seed + 77, b, c));
    CAPTURE(seed);
    CHECK(validate_trace(r).ok());
    CHECK(compose_is(identity_is(r.source()), r) == r);
    CHECK(compose_is(r, identity_is(r.target())) == r);
    const TraceRel rs = compose_is(r, s);
    CHECK(rs == TraceRel(r.source(), s.target(), compose_oracle(r, s)));
    CHECK(validate_trace(rs).ok());
    const TraceRel t = identity_is(s.target());
    CHECK(compose_is(compose_is(r, s), t) == compose_is(r, compose_is(s, t)));
  }
}

TEST_CASE("the function space") {
  const IS one = lis_to_is(fixtures::one());
  const IS arrow = arrow_is(one, one);
  CHECK(arrow.web() == make_token_set({arrow_tok({}, Token::star()), arrow_tok({Token::star()}, Token::star())}));
  CHECK(validate_is(arrow).ok());

  const IS v = lis_to_is(fixtures::v());
  const IS to_v = arrow_is(one, v);
  const TokenSet clash = make_token_set({arrow_tok({}, tk("p")), arrow_tok({}, tk("q"))});
  CHECK_FALSE(to_v.con(clash));
  CHECK(to_v.con(make_token_set({arrow_tok({}, tk("p")), arrow_tok({Token::star()}, tk("p"))})));

  // With a ⊢ b in C2, a consequence about {b} is inherited by the larger {a}.
  const IS c2 = lis_to_is(fixtures::c2());
  const IS from_c2 = arrow_is(c2, one);
  const TokenSet about_b = {arrow_tok(ts({"b"}), Token::star())};
  CHECK(from_c2.entails(about_b, arrow_tok(ts({"a"}), Token::star())));
  CHECK_FALSE(from_c2.entails(about_b, arrow_tok({}, Token::star())));
  CHECK(validate_is(from_c2).ok());
}

TEST_CASE("validation of classical systems") {
  for (const auto& [na, a] : fixtures::catalog()) {
    CAPTURE(na);
    CHECK(validate_is(lis_to_is(a)).ok());
    for (const auto& [nb, b] : fixtures::catalog()) {
      CAPTURE(nb);
      CHECK(validate_is(arrow_is(lis_to_is(a), lis_to_is(b))).ok());
    }
  }
  const Lis d2 = fixtures::d2();
  IS no_reflexivity(
      d2.web(), [](std::span<const Token>) { return true; }, [](std::span<const Token>, Token) { return false; },
      "broken");
  auto rep = validate_is(no_reflexivity);
  CHECK(rep.has(Axiom::IS2));
  CHECK_FALSE(rep.has(Axiom::IS1));

  const IS one = lis_to_is(fixtures::one());
  TraceRel inconsistent_source(lis_to_is(fixtures::v()), one, {{ts({"p", "q"}), Token::star()}});
  CHECK(validate_trace(inconsistent_source).has(Axiom::AR1));
  TraceRel not_closed(lis_to_is(fixtures::c2()), one, {{ts({"b"}), Token::star()}});
  CHECK(validate_trace(not_closed).has(Axiom::AR2));
}

TEST_CASE("phi and linear traces") {
  CHECK(to_string(phi_embed(identity(fixtures::v()))) == "{({p},p),({q},q)}");

  const Lis xy = discrete({"x", "y"});
  TraceRel both(lis_to_is(xy), lis_to_is(fixtures::one()), {{ts({"x", "y"}), Token::star()}});
  CHECK(validate_trace(both).ok());
  CHECK_FALSE(is_linear_trace(both));

  for (std::uint64_t s = 0; s < 100; ++s) {
    Lis a = gen_lis(2 * s, 3), b = gen_lis(2 * s + 1, 3);
    CAPTURE(s);
    CHECK(is_linear_trace(phi_embed(gen_rel(s, a, b))));
  }
}

TEST_CASE("phi is an order-embedding onto the linear traces") {
  const auto cat = fixtures::catalog();
  std::size_t pairs_checked = 0;
  for (const auto& [na, a] : cat) {
    for (const auto& [nb, b] : cat) {
      const IS ia = lis_to_is(a), ib = lis_to_is(b);
      if (consistent_sets(ia).size() * b.size() > 12) continue;
      CAPTURE(na);
      CAPTURE(nb);
      const auto lin = enumerate_homset(a, b);
      std::vector<TraceRel> images;
      for (const auto& r : lin) images.push_back(phi_embed(r));
      for (std::size_t i = 0; i < lin.size(); ++i) {
        for (std::size_t j = 0; j < lin.size(); ++j) {
          const auto pi = lin[i].pairs();
          const bool sub =
              std::all_of(pi.begin(), pi.end(), [&](const auto& p) { return lin[j].contains(p.first, p.second); });
          CHECK(sub == trace_subset(images[i], images[j]));
        }
      }
      std::vector<TraceRel> linear;
      for (const auto& s : enumerate_trace_homset(ia, ib)) {
        if (is_linear_trace(s)) linear.push_back(s);
      }
      CHECK(as_token_sets(linear) == as_token_sets(images));
      CHECK(linear.size() == images.size());
      ++pairs_checked;
    }
  }
  CHECK(pairs_checked >= 10);
}

TEST_CASE("classical points") {
  for (const auto& [name, a] : fixtures::catalog()) {
    CAPTURE(name);
    CHECK(points_is(lis_to_is(a)).elements() == points(a).elements());
    const TraceRel id = identity_is(lis_to_is(a));
    const Poset pts = points(a);
    for (const auto& x : pts.elements()) CHECK(apply_bullet(id, x) == x);
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    Lis a = gen_lis(s + 300, 4);
    CAPTURE(s);
    CHECK(points_is(lis_to_is(a)).elements() == points(a).elements());
  }
  CHECK_THROWS_AS(apply_bullet(identity_is(lis_to_is(fixtures::c2())), ts({"a"})), NotAPoint);
}

TEST_CASE("approximable relations are the points of the function space") {
  const auto cat = fixtures::catalog();
  for (const auto& [na, a] : cat) {
    for (const auto& [nb, b] : cat) {
      const IS ia = lis_to_is(a), ib = lis_to_is(b);
      if (consistent_sets(ia).size() * b.size() > 12) continue;
      CAPTURE(na);
      CAPTURE(nb);
      const auto homs = enumerate_trace_homset(ia, ib);
      const Poset pts = points_is(arrow_is(ia, ib));
      CHECK(homs.size() == pts.size());
      CHECK(as_token_sets(homs) == std::set<TokenSet>(pts.elements().begin(), pts.elements().end()));
    }
  }
}

TEST_CASE("bridge between the exponential and the function space") {
  const auto cat = fixtures::catalog();
  for (const auto& [na, a] : cat) {
    for (const auto& [nb, b] : cat) {
      CAPTURE(na);
      CAPTURE(nb);
      auto rep = bridge_check(a, b);
      CAPTURE(rep.witness);
      CHECK(rep.ok());
    }
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    Lis a = gen_lis(3 * s + 11, 2), b = gen_lis(3 * s + 12, 2), c = gen_lis(3 * s + 13, 2);
    const LinRel r = gen_rel(s, bang_obj(a), b), t = gen_rel(s + 5, bang_obj(b), c);
    CAPTURE(s);
    auto w = cokleisli_vs_inf(a, r, t);
    CHECK_FALSE(w.has_value());
  }
}
