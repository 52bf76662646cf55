#include "infl/classical.hpp"

#include <algorithm>

#include "infl/bang.hpp"
#include "infl/constructions.hpp"

namespace infl {

namespace {

bool pair_less(const TraceRel::Pair& x, const TraceRel::Pair& y) {
  if (auto c = compare_sets(x.first, y.first); c != 0) return c < 0;
  return x.second < y.second;
}

bool first_less(const TraceRel::Pair& x, const TraceRel::Pair& y) { return compare_sets(x.first, y.first) < 0; }

void extend(const IS& a, TokenSet& current, std::size_t from, std::vector<TokenSet>& out, std::size_t limit) {
  for (std::size_t i = from; i < a.size(); ++i) {
    current.push_back(a.web()[i]);
    if (a.con(current)) {
      if (out.size() >= limit || (std::size_t{1} << std::min<std::size_t>(current.size(), 63)) > limit) {
        throw CapExceeded("cap exceeded: more than " + std::to_string(limit) + " consistent sets in " +
                          a.signature());
      }
      out.push_back(current);
      extend(a, current, i + 1, out, limit);
    }
    current.pop_back();
  }
}

std::vector<TokenSet> subsets_of(const TokenSet& s, const Caps& caps, const char* what) {
  if (s.size() > caps.subset_web) {
    throw CapExceeded(std::string("cap exceeded: ") + what + " over " + std::to_string(s.size()) + " tokens");
  }
  std::vector<TokenSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) {
    TokenSet b;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((m >> i) & 1u) b.push_back(s[i]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string show_pair(const TokenSet& a, Token b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

bool is_arrow_token(Token t) { return t.kind() == TokenKind::Pair && t.first().is_finset(); }

}  // namespace

IS::IS(std::vector<Token> web, ConFn con, TraceFn trace, std::string signature)
    : web_(make_token_set(std::move(web))),
      con_(std::move(con)),
      trace_(std::move(trace)),
      signature_(std::move(signature)) {}

bool IS::entails_all(std::span<const Token> a, std::span<const Token> b) const {
  return std::all_of(b.begin(), b.end(), [&](Token t) { return trace_(a, t); });
}

TokenSet IS::image(std::span<const Token> a) const {
  TokenSet out;
  for (Token t : web_) {
    if (trace_(a, t)) out.push_back(t);
  }
  return out;
}

std::vector<TokenSet> consistent_sets(const IS& a, const Caps& caps) {
  std::vector<TokenSet> out;
  if (!a.con(std::span<const Token>{})) return out;
  out.push_back({});
  TokenSet current;
  extend(a, current, 0, out, caps.subset_limit());
  std::sort(out.begin(), out.end(), [](const TokenSet& x, const TokenSet& y) { return compare_sets(x, y) < 0; });
  return out;
}

ValidationReport validate_is(const IS& a, const Caps& caps) {
  ValidationReport rep;
  if (!a.con(std::span<const Token>{})) rep.violations.push_back({Axiom::EmptySet, "{} is not consistent"});
  for (Token t : a.web()) {
    if (!a.con(std::span<const Token>(&t, 1))) rep.violations.push_back({Axiom::Singleton, "{" + to_string(t) + "} is not consistent"});
  }
  for (const auto& s : consistent_sets(a, caps)) {
    const TokenSet img = a.image(s);
    for (Token t : s) {
      if (!std::binary_search(img.begin(), img.end(), t)) {
        rep.violations.push_back({Axiom::IS2, to_string(s) + " does not entail its member " + to_string(t)});
      }
    }
    for (const auto& b : subsets_of(img, caps, "IS1/IS3")) {
      if (!a.con(b)) {
        rep.violations.push_back({Axiom::IS1, to_string(s) + " entails inconsistent " + to_string(b)});
        continue;
      }
      for (Token g : a.image(b)) {
        if (!std::binary_search(img.begin(), img.end(), g)) {
          rep.violations.push_back(
              {Axiom::IS3, to_string(s) + " entails " + to_string(b) + " which entails " + to_string(g)});
        }
      }
    }
  }
  return rep;
}

TraceRel::TraceRel(IS source, IS target, std::vector<Pair> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
  for (auto& [a, b] : pairs_) {
    a = make_token_set(std::move(a));
    for (Token t : a) {
      if (!source_.contains(t)) throw OutsideWeb(to_string(t) + " is not a token of " + source_.signature());
    }
    if (!target_.contains(b)) throw OutsideWeb(to_string(b) + " is not a token of " + target_.signature());
  }
  std::sort(pairs_.begin(), pairs_.end(), pair_less);
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool TraceRel::contains(const TokenSet& a, Token b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b}, pair_less);
}

TokenSet TraceRel::image(const TokenSet& a) const {
  auto [lo, hi] = std::equal_range(pairs_.begin(), pairs_.end(), Pair{a, Token::star()}, first_less);
  TokenSet out;
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

std::string to_string(const TraceRel& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.pairs().size(); ++i) {
    if (i) out += ",";
    out += show_pair(r.pairs()[i].first, r.pairs()[i].second);
  }
  return out + "}";
}

ValidationReport validate_trace(const TraceRel& r, const Caps& caps) {
  ValidationReport rep;
  const IS& a = r.source();
  const IS& b = r.target();
  for (const auto& [s, t] : r.pairs()) {
    if (!a.con(s)) rep.violations.push_back({Axiom::AR1, "source " + to_string(s) + " is not consistent"});
  }
  const auto cons = consistent_sets(a, caps);
  require_pairs(cons.size(), cons.size(), caps, "validate_trace");
  std::vector<TokenSet> forced;
  for (const auto& s : cons) {
    const TokenSet img = r.image(s);
    if (!b.con(img)) rep.violations.push_back({Axiom::AR1, to_string(s) + " relates to inconsistent " + to_string(img)});
    forced.push_back(b.image(img));
  }
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = 0; j < cons.size(); ++j) {
      if (!a.entails_all(cons[j], cons[i])) continue;
      for (Token t : forced[i]) {
        if (!r.contains(cons[j], t)) {
          rep.violations.push_back({Axiom::AR2, show_pair(cons[j], t) + " forced via " + to_string(cons[i])});
        }
      }
    }
  }
  return rep;
}

TraceRel identity_is(const IS& a, const Caps& caps) {
  std::vector<TraceRel::Pair> out;
  for (const auto& s : consistent_sets(a, caps)) {
    for (Token t : a.image(s)) out.emplace_back(s, t);
  }
  return TraceRel(a, a, std::move(out));
}

TraceRel compose_is(const TraceRel& r, const TraceRel& s, const Caps& caps) {
  if (r.target().signature() != s.source().signature()) {
    throw ObjectMismatch("cannot compose: " + r.target().signature() + " vs " + s.source().signature());
  }
  std::vector<TraceRel::Pair> out;
  for (const auto& a : consistent_sets(r.source(), caps)) {
    const TokenSet img = r.image(a);
    for (const auto& [b, g] : s.pairs()) {
      if (is_subset(b, img)) out.emplace_back(a, g);
    }
  }
  return TraceRel(r.source(), s.target(), std::move(out));
}

namespace {

// Depth-first over J, extending only while ∪ a_j stays consistent; every
// such J must have a consistent set of β_j.
bool arrow_con(const IS& a, const IS& b, std::span<const Token> ts, std::size_t from, TokenSet& left,
               TokenSet& right) {
  for (std::size_t i = from; i < ts.size(); ++i) {
    const TokenSet saved_left = left, saved_right = right;
    left = set_union(left, set_of(ts[i].first()));
    right = set_union(right, TokenSet{ts[i].second()});
    bool ok = true;
    if (a.con(left)) ok = b.con(right) && arrow_con(a, b, ts, i + 1, left, right);
    left = saved_left;
    right = saved_right;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

IS arrow_is(const IS& a, const IS& b, const Caps& caps) {
  std::vector<Token> web;
  for (const auto& s : consistent_sets(a, caps)) {
    for (Token t : b.web()) web.push_back(Token::pair(Token::finset(s), t));
  }
  auto in_web = [](const std::vector<Token>& w, Token t) { return std::binary_search(w.begin(), w.end(), t); };
  const TokenSet sorted = make_token_set(web);
  return IS(
      web,
      [a, b, sorted, in_web](std::span<const Token> ts) {
        for (Token t : ts) {
          if (!in_web(sorted, t)) return false;
        }
        TokenSet left, right;
        return arrow_con(a, b, ts, 0, left, right);
      },
      [a, b, sorted, in_web](std::span<const Token> ts, Token target) {
        if (!in_web(sorted, target) || !is_arrow_token(target)) return false;
        const TokenSet from = set_of(target.first());
        TokenSet betas;
        for (Token t : ts) {
          if (!is_arrow_token(t)) return false;
          if (a.entails_all(from, set_of(t.first()))) betas.push_back(t.second());
        }
        return b.entails(make_token_set(std::move(betas)), target.second());
      },
      "(" + a.signature() + " => " + b.signature() + ")");
}

IS lis_to_is(const Lis& a) {
  return IS(
      a.web(), [a](std::span<const Token> ts) { return a.con(ts); },
      [a](std::span<const Token> ts, Token t) {
        return std::any_of(ts.begin(), ts.end(), [&](Token x) { return a.entails(x, t); });
      },
      "is " + a.signature());
}

TraceRel phi_embed(const LinRel& r, const Caps& caps) {
  std::vector<TraceRel::Pair> out;
  for (const auto& s : consistent_subsets(r.source(), caps)) {
    for (Token t : r.target().web()) {
      if (std::any_of(s.begin(), s.end(), [&](Token x) { return r.contains(x, t); })) out.emplace_back(s, t);
    }
  }
  return TraceRel(lis_to_is(r.source()), lis_to_is(r.target()), std::move(out));
}

bool is_linear_trace(const TraceRel& s, const Caps& caps) {
  for (const auto& a : consistent_sets(s.source(), caps)) {
    for (Token t : s.target().web()) {
      const bool linear = std::any_of(a.begin(), a.end(), [&](Token x) { return s.contains({x}, t); });
      if (s.contains(a, t) != linear) return false;
    }
  }
  return true;
}

std::vector<TraceRel> enumerate_trace_homset(const IS& a, const IS& b, const Caps& caps) {
  std::vector<TraceRel::Pair> cand;
  for (const auto& s : consistent_sets(a, caps)) {
    for (Token t : b.web()) cand.emplace_back(s, t);
  }
  if (cand.size() > caps.homset_pairs) {
    throw CapExceeded("cap exceeded: " + std::to_string(cand.size()) + " candidate trace pairs (limit " +
                      std::to_string(caps.homset_pairs) + ")");
  }
  std::vector<TraceRel> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cand.size()); ++m) {
    std::vector<TraceRel::Pair> ps;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if ((m >> i) & 1u) ps.push_back(cand[i]);
    }
    TraceRel r(a, b, std::move(ps));
    if (validate_trace(r, caps).ok()) out.push_back(std::move(r));
  }
  return out;
}

Poset points_is(const IS& a, const Caps& caps) {
  std::vector<TokenSet> pts;
  for (auto& s : consistent_sets(a, caps)) {
    if (is_subset(a.image(s), s)) pts.push_back(std::move(s));
  }
  return Poset(std::move(pts));
}

TokenSet apply_bullet(const TraceRel& r, const TokenSet& x, const Caps&) {
  const IS& a = r.source();
  const TokenSet xs = make_token_set(x);
  const bool in_web = std::all_of(xs.begin(), xs.end(), [&](Token t) { return a.contains(t); });
  if (!in_web || !a.con(xs) || !is_subset(a.image(xs), xs)) {
    throw NotAPoint(to_string(xs) + " is not a point of " + a.signature());
  }
  TokenSet out;
  for (const auto& [s, t] : r.pairs()) {
    if (is_subset(s, xs)) out.push_back(t);
  }
  return make_token_set(std::move(out));
}

TraceRel trace_of(const LinRel& r, const Lis& a, const Lis& b) {
  std::vector<TraceRel::Pair> out;
  for (const auto& [x, t] : r.pairs()) {
    if (!x.is_finset()) throw ObjectMismatch("trace_of expects a morphism out of !A");
    out.emplace_back(set_of(x), t);
  }
  return TraceRel(lis_to_is(a), lis_to_is(b), std::move(out));
}

TraceRel trace_from_tokens(const IS& a, const IS& b, const TokenSet& x) {
  std::vector<TraceRel::Pair> out;
  for (Token t : x) {
    if (!is_arrow_token(t)) throw OutsideWeb(to_string(t) + " is not a token of A => B");
    out.emplace_back(set_of(t.first()), t.second());
  }
  return TraceRel(a, b, std::move(out));
}

std::optional<std::string> cokleisli_vs_inf(const Lis& a, const LinRel& r, const LinRel& s, const Caps& caps) {
  const Lis& b = r.target();
  const Lis& c = s.target();
  const TraceRel lin = trace_of(cokleisli_compose(a, r, s, caps), a, c);
  const TraceRel inf = compose_is(trace_of(r, a, b), trace_of(s, b, c), caps);
  if (lin == inf) return std::nullopt;
  for (const auto& [x, t] : lin.pairs()) {
    if (!inf.contains(x, t)) return show_pair(x, t) + " only in the co-Kleisli composite";
  }
  for (const auto& [x, t] : inf.pairs()) {
    if (!lin.contains(x, t)) return show_pair(x, t) + " only in the classical composite";
  }
  return "composites differ";
}

BridgeReport bridge_check(const Lis& a, const Lis& b, const Caps& caps) {
  BridgeReport rep;
  auto fail = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  const IS ia = lis_to_is(a), ib = lis_to_is(b);
  const IS arrow = arrow_is(ia, ib, caps);
  const Lis lolli = lollipop_obj(bang_obj(a, caps), b);

  rep.webs_equal = arrow.web() == lolli.web();
  if (!rep.webs_equal) fail("webs differ");

  rep.con_equal = rep.webs_equal;
  if (rep.webs_equal) {
    for (const auto& s : subsets_of(arrow.web(), caps, "bridge Con comparison")) {
      if (arrow.con(s) != lolli.con(s)) {
        rep.con_equal = false;
        fail("Con differs at " + to_string(s));
        break;
      }
    }
  }

  rep.entails_equal = rep.con_equal;
  if (rep.con_equal) {
    for (const auto& s : consistent_subsets(lolli, caps)) {
      for (Token t : lolli.web()) {
        const bool linear = std::any_of(s.begin(), s.end(), [&](Token x) { return lolli.entails(x, t); });
        if (arrow.entails(s, t) != linear) {
          rep.entails_equal = false;
          fail("entailment differs at " + to_string(s) + " |- " + to_string(t));
        }
      }
      if (!rep.entails_equal) break;
    }
  }

  const Lis ba = bang_obj(a, caps);
  const auto homs = enumerate_homset(ba, b, caps);
  std::vector<TokenSet> as_sets;
  for (const auto& r : homs) as_sets.push_back(as_lollipop_tokens(r));
  const Poset hom_poset(as_sets);
  const Poset pts = points_is(arrow, caps);
  rep.homset_is_points = hom_poset.size() == homs.size() && hom_poset.elements() == pts.elements();
  if (!rep.homset_is_points) fail("Infl(!A,B) has " + std::to_string(homs.size()) + " members, (A => B) has " +
                                  std::to_string(pts.size()) + " points");

  std::vector<LinRel> seconds{cokleisli_id(b, caps)};
  const auto endo = enumerate_homset(bang_obj(b, caps), b, caps);
  const std::size_t k = std::min<std::size_t>(8, endo.size());
  for (std::size_t i = 0; i < k; ++i) seconds.push_back(endo[i * endo.size() / k]);
  rep.cokleisli_is_inf = true;
  for (const auto& r : homs) {
    for (const auto& s : seconds) {
      if (auto w = cokleisli_vs_inf(a, r, s, caps)) {
        rep.cokleisli_is_inf = false;
        fail("co-Kleisli composite differs: " + *w);
        break;
      }
    }
    if (!rep.cokleisli_is_inf) break;
  }
  return rep;
}

}  // namespace infl
