#include "infl/domains.hpp"

#include <algorithm>
#include <functional>

#include "infl/constructions.hpp"

namespace infl {

namespace {

bool size_then_canonical(const TokenSet& x, const TokenSet& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return compare_sets(x, y) < 0;
}

std::string show(const Poset& p, std::size_t i) { return to_string(p.at(i)); }

std::string show_all(const Poset& p, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += show(p, s[k]);
  }
  return out + "}";
}

void require_elements(const Poset& p, const Caps& caps, const char* what) {
  if (p.size() > caps.subset_web) {
    throw CapExceeded(std::string("cap exceeded: ") + what + " over " + std::to_string(p.size()) +
                      " elements (limit " + std::to_string(caps.subset_web) + ")");
  }
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

/// Lubs of all pairs; npos where the pair is unbounded or has no lub.
std::vector<std::size_t> pair_lubs(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> table(n * n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (auto l = lub(p, {i, j})) table[i * n + j] = table[j * n + i] = *l;
    }
  }
  return table;
}

bool bounded(const Poset& p, std::size_t i, std::size_t j) {
  for (std::size_t u = 0; u < p.size(); ++u) {
    if (p.leq(i, u) && p.leq(j, u)) return true;
  }
  return false;
}

}  // namespace

Poset::Poset(std::vector<TokenSet> elements) : elems_(std::move(elements)) {
  for (auto& e : elems_) e = make_token_set(std::move(e));
  std::sort(elems_.begin(), elems_.end(), size_then_canonical);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const std::size_t n = elems_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = is_subset(elems_[i], elems_[j]) ? 1 : 0;
  }
}

std::optional<std::size_t> Poset::index_of(const TokenSet& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x, size_then_canonical);
  if (it == elems_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

std::optional<std::size_t> Poset::bottom() const { return lub(*this, {}); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; direct && k < n; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      }
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

bool is_point(const Lis& a, const TokenSet& x) {
  if (!std::all_of(x.begin(), x.end(), [&](Token t) { return a.contains(t); })) return false;
  // Con is subset-closed, so PT1 for a finite x is just x ∈ Con.
  return a.con(x) && entailment_image(a, x) == make_token_set(x);
}

Poset points(const Lis& a, const Caps& caps) {
  std::vector<TokenSet> pts;
  for (auto& s : consistent_subsets(a, caps)) {
    if (entailment_image(a, s) == s) pts.push_back(std::move(s));
  }
  return Poset(std::move(pts));
}

TokenSet apply_plus(const LinRel& r, const TokenSet& x) {
  if (!is_point(r.source(), x)) throw NotAPoint(to_string(x) + " is not a point of " + r.source().signature());
  TokenSet out;
  for (const auto& [alpha, beta] : r.pairs()) {
    if (std::binary_search(x.begin(), x.end(), alpha)) out.push_back(beta);
  }
  return make_token_set(std::move(out));
}

std::optional<std::size_t> lub(const Poset& p, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> ub;
  for (std::size_t u = 0; u < p.size(); ++u) {
    if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return p.leq(x, u); })) ub.push_back(u);
  }
  for (std::size_t u : ub) {
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return p.leq(u, v); })) return u;
  }
  return std::nullopt;
}

PsdCheck check_bounded_complete(const Poset& p) {
  if (p.size() == 0) return {};
  if (!p.bottom()) return {false, "no least element"};
  // A finite poset with a bottom is bounded-complete once every bounded pair
  // has a lub: lubs of larger bounded sets are built pairwise.
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (bounded(p, i, j) && !lub(p, {i, j})) return {false, "no lub for " + show_all(p, {i, j})};
    }
  }
  return {};
}

bool is_bounded_complete(const Poset& p) { return check_bounded_complete(p).ok; }

std::vector<std::size_t> primes_exhaustive(const Poset& p, const Caps& caps) {
  require_elements(p, caps, "prime search");
  const std::size_t n = p.size();
  std::vector<char> prime(n, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto b = members(mask, n);
    const auto l = lub(p, b);
    if (!l) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (!prime[x] || !p.leq(x, *l)) continue;
      if (std::none_of(b.begin(), b.end(), [&](std::size_t y) { return p.leq(x, y); })) prime[x] = 0;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (prime[x]) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> primes(const Poset& p, const Caps& caps) {
  if (!is_bounded_complete(p)) return primes_exhaustive(p, caps);
  // With bounded-completeness, testing B = ∅ and bounded pairs suffices:
  // ∨B for larger B is a nested pairwise lub.
  const std::size_t n = p.size();
  const auto lubs = pair_lubs(p);
  const auto bot = p.bottom();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (bot && *bot == x) continue;
    bool prime = true;
    for (std::size_t i = 0; prime && i < n; ++i) {
      for (std::size_t j = i + 1; prime && j < n; ++j) {
        const std::size_t l = lubs[i * n + j];
        if (l == static_cast<std::size_t>(-1) || !p.leq(x, l)) continue;
        if (!p.leq(x, i) && !p.leq(x, j)) prime = false;
      }
    }
    if (prime) out.push_back(x);
  }
  return out;
}

PsdCheck check_prime_algebraic(const Poset& p, const Caps& caps) {
  const auto ps = primes(p, caps);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> below;
    for (std::size_t q : ps) {
      if (p.leq(q, x)) below.push_back(q);
    }
    auto l = lub(p, below);
    if (!l || *l != x) return {false, show(p, x) + " is not the lub of the primes below it"};
  }
  return {};
}

bool is_prime_algebraic(const Poset& p, const Caps& caps) { return check_prime_algebraic(p, caps).ok; }

PosetMap plus_map(const LinRel& r, const Poset& from, const Poset& to) {
  PosetMap f;
  for (const auto& x : from.elements()) {
    auto idx = to.index_of(apply_plus(r, x));
    if (!idx) throw NotAPoint("image of " + to_string(x) + " is not a point of the target");
    f.push_back(*idx);
  }
  return f;
}

PsdCheck check_linear_map(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps) {
  if (f.size() != p.size()) return {false, "map is not total"};
  for (std::size_t y : f) {
    if (y >= q.size()) return {false, "map leaves the target"};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !q.leq(f[i], f[j])) return {false, "not monotone at " + show_all(p, {i, j})};
    }
  }
  require_elements(p, caps, "lub preservation");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    const auto s = members(mask, p.size());
    const auto l = lub(p, s);
    if (!l) continue;
    std::vector<std::size_t> image;
    for (std::size_t x : s) image.push_back(f[x]);
    const auto m = lub(q, image);
    if (!m || *m != f[*l]) return {false, "lub of " + show_all(p, s) + " not preserved"};
  }
  return {};
}

bool is_linear_map(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps) {
  return check_linear_map(p, q, f, caps).ok;
}

namespace {

void require_psd(const Poset& p, const Caps& caps) {
  if (auto c = check_bounded_complete(p); !c.ok) throw NotInPsd("not bounded-complete: " + c.witness);
  if (auto c = check_prime_algebraic(p, caps); !c.ok) throw NotInPsd("not prime algebraic: " + c.witness);
}

Token element_token(const Poset& p, std::size_t i) { return Token::finset(p.at(i)); }

}  // namespace

Lis minus_obj(const Poset& p, const Caps& caps) {
  require_psd(p, caps);
  const auto ps = primes(p, caps);
  std::vector<Token> web;
  for (std::size_t q : ps) web.push_back(element_token(p, q));
  std::vector<TokenSet> gens;
  for (std::size_t x = 0; x < p.size(); ++x) {
    TokenSet below;
    for (std::size_t q : ps) {
      if (p.leq(q, x)) below.push_back(element_token(p, q));
    }
    gens.push_back(std::move(below));
  }
  std::vector<std::pair<Token, Token>> pairs;
  for (std::size_t q1 : ps) {
    for (std::size_t q2 : ps) {
      if (q1 != q2 && p.leq(q2, q1)) pairs.emplace_back(element_token(p, q1), element_token(p, q2));
    }
  }
  return make_lis("minus", std::move(web), gens, pairs);
}

LinRel minus_mor(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps) {
  if (auto c = check_linear_map(p, q, f, caps); !c.ok) throw NotInPsd("not linear: " + c.witness);
  const Lis src = minus_obj(p, caps);
  const Lis tgt = minus_obj(q, caps);
  std::vector<std::pair<Token, Token>> out;
  for (std::size_t x : primes(p, caps)) {
    for (std::size_t y : primes(q, caps)) {
      if (q.leq(y, f[x])) out.emplace_back(element_token(p, x), element_token(q, y));
    }
  }
  return LinRel(src, tgt, out);
}

std::optional<PosetMap> find_order_iso(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto signature = [](const Poset& x, std::size_t i) {
    std::size_t down = 0, up = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      down += x.leq(j, i);
      up += x.leq(i, j);
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = signature(p, i);
    sq[i] = signature(q, i);
  }
  PosetMap f(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sq[c] != sp[i]) continue;
      bool fits = true;
      for (std::size_t j = 0; fits && j < i; ++j) {
        fits = p.leq(i, j) == q.leq(c, f[j]) && p.leq(j, i) == q.leq(f[j], c);
      }
      if (!fits) continue;
      f[i] = c;
      used[c] = 1;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return f;
}

RoundTrip roundtrip_object(const Lis& a, const Caps& caps) {
  const Poset pts = points(a, caps);
  const Lis m = minus_obj(pts, caps);
  const auto ps = primes(pts, caps);
  std::vector<std::pair<Token, Token>> eta_pairs, zeta_pairs;
  for (Token alpha : a.web()) {
    const TokenSet cl = principal_closure(a, alpha);
    for (std::size_t q : ps) {
      if (is_subset(pts.at(q), cl)) eta_pairs.emplace_back(alpha, element_token(pts, q));
    }
  }
  for (std::size_t q : ps) {
    for (Token alpha : pts.at(q)) zeta_pairs.emplace_back(element_token(pts, q), alpha);
  }
  RoundTrip out{LinRel(a, m, eta_pairs), std::nullopt};
  // ζ = {(p, α) : α ∈ p} is tried first; the generic search is the fallback.
  LinRel zeta(m, a, zeta_pairs);
  if (validate_rel(zeta, caps).ok() && is_inverse_pair(out.eta, zeta, caps)) {
    out.inverse = std::move(zeta);
  } else {
    out.inverse = is_iso(out.eta, caps);
  }
  return out;
}

std::optional<PosetMap> roundtrip_domain(const Poset& p, const Caps& caps) {
  return find_order_iso(p, points(minus_obj(p, caps), caps));
}

Poset product_poset(const Poset& p, const Poset& q) {
  std::vector<TokenSet> elems;
  for (const auto& x : p.elements()) {
    for (const auto& y : q.elements()) {
      TokenSet s;
      for (Token t : x) s.push_back(Token::left(t));
      for (Token t : y) s.push_back(Token::right(t));
      elems.push_back(std::move(s));
    }
  }
  return Poset(std::move(elems));
}

TokenSet as_lollipop_tokens(const LinRel& r) {
  TokenSet out;
  for (const auto& [x, y] : r.pairs()) out.push_back(Token::pair(x, y));
  return make_token_set(std::move(out));
}

PreservationReport preservation_checks(const Lis& a, const Lis& b, const Caps& caps) {
  PreservationReport rep;
  rep.product_iso = find_order_iso(points(with_obj(a, b), caps), product_poset(points(a, caps), points(b, caps)))
                        .has_value();
  if (!rep.product_iso) rep.witness = "points of A & B are not order-isomorphic to A+ x B+";

  std::vector<TokenSet> homs;
  for (const auto& r : enumerate_homset(a, b, caps)) homs.push_back(as_lollipop_tokens(r));
  std::sort(homs.begin(), homs.end(), size_then_canonical);
  const Poset lolli = points(lollipop_obj(a, b), caps);
  const auto& pts = lolli.elements();
  rep.homset_is_points = homs == pts;
  if (!rep.homset_is_points && rep.witness.empty()) {
    auto diff = std::mismatch(homs.begin(), homs.end(), pts.begin(), pts.end());
    rep.witness = diff.first != homs.end() ? "morphism " + to_string(*diff.first) + " is not a point"
                                           : "point " + to_string(*diff.second) + " is not a morphism";
  }
  return rep;
}

}  // namespace infl
