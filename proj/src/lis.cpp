#include "infl/lis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace infl {

struct Lis::Impl {
  std::vector<Token> web;
  std::unordered_map<Token, std::uint32_t> index;
  ConFn con;
  EntailsFn entails;
  std::string signature;
  std::optional<LisTables> tables;
};

void require_pairs(std::size_t left, std::size_t right, const Caps& caps, const char* what) {
  if (left != 0 && right > caps.pair_limit() / left) {
    std::ostringstream os;
    os << "cap exceeded: " << what << " needs " << left << "x" << right << " token pairs (limit "
       << caps.pair_limit() << ")";
    throw CapExceeded(os.str());
  }
}

namespace {

void require_subsets(std::size_t web, const Caps& caps, const char* what) {
  if (web > caps.subset_web) {
    std::ostringstream os;
    os << "cap exceeded: " << what << " enumerates subsets of a " << web << "-token web (limit "
       << caps.subset_web << ")";
    throw CapExceeded(os.str());
  }
}

TokenSet mask_to_set(const std::vector<Token>& web, Mask m) {
  TokenSet out;
  for (std::size_t i = 0; i < web.size(); ++i) {
    if ((m >> i) & 1u) out.push_back(web[i]);
  }
  return out;
}

constexpr std::size_t kMaskWeb = 64;

std::vector<Token> sorted_web(std::vector<Token> web) { return make_token_set(std::move(web)); }

Mask mask_of(const std::vector<Token>& web, std::span<const Token> tokens) {
  Mask m = 0;
  for (Token t : tokens) {
    auto it = std::lower_bound(web.begin(), web.end(), t);
    if (it == web.end() || *it != t) {
      throw OutsideWeb("token " + to_string(t) + " is not in the web");
    }
    m |= Mask{1} << (it - web.begin());
  }
  return m;
}

std::string describe_masks(const std::vector<Mask>& masks) {
  std::ostringstream os;
  for (Mask m : masks) os << std::hex << m << ',';
  return os.str();
}

}  // namespace

Lis::Lis()
    : Lis({}, [](std::span<const Token>) { return true; }, [](Token, Token) { return false; }, "top") {}

Lis::Lis(std::vector<Token> web, ConFn con, EntailsFn entails, std::string signature,
         std::optional<LisTables> tables) {
  auto impl = std::make_shared<Impl>();
  impl->web = sorted_web(std::move(web));
  impl->index.reserve(impl->web.size());
  for (std::uint32_t i = 0; i < impl->web.size(); ++i) impl->index.emplace(impl->web[i], i);
  impl->con = std::move(con);
  impl->entails = std::move(entails);
  impl->signature = std::move(signature);
  impl->tables = std::move(tables);
  impl_ = std::move(impl);
}

const std::vector<Token>& Lis::web() const noexcept { return impl_->web; }

bool Lis::contains(Token t) const { return impl_->index.contains(t); }

std::optional<std::uint32_t> Lis::index_of(Token t) const {
  auto it = impl_->index.find(t);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Lis::index_or_throw(Token t) const {
  auto i = index_of(t);
  if (!i) throw OutsideWeb("token " + to_string(t) + " is not in the web of " + impl_->signature);
  return *i;
}

bool Lis::con(std::span<const Token> tokens) const {
  for (Token t : tokens) {
    if (!contains(t)) return false;
  }
  return impl_->con(tokens);
}

bool Lis::entails(Token from, Token to) const {
  return contains(from) && contains(to) && impl_->entails(from, to);
}

const std::string& Lis::signature() const noexcept { return impl_->signature; }

const LisTables* Lis::tables() const noexcept { return impl_->tables ? &*impl_->tables : nullptr; }

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::IS1: return "IS1";
    case Axiom::IS2: return "IS2";
    case Axiom::IS3: return "IS3";
    case Axiom::Singleton: return "SINGLETON";
    case Axiom::EmptySet: return "EMPTYSET";
    case Axiom::WebScope: return "WEB-SCOPE";
    case Axiom::AR1: return "AR1";
    case Axiom::AR2: return "AR2";
  }
  return "?";
}

bool ValidationReport::has(Axiom a) const { return count(a) > 0; }

std::size_t ValidationReport::count(Axiom a) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [a](const Violation& v) { return v.axiom == a; }));
}

Mask EntailmentTable::image(Mask a) const {
  Mask out = 0;
  for (std::size_t i = 0; i < up.size(); ++i) {
    if ((a >> i) & 1u) out |= up[i];
  }
  return out;
}

bool ConsistencyTable::con(Mask a) const {
  if (a == 0) return true;
  return std::any_of(maximal.begin(), maximal.end(), [a](Mask m) { return (a & ~m) == 0; });
}

EntailmentTable close_entailment(const std::vector<Token>& web_in,
                                 const std::vector<std::pair<Token, Token>>& pairs) {
  EntailmentTable table;
  table.web = sorted_web(web_in);
  const auto& web = table.web;
  if (web.size() > kMaskWeb) {
    throw CapExceeded("cap exceeded: explicit systems are limited to 64 tokens");
  }
  table.up.assign(web.size(), 0);
  for (std::size_t i = 0; i < web.size(); ++i) table.up[i] = Mask{1} << i;
  for (const auto& [a, b] : pairs) {
    Mask ma = mask_of(web, std::span<const Token>(&a, 1));
    Mask mb = mask_of(web, std::span<const Token>(&b, 1));
    table.up[std::countr_zero(ma)] |= mb;
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < web.size(); ++k) {
    for (std::size_t i = 0; i < web.size(); ++i) {
      if ((table.up[i] >> k) & 1u) table.up[i] |= table.up[k];
    }
  }
  return table;
}

ConsistencyTable close_consistency(const std::vector<Token>& web_in, const std::vector<TokenSet>& generators,
                                   const EntailmentTable& entails) {
  ConsistencyTable table;
  table.web = sorted_web(web_in);
  if (table.web != entails.web) {
    throw std::invalid_argument("close_consistency: entailment table is over a different web");
  }
  std::vector<Mask> seeds;
  for (std::size_t i = 0; i < table.web.size(); ++i) seeds.push_back(Mask{1} << i);
  for (const auto& g : generators) seeds.push_back(mask_of(table.web, g));
  // b ⊆ ↑g for some seed g is closed under IS1 because ↑ is idempotent.
  std::vector<Mask> images;
  for (Mask s : seeds) images.push_back(entails.image(s));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  for (Mask m : images) {
    bool dominated = std::any_of(images.begin(), images.end(),
                                 [m](Mask other) { return other != m && (m & ~other) == 0; });
    if (!dominated) table.maximal.push_back(m);
  }
  return table;
}

Lis make_lis(std::string name, std::vector<Token> web, const std::vector<TokenSet>& con_generators,
             const std::vector<std::pair<Token, Token>>& entails_pairs) {
  auto ent = std::make_shared<const EntailmentTable>(close_entailment(web, entails_pairs));
  auto con = std::make_shared<const ConsistencyTable>(close_consistency(ent->web, con_generators, *ent));
  std::ostringstream sig;
  sig << "sys:" << name << "[";
  for (Token t : ent->web) sig << to_string(t) << ' ';
  sig << "|" << describe_masks(con->maximal) << "|" << describe_masks(ent->up) << "]";
  LisTables tables{con_generators, entails_pairs};
  return Lis(
      ent->web,
      [con](std::span<const Token> ts) { return con->con(mask_of(con->web, ts)); },
      [ent](Token a, Token b) {
        Token pa[] = {a};
        Token pb[] = {b};
        return (ent->image(mask_of(ent->web, pa)) & mask_of(ent->web, pb)) != 0;
      },
      sig.str(), std::move(tables));
}

Lis raw_lis(std::string name, std::vector<Token> web, std::vector<TokenSet> con_family,
            std::vector<std::pair<Token, Token>> entails_pairs) {
  for (auto& s : con_family) s = make_token_set(std::move(s));
  auto family = std::make_shared<std::vector<TokenSet>>(con_family);
  std::sort(family->begin(), family->end(), [](const TokenSet& a, const TokenSet& b) { return compare_sets(a, b) < 0; });
  auto pairs = std::make_shared<std::vector<std::pair<Token, Token>>>(entails_pairs);
  std::sort(pairs->begin(), pairs->end());
  std::ostringstream sig;
  sig << "raw:" << name << "[";
  for (Token t : make_token_set(web)) sig << to_string(t) << ' ';
  sig << "|";
  for (const auto& s : *family) sig << to_string(s);
  sig << "|";
  for (const auto& [a, b] : *pairs) sig << to_string(a) << ">" << to_string(b) << ' ';
  sig << "]";
  return Lis(
      std::move(web),
      [family](std::span<const Token> ts) {
        TokenSet key = make_token_set(std::vector<Token>(ts.begin(), ts.end()));
        return std::binary_search(family->begin(), family->end(), key,
                                  [](const TokenSet& a, const TokenSet& b) { return compare_sets(a, b) < 0; });
      },
      [pairs](Token a, Token b) { return std::binary_search(pairs->begin(), pairs->end(), std::pair{a, b}); },
      sig.str(), LisTables{std::move(con_family), std::move(entails_pairs)});
}

Lis discrete(const std::vector<std::string>& names) {
  std::vector<Token> web;
  for (const auto& n : names) web.push_back(Token::atom(n));
  web = make_token_set(std::move(web));
  std::string sig = "discrete[";
  for (Token t : web) sig += to_string(t) + " ";
  sig += "]";
  return Lis(
      web, [](std::span<const Token>) { return true; }, [](Token a, Token b) { return a == b; }, sig);
}

ValidationReport validate_lis(const Lis& a, const Caps& caps) {
  ValidationReport report;
  const auto& web = a.web();
  const std::size_t n = web.size();
  require_subsets(n, caps, "validate_lis");

  if (const LisTables* t = a.tables()) {
    for (const auto& s : t->con_family) {
      for (Token x : s) {
        if (!a.contains(x)) report.violations.push_back({Axiom::WebScope, "con set " + to_string(s) + " mentions " + to_string(x)});
      }
    }
    for (const auto& [x, y] : t->entails_pairs) {
      if (!a.contains(x) || !a.contains(y)) {
        report.violations.push_back({Axiom::WebScope, "entailment " + to_string(x) + " -> " + to_string(y)});
      }
    }
  }

  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<char> con(std::size_t{1} << n);
  for (Mask m = 0; m <= full; ++m) {
    con[m] = a.con(mask_to_set(web, m));
    if (m == full) break;
  }
  if (!con[0]) report.violations.push_back({Axiom::EmptySet, "{}"});
  for (std::size_t i = 0; i < n; ++i) {
    if (!con[Mask{1} << i]) report.violations.push_back({Axiom::Singleton, to_string(web[i])});
  }

  std::vector<Mask> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.entails(web[i], web[j])) up[i] |= Mask{1} << j;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!((up[i] >> i) & 1u)) report.violations.push_back({Axiom::IS2, to_string(web[i])});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!((up[i] >> j) & 1u)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (((up[j] >> k) & 1u) && !((up[i] >> k) & 1u)) {
          report.violations.push_back(
              {Axiom::IS3, to_string(web[i]) + " -> " + to_string(web[j]) + " -> " + to_string(web[k])});
        }
      }
    }
  }

  // IS1 fails at a iff some nonempty b ⊆ ↑a is inconsistent. closed[m]: every
  // nonempty subset of m is consistent.
  std::vector<char> closed(con.size());
  for (Mask m = 0; m <= full; ++m) {
    bool ok = m == 0 || con[m];
    for (std::size_t i = 0; ok && i < n; ++i) {
      if ((m >> i) & 1u) {
        Mask sub = m & ~(Mask{1} << i);
        if (sub != 0 && !closed[sub]) ok = false;
      }
    }
    closed[m] = ok;
    if (m == full) break;
  }
  for (Mask m = 0; m <= full; ++m) {
    if (con[m]) {
      Mask img = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((m >> i) & 1u) img |= up[i];
      }
      if (img != 0 && !closed[img]) {
        Mask b = img;
        while (con[b]) {
          for (std::size_t i = 0; i < n; ++i) {
            Mask sub = b & ~(Mask{1} << i);
            if (((b >> i) & 1u) && sub != 0 && !closed[sub]) {
              b = sub;
              break;
            }
          }
        }
        report.violations.push_back(
            {Axiom::IS1, "a=" + to_string(mask_to_set(web, m)) + " b=" + to_string(mask_to_set(web, b))});
      }
    }
    if (m == full) break;
  }
  return report;
}

std::optional<TokenSet> inflfull_witness(const Lis& a, const Caps& caps) {
  const std::size_t n = a.size();
  require_subsets(n, caps, "in_inflfull");
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    TokenSet s = mask_to_set(a.web(), m);
    if (!a.con(s)) return s;
    if (m == full) break;
  }
  return std::nullopt;
}

bool in_inflfull(const Lis& a, const Caps& caps) { return !inflfull_witness(a, caps).has_value(); }

bool lis_equal(const Lis& a, const Lis& b, const Caps& caps) {
  if (a.web() != b.web()) return false;
  if (a.same_handle(b)) return true;
  const std::size_t n = a.size();
  require_subsets(n, caps, "lis_equal");
  require_pairs(n, n, caps, "lis_equal");
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    TokenSet s = mask_to_set(a.web(), m);
    if (a.con(s) != b.con(s)) return false;
    if (m == full) break;
  }
  for (Token x : a.web()) {
    for (Token y : a.web()) {
      if (a.entails(x, y) != b.entails(x, y)) return false;
    }
  }
  return true;
}

bool same_object(const Lis& a, const Lis& b, const Caps& caps) {
  if (a.same_handle(b)) return true;
  if (a.web() != b.web()) return false;
  if (a.signature() == b.signature()) return true;
  return lis_equal(a, b, caps);
}

std::vector<TokenSet> all_subsets(const Lis& a, const Caps& caps) {
  const std::size_t n = a.size();
  require_subsets(n, caps, "all_subsets");
  std::vector<TokenSet> out;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask m = 0;; ++m) {
    out.push_back(mask_to_set(a.web(), m));
    if (m == full) break;
  }
  return out;
}

namespace {

void extend_consistent(const Lis& a, TokenSet& current, std::size_t next, std::vector<TokenSet>& out,
                       std::size_t limit) {
  const auto& web = a.web();
  for (std::size_t i = next; i < web.size(); ++i) {
    current.push_back(web[i]);
    if (a.con(current)) {
      // Con is subset-closed, so a consistent set this large already implies
      // more than `limit` consistent subsets; stopping here also bounds the depth.
      if (out.size() >= limit || (std::size_t{1} << std::min<std::size_t>(current.size(), 63)) > limit) {
        throw CapExceeded("cap exceeded: more than " + std::to_string(limit) + " consistent subsets in " +
                          a.signature());
      }
      out.push_back(current);
      extend_consistent(a, current, i + 1, out, limit);
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<TokenSet> consistent_subsets(const Lis& a, const Caps& caps) {
  std::vector<TokenSet> out;
  if (!a.con(std::span<const Token>{})) return out;
  out.push_back({});
  TokenSet current;
  extend_consistent(a, current, 0, out, caps.subset_limit());
  std::sort(out.begin(), out.end(), [](const TokenSet& x, const TokenSet& y) { return compare_sets(x, y) < 0; });
  return out;
}

std::vector<std::pair<Token, Token>> entailment_pairs(const Lis& a, const Caps& caps) {
  require_pairs(a.size(), a.size(), caps, "entailment_pairs");
  std::vector<std::pair<Token, Token>> out;
  for (Token x : a.web()) {
    for (Token y : a.web()) {
      if (a.entails(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

TokenSet entailment_image(const Lis& a, std::span<const Token> tokens) {
  TokenSet out;
  for (Token y : a.web()) {
    if (std::any_of(tokens.begin(), tokens.end(), [&](Token x) { return a.entails(x, y); })) out.push_back(y);
  }
  return out;
}

TokenSet principal_closure(const Lis& a, Token t) { return entailment_image(a, std::span<const Token>(&t, 1)); }

}  // namespace infl
