#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infl/domains.hpp"
#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl {

/// A classical information system with entailment in trace form: a ⊢ β for
/// a finite set a and a token β. Set-to-set entailment is read pointwise.
class IS {
 public:
  using ConFn = std::function<bool(std::span<const Token>)>;
  using TraceFn = std::function<bool(std::span<const Token>, Token)>;

  IS(std::vector<Token> web, ConFn con, TraceFn trace, std::string signature);

  const std::vector<Token>& web() const noexcept { return web_; }
  std::size_t size() const noexcept { return web_.size(); }
  bool contains(Token t) const { return std::binary_search(web_.begin(), web_.end(), t); }
  bool con(std::span<const Token> a) const { return con_(a); }
  bool entails(std::span<const Token> a, Token b) const { return trace_(a, b); }
  /// a ⊢ b pointwise.
  bool entails_all(std::span<const Token> a, std::span<const Token> b) const;
  /// {β ∈ web : a ⊢ β}
  TokenSet image(std::span<const Token> a) const;
  const std::string& signature() const noexcept { return signature_; }

 private:
  std::vector<Token> web_;
  ConFn con_;
  TraceFn trace_;
  std::string signature_;
};

/// Consistent sets of a valid IS by depth-first extension (Con is closed
/// under subsets). Throws CapExceeded beyond caps.subset_limit() sets.
std::vector<TokenSet> consistent_sets(const IS& a, const Caps& caps = {});

/// Checks the singleton and empty-set conditions and IS1–IS3 in trace form,
/// quantifying over every consistent a and every b with a ⊢ b.
ValidationReport validate_is(const IS& a, const Caps& caps = {});

/// An approximable relation stored as its trace {(a, β) : a R {β}}.
class TraceRel {
 public:
  using Pair = std::pair<TokenSet, Token>;

  TraceRel(IS source, IS target, std::vector<Pair> pairs);

  const IS& source() const noexcept { return source_; }
  const IS& target() const noexcept { return target_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  bool contains(const TokenSet& a, Token b) const;
  /// {β : (a, β) ∈ R}
  TokenSet image(const TokenSet& a) const;
  std::size_t size() const noexcept { return pairs_.size(); }

  friend bool operator==(const TraceRel& r, const TraceRel& s) {
    return r.source_.signature() == s.source_.signature() && r.target_.signature() == s.target_.signature() &&
           r.pairs_ == s.pairs_;
  }

 private:
  IS source_;
  IS target_;
  std::vector<Pair> pairs_;
};

std::string to_string(const TraceRel& r);

/// AR1/AR2 in trace form: sources consistent, images consistent, and
/// a' ⊢ a together with R(a) ⊢ β' forcing (a', β').
ValidationReport validate_trace(const TraceRel& r, const Caps& caps = {});

/// The trace of ⊢_A on consistent sets.
TraceRel identity_is(const IS& a, const Caps& caps = {});
/// (a, γ) iff some finite b has a R b and (b, γ) ∈ S.
TraceRel compose_is(const TraceRel& r, const TraceRel& s, const Caps& caps = {});

/// A ⇒ B. Tokens are pair(finset(a), β) for a ∈ Con_A and β ∈ B, the same
/// tokens as !A ⊸ B, so the bridge identification is the identity.
IS arrow_is(const IS& a, const IS& b, const Caps& caps = {});

/// Same web and Con, a ⊢ β iff some α ∈ a has α ⊢ β.
IS lis_to_is(const Lis& a);

/// φ(R) = {(a, β) : a ∈ Con_A, ∃α ∈ a. α R β}
TraceRel phi_embed(const LinRel& r, const Caps& caps = {});
/// (a, β) ∈ S iff some α ∈ a has ({α}, β) ∈ S.
bool is_linear_trace(const TraceRel& s, const Caps& caps = {});

/// Every approximable relation from a to b, by filtering all subsets of
/// Con_A × B (homset_pairs cap on the candidate count).
std::vector<TraceRel> enumerate_trace_homset(const IS& a, const IS& b, const Caps& caps = {});

/// Sets that are consistent and closed under ⊢. For a valid IS checking x ⊢ β
/// for x itself suffices, since trace entailment is monotone in the set.
Poset points_is(const IS& a, const Caps& caps = {});
/// R•(x) = {β : ∃a ⊆ x. (a, β) ∈ R}. Throws NotAPoint.
TokenSet apply_bullet(const TraceRel& r, const TokenSet& x, const Caps& caps = {});

/// A co-Kleisli morphism !A → B read as a trace from A to B.
TraceRel trace_of(const LinRel& r, const Lis& a, const Lis& b);
/// The points of A ⇒ B as traces.
TraceRel trace_from_tokens(const IS& a, const IS& b, const TokenSet& x);

struct BridgeReport {
  bool webs_equal = false;
  bool con_equal = false;
  bool entails_equal = false;
  bool homset_is_points = false;
  bool cokleisli_is_inf = false;
  std::string witness;
  bool ok() const { return webs_equal && con_equal && entails_equal && homset_is_points && cokleisli_is_inf; }
};

/// Compares A ⇒ B with !A ⊸ B token by token, Infl(!A, B) with (A ⇒ B)•,
/// and co-Kleisli composition with compose_is. The composition check pairs
/// every r : !A → B with the co-Kleisli identity and up to eight members of
/// Infl(!B, B).
BridgeReport bridge_check(const Lis& a, const Lis& b, const Caps& caps = {});

/// Witness of disagreement between cokleisli_compose(a, r, s) and the classical
/// composite of the traces; nullopt when they agree.
std::optional<std::string> cokleisli_vs_inf(const Lis& a, const LinRel& r, const LinRel& s, const Caps& caps = {});

}  // namespace infl
