#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infl/token.hpp"

namespace infl {

/// Enumeration limits. Every exhaustive operation checks these and throws
/// CapExceeded instead of truncating.
struct Caps {
  /// Subset-exhaustive operations enumerate at most 2^subset_web subsets.
  std::size_t subset_web = 16;
  /// Pairwise operations visit at most pairwise_web^2 token pairs.
  std::size_t pairwise_web = 64;
  /// Hom-set enumeration considers relations with at most this many candidate pairs.
  std::size_t homset_pairs = 16;

  std::size_t subset_limit() const { return std::size_t{1} << subset_web; }
  std::size_t pair_limit() const { return pairwise_web * pairwise_web; }
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Token or generator outside the web it was supposed to belong to.
class OutsideWeb : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Morphisms whose endpoints do not line up.
class ObjectMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_pairs(std::size_t left, std::size_t right, const Caps& caps, const char* what);

/// Explicit data a system was built from; kept for reporting and for the
/// web-scope check of hand-written (unclosed) systems.
struct LisTables {
  std::vector<TokenSet> con_family;
  std::vector<std::pair<Token, Token>> entails_pairs;
};

/// A linear information system: a finite web, a consistency predicate on
/// finite token-sets and an entailment predicate on tokens.
///
/// Lis is an immutable handle; copies share state. Consistency and
/// entailment are decision procedures rather than enumerated tables, so
/// constructed systems (`!A`, `A -o B`) stay cheap until something
/// enumerates them. Both predicates answer false for tokens outside the web.
class Lis {
 public:
  using ConFn = std::function<bool(std::span<const Token>)>;
  using EntailsFn = std::function<bool(Token, Token)>;

  /// The empty system (web ∅, Con = {∅}).
  Lis();
  Lis(std::vector<Token> web, ConFn con, EntailsFn entails, std::string signature,
      std::optional<LisTables> tables = std::nullopt);

  const std::vector<Token>& web() const noexcept;
  std::size_t size() const noexcept { return web().size(); }
  bool contains(Token t) const;
  std::optional<std::uint32_t> index_of(Token t) const;
  std::uint32_t index_or_throw(Token t) const;

  bool con(std::span<const Token> tokens) const;
  bool con(std::initializer_list<Token> tokens) const { return con(std::span<const Token>(tokens.begin(), tokens.size())); }
  bool entails(Token from, Token to) const;

  /// Structural description; equal signatures with equal webs denote the same system.
  const std::string& signature() const noexcept;
  const LisTables* tables() const noexcept;

  bool same_handle(const Lis& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

enum class Axiom { IS1, IS2, IS3, Singleton, EmptySet, WebScope, AR1, AR2 };

std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Axiom a) const;
  std::size_t count(Axiom a) const;
};

/// Bit-mask encoded closure tables for systems with at most 64 tokens.
using Mask = std::uint64_t;

struct EntailmentTable {
  std::vector<Token> web;
  std::vector<Mask> up;  ///< up[i] bit j set iff web[i] ⊢ web[j]

  bool entails(std::size_t i, std::size_t j) const { return (up[i] >> j) & 1u; }
  Mask image(Mask a) const;
};

struct ConsistencyTable {
  std::vector<Token> web;
  /// Con is exactly the family of subsets of some maximal mask.
  std::vector<Mask> maximal;

  bool con(Mask a) const;
};

/// Reflexive-transitive closure of the given pairs.
EntailmentTable close_entailment(const std::vector<Token>& web,
                                 const std::vector<std::pair<Token, Token>>& pairs);

/// Least family containing ∅, all singletons and the generators that is
/// closed under IS1 for the given entailment.
ConsistencyTable close_consistency(const std::vector<Token>& web, const std::vector<TokenSet>& generators,
                                   const EntailmentTable& entails);

/// Builds a valid system from generators; both relations are closed.
Lis make_lis(std::string name, std::vector<Token> web, const std::vector<TokenSet>& con_generators,
             const std::vector<std::pair<Token, Token>>& entails_pairs);

/// Builds a system exactly as given, with no closure; may violate the axioms.
Lis raw_lis(std::string name, std::vector<Token> web, std::vector<TokenSet> con_family,
            std::vector<std::pair<Token, Token>> entails_pairs);

/// The Rel-style system: every finite subset consistent, entailment is equality.
Lis discrete(const std::vector<std::string>& names);

ValidationReport validate_lis(const Lis& a, const Caps& caps = {});
bool in_inflfull(const Lis& a, const Caps& caps = {});
/// Witness of a failure of full consistency, if any.
std::optional<TokenSet> inflfull_witness(const Lis& a, const Caps& caps = {});
bool lis_equal(const Lis& a, const Lis& b, const Caps& caps = {});

/// Cheap identity test used by composition: shared handle, or equal webs with
/// equal signatures, falling back to lis_equal.
bool same_object(const Lis& a, const Lis& b, const Caps& caps = {});

/// Every subset of the web (requires |web| <= caps.subset_web), in mask order.
std::vector<TokenSet> all_subsets(const Lis& a, const Caps& caps = {});

/// Consistent subsets of a valid system, found by depth-first extension
/// (Con is subset-closed). Throws CapExceeded beyond caps.subset_limit() sets.
std::vector<TokenSet> consistent_subsets(const Lis& a, const Caps& caps = {});

/// All pairs α ⊢ β, in canonical order (pairwise cap).
std::vector<std::pair<Token, Token>> entailment_pairs(const Lis& a, const Caps& caps = {});

/// {β : ∃α ∈ a. α ⊢ β}
TokenSet entailment_image(const Lis& a, std::span<const Token> tokens);

/// Least point containing t: {t' : t ⊢ t'}.
TokenSet principal_closure(const Lis& a, Token t);

}  // namespace infl
