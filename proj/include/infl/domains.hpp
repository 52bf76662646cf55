#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl {

/// Input that is not a point of the system it was applied to.
class NotAPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A poset that is not bounded-complete and prime algebraic, or a map that is
/// not linear, where one was required.
class NotInPsd : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite family of token-sets ordered by inclusion. Elements are kept
/// sorted by (size, canonical set order).
class Poset {
 public:
  explicit Poset(std::vector<TokenSet> elements);

  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<TokenSet>& elements() const noexcept { return elems_; }
  const TokenSet& at(std::size_t i) const { return elems_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * elems_.size() + j] != 0; }
  std::optional<std::size_t> index_of(const TokenSet& x) const;
  std::optional<std::size_t> bottom() const;
  /// Pairs (i, j) with i < j and nothing strictly between, for Hasse diagrams.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<TokenSet> elems_;
  std::vector<char> leq_;
};

/// Is x a point of a: every finite subset consistent and closed under ⊢?
bool is_point(const Lis& a, const TokenSet& x);

/// All points of a, ordered by inclusion. ∅ is always a point.
Poset points(const Lis& a, const Caps& caps = {});

/// R⁺(x) = {β : ∃α ∈ x. (α, β) ∈ R}. Throws NotAPoint.
TokenSet apply_plus(const LinRel& r, const TokenSet& x);

/// Least upper bound of the given elements, if they have one.
std::optional<std::size_t> lub(const Poset& p, const std::vector<std::size_t>& s);

/// Witness of a failed Psd property; empty when the property holds.
struct PsdCheck {
  bool ok = true;
  std::string witness;
};

PsdCheck check_bounded_complete(const Poset& p);
bool is_bounded_complete(const Poset& p);

/// Elements p such that p ≤ ∨B implies p ≤ b for some b ∈ B, for every
/// upper-bounded finite B (∨∅ is the bottom, so the bottom is never prime).
std::vector<std::size_t> primes(const Poset& p, const Caps& caps = {});
/// Same, by testing every upper-bounded subset (cap on the element count).
std::vector<std::size_t> primes_exhaustive(const Poset& p, const Caps& caps = {});

PsdCheck check_prime_algebraic(const Poset& p, const Caps& caps = {});
bool is_prime_algebraic(const Poset& p, const Caps& caps = {});

/// A map between posets, as target indices of each source element.
using PosetMap = std::vector<std::size_t>;

/// The map x ↦ R⁺(x) from points(source) to points(target).
PosetMap plus_map(const LinRel& r, const Poset& from, const Poset& to);

/// Monotone and preserving every existing lub, the empty one included.
PsdCheck check_linear_map(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps = {});
bool is_linear_map(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps = {});

/// D⁻: tokens are the primes (as finite-set tokens), a set is consistent iff
/// it is upper bounded and p ⊢ p' iff p' ≤ p. Throws NotInPsd.
Lis minus_obj(const Poset& p, const Caps& caps = {});
/// f⁻ = {(p, p') : f(p) ≥ p'} between the primes. Throws NotInPsd.
LinRel minus_mor(const Poset& p, const Poset& q, const PosetMap& f, const Caps& caps = {});

/// A bijection preserving and reflecting the order, if one exists.
std::optional<PosetMap> find_order_iso(const Poset& p, const Poset& q);

struct RoundTrip {
  /// η_A = {(α, p) : p ⊆ cl(α)} from A to (A⁺)⁻.
  LinRel eta;
  /// Certified inverse of eta, if it is an isomorphism.
  std::optional<LinRel> inverse;
};

RoundTrip roundtrip_object(const Lis& a, const Caps& caps = {});

/// Order-isomorphism between P and (P⁻)⁺, if any.
std::optional<PosetMap> roundtrip_domain(const Poset& p, const Caps& caps = {});

/// P × Q realised as the inclusion poset of the sets L x ∪ R y.
Poset product_poset(const Poset& p, const Poset& q);

struct PreservationReport {
  bool product_iso = false;
  bool homset_is_points = false;
  std::string witness;
  bool ok() const { return product_iso && homset_is_points; }
};

/// (A & B)⁺ ≅ A⁺ × B⁺ by order-iso search, and Infl(A, B) = (A ⊸ B)⁺ as
/// families of token-sets.
PreservationReport preservation_checks(const Lis& a, const Lis& b, const Caps& caps = {});

/// The pair-set of r as tokens of A ⊸ B.
TokenSet as_lollipop_tokens(const LinRel& r);

}  // namespace infl
