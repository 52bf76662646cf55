#pragma once

#include <functional>
#include <span>
#include <string>

#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl {

/// Morphism {(x, y) ∈ source × target : pred(x, y)} (pairwise cap).
LinRel rel_from_predicate(const Lis& source, const Lis& target, const std::function<bool(Token, Token)>& pred,
                          const Caps& caps = {});

// Units. ⊥ and 1 coincide; ⊤ is also the additive zero.
Lis one_obj();
Lis bottom_obj();
Lis top_obj();

// Additives. Webs are the tagged union: L for the first summand, R for the second.
Lis with_obj(const Lis& a1, const Lis& a2);
Lis plus_obj(const Lis& a1, const Lis& a2);

/// π_i : A1 & A2 → A_i, i ∈ {1, 2}.
LinRel proj(int i, const Lis& a1, const Lis& a2, const Caps& caps = {});
/// ι_i : A_i → A1 ⊕ A2.
LinRel inj(int i, const Lis& a1, const Lis& a2, const Caps& caps = {});
/// ⟨r, s⟩ : C → A1 & A2 for r : C → A1, s : C → A2.
LinRel pair(const LinRel& r, const LinRel& s, const Caps& caps = {});
/// [r, s] : A1 ⊕ A2 → C for r : A1 → C, s : A2 → C.
LinRel copair(const LinRel& r, const LinRel& s, const Caps& caps = {});
/// r & s : A & B → A' & B' (tag-wise action on morphisms).
LinRel with_mor(const LinRel& r, const LinRel& s);

// Multiplicatives. ⅋ coincides with ⊗ and has no separate constructor.
Lis tensor_obj(const Lis& a, const Lis& b);
LinRel tensor_mor(const LinRel& r, const LinRel& s);

/// A ⊗ (B ⊗ C) → (A ⊗ B) ⊗ C
LinRel assoc_tensor(const Lis& a, const Lis& b, const Lis& c, const Caps& caps = {});
/// A ⊗ B → B ⊗ A
LinRel sym_tensor(const Lis& a, const Lis& b, const Caps& caps = {});
/// A ⊗ 1 → A
LinRel runit_tensor(const Lis& a, const Caps& caps = {});
/// 1 ⊗ A → A
LinRel lunit_tensor(const Lis& a, const Caps& caps = {});
/// A & (B & C) → (A & B) & C
LinRel assoc_with(const Lis& a, const Lis& b, const Lis& c, const Caps& caps = {});
/// A & B → B & A
LinRel sym_with(const Lis& a, const Lis& b, const Caps& caps = {});
/// A & ⊤ → A
LinRel runit_with(const Lis& a, const Caps& caps = {});
/// ⊤ & A → A
LinRel lunit_with(const Lis& a, const Caps& caps = {});

// Inverses of the structural isomorphisms, each given by the reversed formula.
LinRel assoc_tensor_inv(const Lis& a, const Lis& b, const Lis& c, const Caps& caps = {});
LinRel runit_tensor_inv(const Lis& a, const Caps& caps = {});
LinRel lunit_tensor_inv(const Lis& a, const Caps& caps = {});
LinRel assoc_with_inv(const Lis& a, const Lis& b, const Lis& c, const Caps& caps = {});
LinRel runit_with_inv(const Lis& a, const Caps& caps = {});
LinRel lunit_with_inv(const Lis& a, const Caps& caps = {});

enum class StructuralKind { AssocT, SymT, RunitT, LunitT, AssocW, SymW, RunitW, LunitW };

/// Dispatches on kind; `components` holds 3, 2 or 1 systems as the kind requires.
LinRel structural_iso(StructuralKind kind, std::span<const Lis> components, const Caps& caps = {});

// Linear implication.
Lis lollipop_obj(const Lis& a, const Lis& b);
/// cur(r) : C → (A -o B) for r : A ⊗ C → B.
LinRel cur(const LinRel& r, const Lis& a, const Lis& c, const Caps& caps = {});
/// Inverse of cur: s : C → (A -o B) gives A ⊗ C → B.
LinRel uncur(const LinRel& s, const Lis& a, const Lis& b, const Caps& caps = {});
/// ev : A ⊗ (A -o B) → B
LinRel ev(const Lis& a, const Lis& b, const Caps& caps = {});

/// A -o ⊥
Lis dual_obj(const Lis& a);
/// ∂_A : A → (A -o ⊥) -o ⊥
LinRel delta(const Lis& a, const Caps& caps = {});

}  // namespace infl
