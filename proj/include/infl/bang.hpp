#pragma once

#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl {

/// !A: web Con_A (as finite-set tokens, ∅ included); a family is consistent
/// iff its union is; a ⊢ b iff every token of b is entailed by one of a.
Lis bang_obj(const Lis& a, const Caps& caps = {});

/// !R = {(a, b) : ∀β ∈ b ∃α ∈ a. α R β}
LinRel bang_mor(const LinRel& r, const Caps& caps = {});

/// dig_A : !A → !!A, pairs (b, Y) with b ⊢ ∪Y.
LinRel dig(const Lis& a, const Caps& caps = {});
/// der_A : !A → A, pairs (b, β) with b ⊢ {β}.
LinRel der(const Lis& a, const Caps& caps = {});
/// codig_A : !!A → !A, pairs (X, a) with X ⊢ {a}.
LinRel codig(const Lis& a, const Caps& caps = {});
/// cod_A : A → !A, pairs (α, b) with {α} ⊢ b.
LinRel cod(const Lis& a, const Caps& caps = {});

enum class ExpKind { Dig, Der, Codig, Cod };
LinRel exp_structural(ExpKind kind, const Lis& a, const Caps& caps = {});

/// Seely iso m_{A,B} : !A ⊗ !B → !(A & B).
LinRel seely_m(const Lis& a, const Lis& b, const Caps& caps = {});
/// Inverse of m_{A,B}: pairs (c, (a, b)) with c ⊢ L a ∪ R b.
LinRel seely_m_inv(const Lis& a, const Lis& b, const Caps& caps = {});
/// n : 1 → !⊤, pairing * with the only token of !⊤ (the empty set).
LinRel seely_n();

/// Inverse of n.
LinRel seely_n_inv();

/// Co-Kleisli composite dig_A ; !r ; s of r : !A → B and s : !B → C.
LinRel cokleisli_compose(const Lis& a, const LinRel& r, const LinRel& s, const Caps& caps = {});
/// der_A, the co-Kleisli identity.
LinRel cokleisli_id(const Lis& a, const Caps& caps = {});

/// The token-set a finite-set token denotes.
TokenSet set_of(Token finset);

}  // namespace infl
