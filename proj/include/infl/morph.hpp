#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "infl/lis.hpp"

namespace infl {

/// Position of a pair in source web × target web.
using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// A relation between the webs of two systems. Linear approximability
/// (AR1/AR2) is not enforced on construction; see validate_rel.
///
/// Pairs are stored as sorted web indices. Webs are canonically ordered, so
/// the stored order is the canonical order and equality is extensional.
class LinRel {
 public:
  LinRel(Lis source, Lis target, const std::vector<std::pair<Token, Token>>& pairs);
  /// `pairs` need not be sorted; duplicates are removed.
  static LinRel from_indices(Lis source, Lis target, std::vector<IndexPair> pairs);

  const Lis& source() const noexcept { return source_; }
  const Lis& target() const noexcept { return target_; }
  std::span<const IndexPair> index_pairs() const noexcept { return pairs_; }
  std::vector<std::pair<Token, Token>> pairs() const;
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(Token a, Token b) const;
  bool contains_index(std::uint32_t a, std::uint32_t b) const;

  /// Same endpoints (same_object) and the same pair-set.
  friend bool operator==(const LinRel& r, const LinRel& s);

 private:
  LinRel(Lis source, Lis target, std::vector<IndexPair> sorted, int);
  Lis source_;
  Lis target_;
  std::vector<IndexPair> pairs_;
};

std::string to_string(const LinRel& r);

ValidationReport validate_rel(const LinRel& r, const Caps& caps = {});

/// The entailment relation of `a` viewed as a morphism a → a.
LinRel identity(const Lis& a, const Caps& caps = {});

/// Diagrammatic composition r;s (first r, then s).
LinRel compose(const LinRel& r, const LinRel& s, const Caps& caps = {});

/// Composes a non-empty path left to right.
LinRel compose_path(std::span<const LinRel> path, const Caps& caps = {});

/// Relational converse (endpoints swapped); generally not linear approximable.
LinRel converse(const LinRel& r);

/// Least AR2-closed superset of the seeds. Acceptance is left to validate_rel.
LinRel ar2_close(const Lis& source, const Lis& target, const std::vector<std::pair<Token, Token>>& seeds,
                 const Caps& caps = {});

/// Every linear approximable relation a → b, canonically ordered
/// (by the sorted pair list).
std::vector<LinRel> enumerate_homset(const Lis& a, const Lis& b, const Caps& caps = {});

/// True iff r;s = id(source) and s;r = id(target).
bool is_inverse_pair(const LinRel& r, const LinRel& s, const Caps& caps = {});

/// The inverse of r, if r is an isomorphism. The converse is tried first,
/// then the hom-set target → source is searched exhaustively.
std::optional<LinRel> is_iso(const LinRel& r, const Caps& caps = {});

}  // namespace infl
