#include "infl/morph.hpp"

#include <algorithm>
#include <deque>

namespace infl {

namespace {

void normalize(std::vector<IndexPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

/// Adjacency lists: for each source index, the sorted target indices.
std::vector<std::vector<std::uint32_t>> successors(const LinRel& r) {
  std::vector<std::vector<std::uint32_t>> out(r.source().size());
  for (auto [a, b] : r.index_pairs()) out[a].push_back(b);
  return out;
}

std::vector<std::vector<std::uint32_t>> entailment_lists(const Lis& a, bool forward) {
  std::vector<std::vector<std::uint32_t>> out(a.size());
  const auto& web = a.web();
  for (std::uint32_t i = 0; i < web.size(); ++i) {
    for (std::uint32_t j = 0; j < web.size(); ++j) {
      if (a.entails(web[i], web[j])) {
        if (forward) {
          out[i].push_back(j);
        } else {
          out[j].push_back(i);
        }
      }
    }
  }
  return out;
}

}  // namespace

LinRel::LinRel(Lis source, Lis target, std::vector<IndexPair> sorted, int)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(sorted)) {}

LinRel::LinRel(Lis source, Lis target, const std::vector<std::pair<Token, Token>>& pairs)
    : source_(std::move(source)), target_(std::move(target)) {
  pairs_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    pairs_.emplace_back(source_.index_or_throw(a), target_.index_or_throw(b));
  }
  normalize(pairs_);
}

LinRel LinRel::from_indices(Lis source, Lis target, std::vector<IndexPair> pairs) {
  for (auto [a, b] : pairs) {
    if (a >= source.size() || b >= target.size()) throw OutsideWeb("relation index outside web");
  }
  normalize(pairs);
  return LinRel(std::move(source), std::move(target), std::move(pairs), 0);
}

std::vector<std::pair<Token, Token>> LinRel::pairs() const {
  std::vector<std::pair<Token, Token>> out;
  out.reserve(pairs_.size());
  for (auto [a, b] : pairs_) out.emplace_back(source_.web()[a], target_.web()[b]);
  return out;
}

bool LinRel::contains_index(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), IndexPair{a, b});
}

bool LinRel::contains(Token a, Token b) const {
  auto ia = source_.index_of(a);
  auto ib = target_.index_of(b);
  return ia && ib && contains_index(*ia, *ib);
}

bool operator==(const LinRel& r, const LinRel& s) {
  return r.pairs_ == s.pairs_ && same_object(r.source_, s.source_) && same_object(r.target_, s.target_);
}

std::string to_string(const LinRel& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ",";
    out += "(" + to_string(a) + "," + to_string(b) + ")";
    first = false;
  }
  return out + "}";
}

ValidationReport validate_rel(const LinRel& r, const Caps& caps) {
  ValidationReport report;
  const Lis& src = r.source();
  const Lis& tgt = r.target();
  require_pairs(src.size(), tgt.size(), caps, "validate_rel");

  // AR2: α' ⊢ α R β ⊢ β' implies α' R β'.
  const auto below = entailment_lists(src, false);
  const auto above = entailment_lists(tgt, true);
  for (auto [a, b] : r.index_pairs()) {
    for (std::uint32_t a2 : below[a]) {
      for (std::uint32_t b2 : above[b]) {
        if (!r.contains_index(a2, b2)) {
          report.violations.push_back({Axiom::AR2, to_string(src.web()[a2]) + " |- " + to_string(src.web()[a]) +
                                                       " R " + to_string(tgt.web()[b]) + " |- " +
                                                       to_string(tgt.web()[b2])});
        }
      }
    }
  }

  // AR1: images of consistent sets are consistent. Images grow with the set
  // and Con is subset-closed, so checking the full image suffices.
  const auto succ = successors(r);
  for (const TokenSet& a : consistent_subsets(src, caps)) {
    std::vector<std::uint32_t> img;
    for (Token t : a) {
      const auto& s = succ[src.index_or_throw(t)];
      img.insert(img.end(), s.begin(), s.end());
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    TokenSet b;
    for (auto i : img) b.push_back(tgt.web()[i]);
    if (!tgt.con(b)) {
      report.violations.push_back({Axiom::AR1, "a=" + to_string(a) + " b=" + to_string(b)});
    }
  }
  return report;
}

LinRel identity(const Lis& a, const Caps& caps) {
  require_pairs(a.size(), a.size(), caps, "identity");
  std::vector<IndexPair> pairs;
  const auto& web = a.web();
  for (std::uint32_t i = 0; i < web.size(); ++i) {
    for (std::uint32_t j = 0; j < web.size(); ++j) {
      if (a.entails(web[i], web[j])) pairs.emplace_back(i, j);
    }
  }
  return LinRel::from_indices(a, a, std::move(pairs));
}

LinRel compose(const LinRel& r, const LinRel& s, const Caps& caps) {
  if (!same_object(r.target(), s.source(), caps)) {
    throw ObjectMismatch("compose: target " + r.target().signature() + " differs from source " +
                         s.source().signature());
  }
  const auto succ = successors(s);
  std::vector<IndexPair> out;
  std::vector<char> seen(s.target().size(), 0);
  std::vector<std::uint32_t> touched;
  auto pairs = r.index_pairs();
  for (std::size_t k = 0; k < pairs.size();) {
    const std::uint32_t a = pairs[k].first;
    for (; k < pairs.size() && pairs[k].first == a; ++k) {
      for (std::uint32_t c : succ[pairs[k].second]) {
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
      }
    }
    for (std::uint32_t c : touched) {
      out.emplace_back(a, c);
      seen[c] = 0;
    }
    touched.clear();
  }
  return LinRel::from_indices(r.source(), s.target(), std::move(out));
}

LinRel compose_path(std::span<const LinRel> path, const Caps& caps) {
  if (path.empty()) throw std::invalid_argument("compose_path: empty path");
  LinRel acc = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(acc, path[i], caps);
  return acc;
}

LinRel converse(const LinRel& r) {
  std::vector<IndexPair> out;
  out.reserve(r.size());
  for (auto [a, b] : r.index_pairs()) out.emplace_back(b, a);
  return LinRel::from_indices(r.target(), r.source(), std::move(out));
}

LinRel ar2_close(const Lis& source, const Lis& target, const std::vector<std::pair<Token, Token>>& seeds,
                 const Caps& caps) {
  require_pairs(source.size(), target.size(), caps, "ar2_close");
  const auto below = entailment_lists(source, false);
  const auto above = entailment_lists(target, true);
  // Entailment is transitive, so one step of saturation per seed suffices.
  std::vector<IndexPair> out;
  for (const auto& [a, b] : seeds) {
    const auto ia = source.index_or_throw(a);
    const auto ib = target.index_or_throw(b);
    for (auto a2 : below[ia]) {
      for (auto b2 : above[ib]) out.emplace_back(a2, b2);
    }
  }
  return LinRel::from_indices(source, target, std::move(out));
}

std::vector<LinRel> enumerate_homset(const Lis& a, const Lis& b, const Caps& caps) {
  const std::size_t n = a.size() * b.size();
  if (n > caps.homset_pairs) {
    throw CapExceeded("cap exceeded: hom-set enumeration over " + std::to_string(n) + " candidate pairs (limit " +
                      std::to_string(caps.homset_pairs) + ")");
  }
  std::vector<IndexPair> all;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j = 0; j < b.size(); ++j) all.emplace_back(i, j);
  }
  const auto below = entailment_lists(a, false);
  const auto above = entailment_lists(b, true);
  const auto cons = consistent_subsets(a, caps);
  std::vector<std::vector<std::uint32_t>> con_idx;
  for (const auto& s : cons) {
    std::vector<std::uint32_t> idx;
    for (Token t : s) idx.push_back(a.index_or_throw(t));
    con_idx.push_back(std::move(idx));
  }

  std::vector<LinRel> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> member(n);
  for (std::uint64_t m = 0; m < count; ++m) {
    for (std::size_t k = 0; k < n; ++k) member[k] = (m >> k) & 1u;
    auto has = [&](std::uint32_t i, std::uint32_t j) { return member[i * b.size() + j] != 0; };
    bool ok = true;
    for (std::size_t k = 0; ok && k < n; ++k) {
      if (!member[k]) continue;
      auto [i, j] = all[k];
      for (auto i2 : below[i]) {
        for (auto j2 : above[j]) {
          if (!has(i2, j2)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    for (std::size_t c = 0; ok && c < con_idx.size(); ++c) {
      TokenSet img;
      for (std::uint32_t j = 0; j < b.size(); ++j) {
        for (auto i : con_idx[c]) {
          if (has(i, j)) {
            img.push_back(b.web()[j]);
            break;
          }
        }
      }
      if (!b.con(img)) ok = false;
    }
    if (!ok) continue;
    std::vector<IndexPair> pairs;
    for (std::size_t k = 0; k < n; ++k) {
      if (member[k]) pairs.push_back(all[k]);
    }
    out.push_back(LinRel::from_indices(a, b, std::move(pairs)));
  }
  std::sort(out.begin(), out.end(), [](const LinRel& x, const LinRel& y) {
    auto px = x.index_pairs();
    auto py = y.index_pairs();
    return std::lexicographical_compare(px.begin(), px.end(), py.begin(), py.end());
  });
  return out;
}

bool is_inverse_pair(const LinRel& r, const LinRel& s, const Caps& caps) {
  if (!same_object(r.target(), s.source(), caps) || !same_object(s.target(), r.source(), caps)) return false;
  return compose(r, s, caps) == identity(r.source(), caps) && compose(s, r, caps) == identity(r.target(), caps);
}

std::optional<LinRel> is_iso(const LinRel& r, const Caps& caps) {
  LinRel conv = converse(r);
  if (is_inverse_pair(r, conv, caps) && validate_rel(conv, caps).ok()) return conv;
  for (const LinRel& s : enumerate_homset(r.target(), r.source(), caps)) {
    if (is_inverse_pair(r, s, caps)) return s;
  }
  return std::nullopt;
}

}  // namespace infl
