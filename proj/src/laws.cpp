#include "infl/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "infl/bang.hpp"
#include "infl/constructions.hpp"
#include "infl/fixtures.hpp"

namespace infl {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// std::mt19937_64 is fully specified, and reducing with % (rather than a
// distribution) keeps draws identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix(seed)) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  bool chance(unsigned num, unsigned den) { return eng_() % den < num; }

 private:
  std::mt19937_64 eng_;
};

std::string pair_string(const LinRel& r, IndexPair p) {
  return "(" + to_string(r.source().web()[p.first]) + "," + to_string(r.target().web()[p.second]) + ")";
}

}  // namespace

DiagramResult check_diagram(const Diagram& d, const Caps& caps) {
  if (d.left.empty() || d.right.empty()) throw std::invalid_argument(d.name + ": empty path");
  const LinRel l = compose_path(d.left, caps);
  const LinRel r = compose_path(d.right, caps);
  if (!same_object(l.source(), r.source(), caps) || !same_object(l.target(), r.target(), caps)) {
    throw ObjectMismatch(d.name + ": paths have different endpoints");
  }
  DiagramResult out;
  auto lp = l.index_pairs();
  auto rp = r.index_pairs();
  // Both sides are canonically sorted; the first point of disagreement is
  // the witness.
  auto [li, ri] = std::mismatch(lp.begin(), lp.end(), rp.begin(), rp.end());
  if (li == lp.end() && ri == rp.end()) {
    out.commutes = true;
    return out;
  }
  // Indices of l and r refer to the same webs because the endpoints agree
  // and webs are canonically ordered.
  if (ri == rp.end() || (li != lp.end() && *li < *ri)) {
    out.witness = d.name + ": " + pair_string(l, *li) + " only in left path";
  } else {
    out.witness = d.name + ": " + pair_string(r, *ri) + " only in right path";
  }
  return out;
}

Lis gen_lis(std::uint64_t seed, std::size_t max_tokens) {
  if (max_tokens == 0) return top_obj();
  Rng rng(seed);
  const std::size_t n = rng.below(max_tokens + 1);
  if (n == 0) return top_obj();
  const std::size_t regime = rng.below(10);
  const bool full = regime < 3;
  const bool flat = regime >= 3 && regime < 6;

  std::vector<Token> web;
  for (std::size_t i = 0; i < n; ++i) web.push_back(Token::atom("t" + std::to_string(i)));
  std::vector<std::pair<Token, Token>> pairs;
  if (!flat) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && rng.chance(1, 4)) pairs.emplace_back(web[i], web[j]);
      }
    }
  }
  std::vector<TokenSet> gens;
  if (full) {
    gens.push_back(web);
  } else {
    const std::size_t k = rng.below(3);
    for (std::size_t g = 0; g < k; ++g) {
      TokenSet s;
      for (Token t : web) {
        if (rng.chance(1, 2)) s.push_back(t);
      }
      gens.push_back(std::move(s));
    }
  }
  std::ostringstream name;
  name << "g" << std::hex << (seed & 0xFFFFFFu);
  return make_lis(name.str(), std::move(web), gens, pairs);
}

Lis gen_discrete(std::uint64_t seed, std::size_t max_tokens) {
  Rng rng(seed);
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(max_tokens, 1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
  return discrete(names);
}

LinRel gen_rel(std::uint64_t seed, const Lis& a, const Lis& b, const Caps& caps) {
  Rng rng(seed);
  if (a.size() == 0 || b.size() == 0) return LinRel(a, b, {});
  constexpr std::size_t kAttempts = 6;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t budget = kAttempts - 1 - attempt;
    const std::size_t m = rng.below(budget + 1);
    std::vector<std::pair<Token, Token>> seeds;
    for (std::size_t k = 0; k < m; ++k) {
      seeds.emplace_back(a.web()[rng.below(a.size())], b.web()[rng.below(b.size())]);
    }
    LinRel r = ar2_close(a, b, seeds, caps);
    if (validate_rel(r, caps).ok()) return r;
  }
  return LinRel(a, b, {});
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

bool LawSuiteReport::ok() const {
  return std::none_of(instances.begin(), instances.end(),
                      [](const LawInstance& i) { return i.verdict == Verdict::Fail; });
}

std::vector<LawSummary> LawSuiteReport::summary() const {
  std::vector<LawSummary> out;
  for (const auto& inst : instances) {
    auto it = std::find_if(out.begin(), out.end(), [&](const LawSummary& s) { return s.law == inst.law; });
    if (it == out.end()) {
      out.push_back({inst.law, 0, 0, 0, 0});
      it = out.end() - 1;
    }
    it->redraws += inst.redraws;
    switch (inst.verdict) {
      case Verdict::Pass: ++it->passed; break;
      case Verdict::Fail: ++it->failed; break;
      case Verdict::Skip: ++it->skipped; break;
    }
  }
  return out;
}

LinRel mutated_m(const Lis& a, const Lis& b, const Caps& caps) {
  const LinRel m = seely_m(a, b, caps);
  auto ps = m.index_pairs();
  std::vector<IndexPair> kept(ps.begin() + (ps.empty() ? 0 : 1), ps.end());
  return LinRel::from_indices(m.source(), m.target(), std::move(kept));
}

namespace {

struct Outcome {
  bool ok = true;
  std::string witness;
  std::string detail;
};

Outcome from_diagram(const DiagramResult& r, std::string detail) { return {r.commutes, r.witness, std::move(detail)}; }

Outcome expect(bool ok, std::string witness, std::string detail) {
  return {ok, ok ? std::string() : std::move(witness), std::move(detail)};
}

/// Everything a law body needs: a fresh stream of sub-seeds and the params.
struct Ctx {
  Rng rng;
  const SuiteParams& p;

  Lis lis() { return gen_lis(rng.next(), p.max_tokens); }
  LinRel rel(const Lis& a, const Lis& b) { return gen_rel(rng.next(), a, b, p.caps); }
  const Caps& caps() const { return p.caps; }
};

using Body = std::function<Outcome(Ctx&)>;

struct LawSpec {
  std::string_view name;
  std::string_view statement;
  Body body;
  /// Fixture-based laws run once regardless of the sample count.
  bool once = false;
};

struct SuiteSpec {
  std::string_view name;
  std::vector<LawSpec> laws;
};

std::string sig(const Lis& a) { return a.signature(); }
std::string sigs(std::initializer_list<Lis> xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += " ";
    out += sig(x);
  }
  return out;
}

Diagram diagram(std::string_view name, std::vector<LinRel> left, std::vector<LinRel> right) {
  return Diagram{std::string(name), std::move(left), std::move(right)};
}

/// An iso law holds when m is linear approximable and inv is its two-sided inverse.
bool iso_holds(const LinRel& m, const LinRel& inv, const Caps& caps) {
  return validate_rel(m, caps).ok() && is_inverse_pair(m, inv, caps);
}

Outcome diagram_law(std::string_view name, std::vector<LinRel> left, std::vector<LinRel> right, const Caps& caps,
                    std::string detail) {
  return from_diagram(check_diagram(diagram(name, std::move(left), std::move(right)), caps), std::move(detail));
}

Outcome equal_law(std::string_view name, const LinRel& l, const LinRel& r, const Caps& caps, std::string detail) {
  return diagram_law(name, {l}, {r}, caps, std::move(detail));
}

std::vector<LawSpec> category_laws() {
  return {
      {"left unit", "id_A ; R = R",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         return diagram_law("left unit", {identity(a, c.caps()), r}, {r}, c.caps(), sigs({a, b}));
       }},
      {"right unit", "R ; id_B = R",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         return diagram_law("right unit", {r, identity(b, c.caps())}, {r}, c.caps(), sigs({a, b}));
       }},
      {"associativity", "(R ; S) ; T = R ; (S ; T)",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis(), d = c.lis();
         LinRel r = c.rel(a, b), s = c.rel(b, cc), t = c.rel(cc, d);
         return diagram_law("associativity", {compose(r, s, c.caps()), t}, {r, compose(s, t, c.caps())}, c.caps(),
                            sigs({a, b, cc, d}));
       }},
      {"composite is linear approximable", "R ; S satisfies AR1 and AR2",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis();
         LinRel rs = compose(c.rel(a, b), c.rel(b, cc), c.caps());
         auto rep = validate_rel(rs, c.caps());
         return expect(rep.ok(), rep.ok() ? "" : to_string(rep.violations[0].axiom) + " " + rep.violations[0].witness,
                       sigs({a, b, cc}));
       }},
  };
}

std::vector<LawSpec> cartesian_laws() {
  return {
      {"pairing then first projection", "<R, S> ; pi_1 = R",
       [](Ctx& c) {
         Lis x = c.lis(), a1 = c.lis(), a2 = c.lis();
         LinRel r = c.rel(x, a1), s = c.rel(x, a2);
         return diagram_law("pairing then first projection", {pair(r, s, c.caps()), proj(1, a1, a2, c.caps())}, {r},
                            c.caps(), sigs({x, a1, a2}));
       }},
      {"pairing then second projection", "<R, S> ; pi_2 = S",
       [](Ctx& c) {
         Lis x = c.lis(), a1 = c.lis(), a2 = c.lis();
         LinRel r = c.rel(x, a1), s = c.rel(x, a2);
         return diagram_law("pairing then second projection", {pair(r, s, c.caps()), proj(2, a1, a2, c.caps())}, {s},
                            c.caps(), sigs({x, a1, a2}));
       }},
      {"pairing is unique", "T ; pi_1 = R and T ; pi_2 = S force T = <R, S>",
       [](Ctx& c) {
         Lis x = c.lis(), a1 = c.lis(), a2 = c.lis();
         LinRel r = c.rel(x, a1), s = c.rel(x, a2);
         const LinRel p1 = proj(1, a1, a2, c.caps()), p2 = proj(2, a1, a2, c.caps());
         std::size_t hits = 0;
         bool is_pairing = true;
         for (const auto& t : enumerate_homset(x, with_obj(a1, a2), c.caps())) {
           if (compose(t, p1, c.caps()) == r && compose(t, p2, c.caps()) == s) {
             ++hits;
             is_pairing = is_pairing && t == pair(r, s, c.caps());
           }
         }
         return expect(hits == 1 && is_pairing, std::to_string(hits) + " mediating morphisms", sigs({x, a1, a2}));
       }},
      {"first injection then copairing", "iota_1 ; [R, S] = R",
       [](Ctx& c) {
         Lis a1 = c.lis(), a2 = c.lis(), x = c.lis();
         LinRel r = c.rel(a1, x), s = c.rel(a2, x);
         return diagram_law("first injection then copairing", {inj(1, a1, a2, c.caps()), copair(r, s, c.caps())}, {r},
                            c.caps(), sigs({a1, a2, x}));
       }},
      {"second injection then copairing", "iota_2 ; [R, S] = S",
       [](Ctx& c) {
         Lis a1 = c.lis(), a2 = c.lis(), x = c.lis();
         LinRel r = c.rel(a1, x), s = c.rel(a2, x);
         return diagram_law("second injection then copairing", {inj(2, a1, a2, c.caps()), copair(r, s, c.caps())},
                            {s}, c.caps(), sigs({a1, a2, x}));
       }},
      {"copairing is unique", "iota_1 ; T = R and iota_2 ; T = S force T = [R, S]",
       [](Ctx& c) {
         Lis a1 = c.lis(), a2 = c.lis(), x = c.lis();
         LinRel r = c.rel(a1, x), s = c.rel(a2, x);
         const LinRel i1 = inj(1, a1, a2, c.caps()), i2 = inj(2, a1, a2, c.caps());
         std::size_t hits = 0;
         bool is_copairing = true;
         for (const auto& t : enumerate_homset(plus_obj(a1, a2), x, c.caps())) {
           if (compose(i1, t, c.caps()) == r && compose(i2, t, c.caps()) == s) {
             ++hits;
             is_copairing = is_copairing && t == copair(r, s, c.caps());
           }
         }
         return expect(hits == 1 && is_copairing, std::to_string(hits) + " mediating morphisms", sigs({a1, a2, x}));
       }},
  };
}

std::vector<LawSpec> smc_laws() {
  return {
      {"pentagon", "(id (x) phi) ; phi ; (phi (x) id) = phi ; phi on A (x) (B (x) (C (x) D))",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis(), d = c.lis();
         const Caps& k = c.caps();
         return diagram_law("pentagon",
                            {assoc_tensor(a, b, tensor_obj(cc, d), k), assoc_tensor(tensor_obj(a, b), cc, d, k)},
                            {tensor_mor(identity(a, k), assoc_tensor(b, cc, d, k)),
                             assoc_tensor(a, tensor_obj(b, cc), d, k), tensor_mor(assoc_tensor(a, b, cc, k), identity(d, k))},
                            k, sigs({a, b, cc, d}));
       }},
      {"triangle", "phi_{A,1,B} ; (rho_A (x) id_B) = id_A (x) lambda_B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return diagram_law("triangle",
                            {assoc_tensor(a, one_obj(), b, k), tensor_mor(runit_tensor(a, k), identity(b, k))},
                            {tensor_mor(identity(a, k), lunit_tensor(b, k))}, k, sigs({a, b}));
       }},
      {"hexagon", "phi ; sigma ; phi = (id (x) sigma) ; phi ; (sigma (x) id) on A (x) (B (x) C)",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis();
         const Caps& k = c.caps();
         return diagram_law(
             "hexagon",
             {assoc_tensor(a, b, cc, k), sym_tensor(tensor_obj(a, b), cc, k), assoc_tensor(cc, a, b, k)},
             {tensor_mor(identity(a, k), sym_tensor(b, cc, k)), assoc_tensor(a, cc, b, k),
              tensor_mor(sym_tensor(a, cc, k), identity(b, k))},
             k, sigs({a, b, cc}));
       }},
      {"symmetry involution", "sigma_{A,B} ; sigma_{B,A} = id_{A (x) B}",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return diagram_law("symmetry involution", {sym_tensor(a, b, k), sym_tensor(b, a, k)},
                            {identity(tensor_obj(a, b), k)}, k, sigs({a, b}));
       }},
      {"associator natural", "(R (x) (S (x) T)) ; phi = phi ; ((R (x) S) (x) T)",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis(), b = c.lis(), b2 = c.lis(), cc = c.lis(), c2 = c.lis();
         LinRel r = c.rel(a, a2), s = c.rel(b, b2), t = c.rel(cc, c2);
         const Caps& k = c.caps();
         return diagram_law("associator natural", {tensor_mor(r, tensor_mor(s, t)), assoc_tensor(a2, b2, c2, k)},
                            {assoc_tensor(a, b, cc, k), tensor_mor(tensor_mor(r, s), t)}, k,
                            sigs({a, a2, b, b2, cc, c2}));
       }},
      {"symmetry natural", "(R (x) S) ; sigma = sigma ; (S (x) R)",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis(), b = c.lis(), b2 = c.lis();
         LinRel r = c.rel(a, a2), s = c.rel(b, b2);
         const Caps& k = c.caps();
         return diagram_law("symmetry natural", {tensor_mor(r, s), sym_tensor(a2, b2, k)},
                            {sym_tensor(a, b, k), tensor_mor(s, r)}, k, sigs({a, a2, b, b2}));
       }},
      {"right unitor natural", "(R (x) id_1) ; rho = rho ; R",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis();
         LinRel r = c.rel(a, a2);
         const Caps& k = c.caps();
         return diagram_law("right unitor natural", {tensor_mor(r, identity(one_obj(), k)), runit_tensor(a2, k)},
                            {runit_tensor(a, k), r}, k, sigs({a, a2}));
       }},
      {"left unitor natural", "(id_1 (x) R) ; lambda = lambda ; R",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis();
         LinRel r = c.rel(a, a2);
         const Caps& k = c.caps();
         return diagram_law("left unitor natural", {tensor_mor(identity(one_obj(), k), r), lunit_tensor(a2, k)},
                            {lunit_tensor(a, k), r}, k, sigs({a, a2}));
       }},
      {"tensor preserves identities", "id_A (x) id_B = id_{A (x) B}",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return equal_law("tensor preserves identities", tensor_mor(identity(a, k), identity(b, k)),
                          identity(tensor_obj(a, b), k), k, sigs({a, b}));
       }},
      {"tensor preserves composition", "(R ; R') (x) (S ; S') = (R (x) S) ; (R' (x) S')",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis(), a3 = c.lis(), b = c.lis(), b2 = c.lis(), b3 = c.lis();
         LinRel r = c.rel(a, a2), r2 = c.rel(a2, a3), s = c.rel(b, b2), s2 = c.rel(b2, b3);
         const Caps& k = c.caps();
         return diagram_law("tensor preserves composition", {tensor_mor(compose(r, r2, k), compose(s, s2, k))},
                            {tensor_mor(r, s), tensor_mor(r2, s2)}, k, sigs({a, a2, a3, b, b2, b3}));
       }},
      {"tensor isos invert", "phi, sigma, rho, lambda for (x) are valid and have two-sided inverses",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis();
         const Caps& k = c.caps();
         std::string bad;
         if (!iso_holds(assoc_tensor(a, b, cc, k), assoc_tensor_inv(a, b, cc, k), k)) bad += "phi ";
         if (!iso_holds(sym_tensor(a, b, k), sym_tensor(b, a, k), k)) bad += "sigma ";
         if (!iso_holds(runit_tensor(a, k), runit_tensor_inv(a, k), k)) bad += "rho ";
         if (!iso_holds(lunit_tensor(a, k), lunit_tensor_inv(a, k), k)) bad += "lambda ";
         return expect(bad.empty(), "no inverse: " + bad, sigs({a, b, cc}));
       }},
      {"with isos invert", "phi, sigma, rho, lambda for & are valid and have two-sided inverses",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis();
         const Caps& k = c.caps();
         std::string bad;
         if (!iso_holds(assoc_with(a, b, cc, k), assoc_with_inv(a, b, cc, k), k)) bad += "phi ";
         if (!iso_holds(sym_with(a, b, k), sym_with(b, a, k), k)) bad += "sigma ";
         if (!iso_holds(runit_with(a, k), runit_with_inv(a, k), k)) bad += "rho ";
         if (!iso_holds(lunit_with(a, k), lunit_with_inv(a, k), k)) bad += "lambda ";
         return expect(bad.empty(), "no inverse: " + bad, sigs({a, b, cc}));
       }},
      {"with pentagon", "pentagon for the & associator",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), cc = c.lis(), d = c.lis();
         const Caps& k = c.caps();
         return diagram_law("with pentagon",
                            {assoc_with(a, b, with_obj(cc, d), k), assoc_with(with_obj(a, b), cc, d, k)},
                            {with_mor(identity(a, k), assoc_with(b, cc, d, k)), assoc_with(a, with_obj(b, cc), d, k),
                             with_mor(assoc_with(a, b, cc, k), identity(d, k))},
                            k, sigs({a, b, cc, d}));
       }},
      {"with triangle", "phi_{A,T,B} ; (rho_A & id_B) = id_A & lambda_B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return diagram_law("with triangle", {assoc_with(a, top_obj(), b, k), with_mor(runit_with(a, k), identity(b, k))},
                            {with_mor(identity(a, k), lunit_with(b, k))}, k, sigs({a, b}));
       }},
      {"with symmetry involution", "sigma_{A,B} ; sigma_{B,A} = id_{A & B}",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return diagram_law("with symmetry involution", {sym_with(a, b, k), sym_with(b, a, k)},
                            {identity(with_obj(a, b), k)}, k, sigs({a, b}));
       }},
  };
}

std::string first_difference(const std::vector<LinRel>& xs, const std::vector<LinRel>& ys) {
  for (const auto& x : xs) {
    if (std::find(ys.begin(), ys.end(), x) == ys.end()) return to_string(x) + " has no partner";
  }
  return "sizes differ";
}

std::vector<LawSpec> closed_laws() {
  return {
      {"adjunction", "(id_A (x) cur(R)) ; ev = R for R : A (x) C -> B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         LinRel r = c.rel(tensor_obj(a, x), b);
         const Caps& k = c.caps();
         return diagram_law("adjunction", {tensor_mor(identity(a, k), cur(r, a, x, k)), ev(a, b, k)}, {r}, k,
                            sigs({a, b, x}));
       }},
      {"cur lands in the hom-set", "cur(R) satisfies AR1 and AR2",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         auto rep = validate_rel(cur(c.rel(tensor_obj(a, x), b), a, x, c.caps()), c.caps());
         return expect(rep.ok(), rep.ok() ? "" : to_string(rep.violations[0].axiom) + " " + rep.violations[0].witness,
                       sigs({a, b, x}));
       }},
      {"uncur after cur", "uncur(cur(R)) = R",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         LinRel r = c.rel(tensor_obj(a, x), b);
         return equal_law("uncur after cur", uncur(cur(r, a, x, c.caps()), a, b, c.caps()), r, c.caps(),
                          sigs({a, b, x}));
       }},
      {"cur after uncur", "cur(uncur(S)) = S",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         LinRel s = c.rel(x, lollipop_obj(a, b));
         return equal_law("cur after uncur", cur(uncur(s, a, b, c.caps()), a, x, c.caps()), s, c.caps(),
                          sigs({a, b, x}));
       }},
      {"cur is a bijection", "cur maps Infl(A (x) C, B) onto Infl(C, A -o B), checked by enumerating both",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         if (a.size() * b.size() * x.size() > 4) throw CapExceeded("cap exceeded: web product above 4");
         const Caps& k = c.caps();
         auto lhs = enumerate_homset(tensor_obj(a, x), b, k);
         auto rhs = enumerate_homset(x, lollipop_obj(a, b), k);
         std::vector<LinRel> image;
         for (const auto& r : lhs) image.push_back(cur(r, a, x, k));
         std::sort(image.begin(), image.end(), [](const LinRel& p, const LinRel& q) {
           return std::lexicographical_compare(p.index_pairs().begin(), p.index_pairs().end(), q.index_pairs().begin(),
                                               q.index_pairs().end());
         });
         const bool ok = image == rhs;
         return expect(ok, ok ? "" : first_difference(image, rhs), sigs({a, b, x}));
       }},
  };
}

std::vector<LawSpec> comonad_laws() {
  return {
      {"dig then der", "dig_A ; der_{!A} = id_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("dig then der", {dig(a, k), der(bang_obj(a, k), k)}, {identity(bang_obj(a, k), k)}, k,
                            sig(a));
       }},
      {"dig then bang der", "dig_A ; !der_A = id_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("dig then bang der", {dig(a, k), bang_mor(der(a, k), k)}, {identity(bang_obj(a, k), k)}, k,
                            sig(a));
       }},
      {"dig coassociative", "dig_A ; dig_{!A} = dig_A ; !dig_A",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("dig coassociative", {dig(a, k), dig(bang_obj(a, k), k)}, {dig(a, k), bang_mor(dig(a, k), k)},
                            k, sig(a));
       }},
      {"singleton entailment lifts", "a |-_!A b iff {a} |-_!!A {b}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Lis ba = bang_obj(a, c.caps());
         const Lis bba = bang_obj(ba, c.caps());
         for (Token x : ba.web()) {
           for (Token y : ba.web()) {
             if (ba.entails(x, y) != bba.entails(Token::finset({x}), Token::finset({y}))) {
               return expect(false, "a=" + to_string(x) + " b=" + to_string(y), sig(a));
             }
           }
         }
         return expect(true, "", sig(a));
       }},
      {"family entails a singleton", "X |-_!!A {b} iff some a in X has a |-_!A b",
       [](Ctx& c) {
         Lis a = c.lis();
         const Lis ba = bang_obj(a, c.caps());
         const Lis bba = bang_obj(ba, c.caps());
         for (Token x : bba.web()) {
           for (Token y : ba.web()) {
             auto xs = x.elems();
             const bool some = std::any_of(xs.begin(), xs.end(), [&](Token e) { return ba.entails(e, y); });
             if (bba.entails(x, Token::finset({y})) != some) {
               return expect(false, "X=" + to_string(x) + " b=" + to_string(y), sig(a));
             }
           }
         }
         return expect(true, "", sig(a));
       }},
      {"union does not lift", "on D2, the union of {{0},{1}} entails {0,1} in !A, yet {{0},{1}} does not entail {{0,1}} in !!A",
       [](Ctx& c) {
         const Lis d2 = fixtures::d2();
         const Lis ba = bang_obj(d2, c.caps());
         const Lis bba = bang_obj(ba, c.caps());
         const Token t0 = Token::finset({Token::atom("0")}), t1 = Token::finset({Token::atom("1")});
         const Token both = Token::finset({Token::atom("0"), Token::atom("1")});
         const bool union_entails = ba.entails(both, both);
         const bool lifted = bba.entails(Token::finset({t0, t1}), Token::finset({both}));
         return expect(union_entails && !lifted, "union entails: " + std::to_string(union_entails) +
                                                     ", family entails: " + std::to_string(lifted),
                       sig(d2));
       },
       true},
      {"exponential maps are linear approximable", "dig_A and der_A satisfy AR1 and AR2",
       [](Ctx& c) {
         Lis a = c.lis();
         auto r1 = validate_rel(dig(a, c.caps()), c.caps());
         auto r2 = validate_rel(der(a, c.caps()), c.caps());
         return expect(r1.ok() && r2.ok(), r1.ok() ? "der invalid" : "dig invalid", sig(a));
       }},
  };
}

std::vector<LawSpec> monad_laws() {
  return {
      {"cod then codig", "cod_{!A} ; codig_A = id_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("cod then codig", {cod(bang_obj(a, k), k), codig(a, k)}, {identity(bang_obj(a, k), k)}, k,
                            sig(a));
       }},
      {"bang cod then codig", "!cod_A ; codig_A = id_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("bang cod then codig", {bang_mor(cod(a, k), k), codig(a, k)},
                            {identity(bang_obj(a, k), k)}, k, sig(a));
       }},
      {"codig associative", "codig_{!A} ; codig_A = !codig_A ; codig_A",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return diagram_law("codig associative", {codig(bang_obj(a, k), k), codig(a, k)},
                            {bang_mor(codig(a, k), k), codig(a, k)}, k, sig(a));
       }},
      {"cod subsumes dig", "cod_{!A} = dig_A",
       [](Ctx& c) {
         Lis a = c.lis();
         return equal_law("cod subsumes dig", cod(bang_obj(a, c.caps()), c.caps()), dig(a, c.caps()), c.caps(), sig(a));
       }},
      {"der subsumes codig", "der_{!A} = codig_A",
       [](Ctx& c) {
         Lis a = c.lis();
         return equal_law("der subsumes codig", der(bang_obj(a, c.caps()), c.caps()), codig(a, c.caps()), c.caps(),
                          sig(a));
       }},
  };
}

LinRel m_for(const Ctx& c, const Lis& a, const Lis& b) {
  return c.p.mutate_m ? mutated_m(a, b, c.caps()) : seely_m(a, b, c.caps());
}

std::vector<LawSpec> strong_monoidal_laws() {
  return {
      {"associativity", "phi ; (m (x) id) ; m = (id (x) m) ; m ; !phi on !A (x) (!B (x) !C)",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         const Caps& k = c.caps();
         const Lis ba = bang_obj(a, k), bb = bang_obj(b, k), bc = bang_obj(x, k);
         return diagram_law("associativity",
                            {assoc_tensor(ba, bb, bc, k), tensor_mor(m_for(c, a, b), identity(bc, k)),
                             m_for(c, with_obj(a, b), x)},
                            {tensor_mor(identity(ba, k), m_for(c, b, x)), m_for(c, a, with_obj(b, x)),
                             bang_mor(assoc_with(a, b, x, k), k)},
                            k, sigs({a, b, x}));
       }},
      {"right unit", "(id (x) n) ; m_{A,T} ; !rho = rho_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         const Lis ba = bang_obj(a, k);
         return diagram_law("right unit",
                            {tensor_mor(identity(ba, k), seely_n()), m_for(c, a, top_obj()), bang_mor(runit_with(a, k), k)},
                            {runit_tensor(ba, k)}, k, sig(a));
       }},
      {"left unit", "(n (x) id) ; m_{T,A} ; !lambda = lambda_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         const Lis ba = bang_obj(a, k);
         return diagram_law("left unit",
                            {tensor_mor(seely_n(), identity(ba, k)), m_for(c, top_obj(), a), bang_mor(lunit_with(a, k), k)},
                            {lunit_tensor(ba, k)}, k, sig(a));
       }},
      {"symmetry", "sigma ; m_{B,A} = m_{A,B} ; !sigma",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         return diagram_law("symmetry", {sym_tensor(bang_obj(a, k), bang_obj(b, k), k), m_for(c, b, a)},
                            {m_for(c, a, b), bang_mor(sym_with(a, b, k), k)}, k, sigs({a, b}));
       }},
      {"m is an isomorphism", "m_{A,B} is valid, m ; m^-1 = id and m^-1 ; m = id",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         const LinRel m = m_for(c, a, b);
         const LinRel inv = seely_m_inv(a, b, k);
         const bool ok = iso_holds(m, inv, k);
         std::string witness;
         if (!ok) {
           auto fwd = check_diagram(diagram("m ; m^-1", {m, inv}, {identity(m.source(), k)}), k);
           auto bwd = check_diagram(diagram("m^-1 ; m", {inv, m}, {identity(m.target(), k)}), k);
           auto rep = validate_rel(m, k);
           witness = !fwd.commutes ? fwd.witness
                     : !bwd.commutes ? bwd.witness
                                     : "m " + to_string(rep.violations[0].axiom) + " " + rep.violations[0].witness;
         }
         return expect(ok, witness, sigs({a, b}));
       }},
      {"n is an isomorphism", "n has a two-sided inverse and is_iso finds it",
       [](Ctx& c) {
         const LinRel n = seely_n();
         const auto found = is_iso(n, c.caps());
         const bool ok = is_inverse_pair(n, seely_n_inv(), c.caps()) && found && *found == seely_n_inv();
         return expect(ok, "n is not invertible", "");
       },
       true},
  };
}

std::vector<LawSpec> seely_laws() {
  return {
      {"new-Seely coherence", "(dig_A (x) dig_B) ; m_{!A,!B} = m_{A,B} ; dig_{A&B} ; !<!pi_1, !pi_2>",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         const Caps& k = c.caps();
         const LinRel split = pair(bang_mor(proj(1, a, b, k), k), bang_mor(proj(2, a, b, k), k), k);
         return diagram_law("new-Seely coherence",
                            {tensor_mor(dig(a, k), dig(b, k)), seely_m(bang_obj(a, k), bang_obj(b, k), k)},
                            {seely_m(a, b, k), dig(with_obj(a, b), k), bang_mor(split, k)}, k, sigs({a, b}));
       }},
  };
}

std::vector<LawSpec> naturality_laws() {
  return {
      {"der natural", "der_A ; R = !R ; der_B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         const Caps& k = c.caps();
         return diagram_law("der natural", {der(a, k), r}, {bang_mor(r, k), der(b, k)}, k, sigs({a, b}));
       }},
      {"der natural on discrete systems", "der_A ; R = !R ; der_B with identity entailment on A and B",
       [](Ctx& c) {
         Lis a = gen_discrete(c.rng.next(), c.p.max_tokens), b = gen_discrete(c.rng.next(), c.p.max_tokens);
         LinRel r = c.rel(a, b);
         const Caps& k = c.caps();
         return diagram_law("der natural on discrete systems", {der(a, k), r}, {bang_mor(r, k), der(b, k)}, k,
                            sigs({a, b}));
       }},
      {"dig natural", "dig_A ; !!R = !R ; dig_B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         const Caps& k = c.caps();
         const LinRel br = bang_mor(r, k);
         return diagram_law("dig natural", {dig(a, k), bang_mor(br, k)}, {br, dig(b, k)}, k, sigs({a, b}));
       }},
      {"cod natural", "cod_A ; !R = R ; cod_B",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         const Caps& k = c.caps();
         return diagram_law("cod natural", {cod(a, k), bang_mor(r, k)}, {r, cod(b, k)}, k, sigs({a, b}));
       }},
      {"codig natural", "!!R ; codig_B = codig_A ; !R",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         LinRel r = c.rel(a, b);
         const Caps& k = c.caps();
         const LinRel br = bang_mor(r, k);
         return diagram_law("codig natural", {bang_mor(br, k), codig(b, k)}, {codig(a, k), br}, k, sigs({a, b}));
       }},
      {"m natural", "(!R (x) !S) ; m_{A',B'} = m_{A,B} ; !(R & S)",
       [](Ctx& c) {
         Lis a = c.lis(), a2 = c.lis(), b = c.lis(), b2 = c.lis();
         LinRel r = c.rel(a, a2), s = c.rel(b, b2);
         const Caps& k = c.caps();
         return diagram_law("m natural", {tensor_mor(bang_mor(r, k), bang_mor(s, k)), seely_m(a2, b2, k)},
                            {seely_m(a, b, k), bang_mor(with_mor(r, s), k)}, k, sigs({a, a2, b, b2}));
       }},
      {"bang preserves composition", "!(R ; S) = !R ; !S",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis(), x = c.lis();
         LinRel r = c.rel(a, b), s = c.rel(b, x);
         const Caps& k = c.caps();
         return diagram_law("bang preserves composition", {bang_mor(compose(r, s, k), k)},
                            {bang_mor(r, k), bang_mor(s, k)}, k, sigs({a, b, x}));
       }},
      {"bang preserves identities", "!id_A = id_{!A}",
       [](Ctx& c) {
         Lis a = c.lis();
         const Caps& k = c.caps();
         return equal_law("bang preserves identities", bang_mor(identity(a, k), k), identity(bang_obj(a, k), k), k,
                          sig(a));
       }},
  };
}

std::vector<LawSpec> degeneracy_laws() {
  return {
      {"with equals plus", "A & B and A (+) B are the same system",
       [](Ctx& c) {
         Lis a = c.lis(), b = c.lis();
         return expect(lis_equal(with_obj(a, b), plus_obj(a, b), c.caps()), "with and plus differ", sigs({a, b}));
       }},
      {"top is terminal", "Infl(A, T) has exactly the empty morphism",
       [](Ctx& c) {
         Lis a = c.lis();
         auto hs = enumerate_homset(a, top_obj(), c.caps());
         return expect(hs.size() == 1 && hs[0].empty(), std::to_string(hs.size()) + " morphisms", sig(a));
       }},
      {"top is initial", "Infl(T, A) has exactly the empty morphism",
       [](Ctx& c) {
         Lis a = c.lis();
         auto hs = enumerate_homset(top_obj(), a, c.caps());
         return expect(hs.size() == 1 && hs[0].empty(), std::to_string(hs.size()) + " morphisms", sig(a));
       }},
      {"one equals bottom", "the tensor unit and the par unit are the same system",
       [](Ctx& c) { return expect(lis_equal(one_obj(), bottom_obj(), c.caps()), "1 and bottom differ", ""); }, true},
  };
}

std::vector<LawSpec> duality_laws() {
  return {
      {"delta iso iff full", "delta_A is an isomorphism exactly when every finite subset of A is consistent",
       [](Ctx& c) {
         Lis a = c.lis();
         const bool full = in_inflfull(a, c.caps());
         const bool iso = is_iso(delta(a, c.caps()), c.caps()).has_value();
         return expect(full == iso, std::string(full ? "full" : "non-full") + " system with iso=" + (iso ? "yes" : "no"),
                       std::string(full ? "full " : "non-full ") + sig(a));
       }},
      {"V is a non-iso witness", "delta_V has no inverse; {p,q} is inconsistent in V",
       [](Ctx& c) {
         const Lis v = fixtures::v();
         const bool iso = is_iso(delta(v, c.caps()), c.caps()).has_value();
         auto w = inflfull_witness(v, c.caps());
         return expect(!iso && w.has_value(), "delta_V inverted", "V witness " + (w ? to_string(*w) : "none"));
       },
       true},
      {"dual reverses entailment", "A -o bottom is fully consistent and (a,*) |- (b,*) iff b |- a",
       [](Ctx& c) {
         Lis a = c.lis();
         const Lis d = dual_obj(a);
         if (!in_inflfull(d, c.caps())) return expect(false, "dual not fully consistent", sig(a));
         for (Token x : a.web()) {
           for (Token y : a.web()) {
             if (d.entails(Token::pair(x, Token::star()), Token::pair(y, Token::star())) != a.entails(y, x)) {
               return expect(false, "x=" + to_string(x) + " y=" + to_string(y), sig(a));
             }
           }
         }
         return expect(true, "", sig(a));
       }},
  };
}

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> all{
      {"category", category_laws()},     {"cartesian", cartesian_laws()},
      {"smc", smc_laws()},               {"closed", closed_laws()},
      {"comonad", comonad_laws()},       {"monad", monad_laws()},
      {"strong_monoidal", strong_monoidal_laws()}, {"seely", seely_laws()},
      {"naturality", naturality_laws()}, {"degeneracy", degeneracy_laws()},
      {"duality", duality_laws()},
  };
  return all;
}

}  // namespace

std::span<const std::string_view> suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::span<const CoverageEntry> coverage_manifest() {
  static const std::vector<CoverageEntry> entries = [] {
    std::vector<CoverageEntry> out;
    for (const auto& s : suites()) {
      for (const auto& l : s.laws) out.push_back({s.name, l.name, l.statement});
    }
    return out;
  }();
  return entries;
}

LawSuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const SuiteSpec& s) { return s.name == name; });
  if (it == all.end()) throw std::invalid_argument("unknown suite: " + std::string(name));

  LawSuiteReport report;
  report.suite = std::string(name);
  for (const auto& law : it->laws) {
    const std::uint64_t law_key = fnv1a(std::string(name) + "/" + std::string(law.name));
    const std::size_t samples = law.once ? 1 : params.samples;
    for (std::size_t i = 0; i < samples; ++i) {
      LawInstance inst{report.suite, std::string(law.name), 0, Verdict::Skip, {}, {}, 0};
      std::string notice;
      for (std::size_t attempt = 0; attempt < std::max<std::size_t>(params.attempts, 1); ++attempt) {
        const std::uint64_t s = splitmix(params.seed ^ splitmix(law_key + i * 0x10001ull + (attempt << 40)));
        inst.seed = s;
        Ctx ctx{Rng(s), params};
        try {
          Outcome o = law.body(ctx);
          inst.verdict = o.ok ? Verdict::Pass : Verdict::Fail;
          inst.witness = std::move(o.witness);
          inst.detail = std::move(o.detail);
          notice.clear();
          break;
        } catch (const CapExceeded& e) {
          notice = e.what();
          ++inst.redraws;
        }
      }
      if (!notice.empty()) {
        inst.witness = "skipped after " + std::to_string(params.attempts) + " draws: " + notice;
      }
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

}  // namespace infl
