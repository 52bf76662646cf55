// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "infl/bang.hpp"
#include "infl/classical.hpp"
#include "infl/cli.hpp"
#include "infl/constructions.hpp"
#include "infl/domains.hpp"
#include "infl/fixtures.hpp"
#include "infl/laws.hpp"

using namespace infl;

namespace {

Token tk(const char* s) { return Token::atom(s); }

/// Collects failures of one criterion; the first few are printed.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Criterion = std::function<void(Outcome&)>;

bool run(int number, const char* title, double limit_s, const Criterion& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) o.failures.push_back("took longer than the limit");
  const bool ok = o.failures.empty();
  std::printf("%s %2d %-52s %7.2f s (limit %g s)\n", ok ? "PASS" : "FAIL", number, title, secs, limit_s);
  for (const auto& n : o.notes) std::printf("        note: %s\n", n.c_str());
  for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::printf("        %s\n", o.failures[i].c_str());
  if (o.failures.size() > 5) std::printf("        ... %zu failures in total\n", o.failures.size());
  std::fflush(stdout);
  return ok;
}

// Runs the named suites and reports every failing or skipped law instance.
void suites(Outcome& o, std::initializer_list<const char*> names, std::size_t samples, std::size_t max_tokens) {
  SuiteParams p;
  p.samples = samples;
  p.max_tokens = max_tokens;
  for (const char* name : names) {
    const auto rep = run_suite(name, p);
    for (const auto& s : rep.summary()) {
      if (s.redraws) {
        o.notes.push_back(std::string(name) + " / " + s.law + ": " + std::to_string(s.redraws) + " redraws");
      }
      if (s.failed || s.skipped) {
        std::string first;
        for (const auto& i : rep.instances) {
          if (i.law == s.law && i.verdict != Verdict::Pass) {
            first = i.witness + " [" + i.detail + "]";
            break;
          }
        }
        o.failures.push_back(std::string(name) + " / " + s.law + ": " + std::to_string(s.failed) + " failed, " +
                             std::to_string(s.skipped) + " skipped of " +
                             std::to_string(s.passed + s.failed + s.skipped) + "; first: " + first);
      }
    }
  }
}

void axiom_validation(Outcome& o) {
  for (const auto& [name, a] : fixtures::catalog()) o.expect(validate_lis(a).ok(), name + " does not validate");

  const std::vector<Token> abc{tk("a"), tk("b"), tk("c")};
  std::vector<TokenSet> all_abc;
  for (unsigned m = 0; m < 8; ++m) {
    TokenSet s;
    for (unsigned i = 0; i < 3; ++i) {
      if ((m >> i) & 1u) s.push_back(abc[i]);
    }
    all_abc.push_back(s);
  }
  struct Broken {
    Lis lis;
    Axiom axiom;
    std::string witness;
  };
  const std::vector<Broken> broken{
      {raw_lis("is1", {tk("a"), tk("b")}, {{}, {tk("a")}, {tk("b")}},
               {{tk("a"), tk("a")}, {tk("b"), tk("b")}, {tk("a"), tk("b")}}),
       Axiom::IS1, "a={a} b={a,b}"},
      {raw_lis("is2", {tk("x")}, {{}, {tk("x")}}, {}), Axiom::IS2, "x"},
      {raw_lis("is3", abc, all_abc,
               {{tk("a"), tk("a")}, {tk("b"), tk("b")}, {tk("c"), tk("c")}, {tk("a"), tk("b")}, {tk("b"), tk("c")}}),
       Axiom::IS3, "a -> b -> c"},
      {raw_lis("singleton", {tk("x"), tk("y")}, {{}, {tk("x")}}, {{tk("x"), tk("x")}, {tk("y"), tk("y")}}),
       Axiom::Singleton, "y"},
      {raw_lis("emptyset", {tk("x")}, {{tk("x")}}, {{tk("x"), tk("x")}}), Axiom::EmptySet, "{}"},
      {raw_lis("webscope", {tk("x")}, {{}, {tk("x")}, {tk("x"), tk("z")}}, {{tk("x"), tk("x")}}), Axiom::WebScope,
       "con set {x,z} mentions z"},
  };
  for (const auto& b : broken) {
    const auto rep = validate_lis(b.lis);
    const bool exact = rep.violations.size() == 1 && rep.violations[0].axiom == b.axiom &&
                       rep.violations[0].witness == b.witness;
    std::string got;
    for (const auto& v : rep.violations) got += " " + to_string(v.axiom) + "(" + v.witness + ")";
    o.expect(exact, b.lis.signature() + ": expected exactly " + to_string(b.axiom) + "(" + b.witness + "), got" + got);
  }
}

void category_laws(Outcome& o) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Lis a = gen_lis(4 * s, 4), b = gen_lis(4 * s + 1, 4), c = gen_lis(4 * s + 2, 4), d = gen_lis(4 * s + 3, 4);
    const LinRel r = gen_rel(s, a, b), t = gen_rel(s + 1, b, c), u = gen_rel(s + 2, c, d);
    const std::string at = " at seed " + std::to_string(s);
    o.expect(compose(identity(a), r) == r, "left unit" + at);
    o.expect(compose(r, identity(b)) == r, "right unit" + at);
    o.expect(compose(compose(r, t), u) == compose(r, compose(t, u)), "associativity" + at);
  }
}

void cartesian(Outcome& o) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Lis a = gen_lis(2 * s, 4), b = gen_lis(2 * s + 1, 4);
    o.expect(lis_equal(with_obj(a, b), plus_obj(a, b)), "with differs from plus at seed " + std::to_string(s));
  }
  const Caps caps{16, 64, 16};
  const auto cat = fixtures::catalog();
  std::size_t pairings = 0, copairings = 0, copair_failures = 0;
  for (const auto& [nc, c] : cat) {
    for (const auto& [na, a] : cat) {
      for (const auto& [nb, b] : cat) {
        const std::string where = "(" + nc + "; " + na + ", " + nb + ")";
        const Lis ab = with_obj(a, b);
        if (c.size() * ab.size() <= caps.homset_pairs) {
          const auto mediators = enumerate_homset(c, ab, caps);
          for (const auto& f : enumerate_homset(c, a, caps)) {
            for (const auto& g : enumerate_homset(c, b, caps)) {
              ++pairings;
              const LinRel h = pair(f, g);
              o.expect(compose(h, proj(1, a, b)) == f && compose(h, proj(2, a, b)) == g,
                       "pairing equation fails " + where);
              std::size_t n = 0;
              for (const auto& m : mediators) n += compose(m, proj(1, a, b)) == f && compose(m, proj(2, a, b)) == g;
              o.expect(n == 1, "pairing " + where + " has " + std::to_string(n) + " mediators");
            }
          }
        }
        const Lis sum = plus_obj(a, b);
        if (sum.size() * c.size() <= caps.homset_pairs) {
          const auto mediators = enumerate_homset(sum, c, caps);
          for (const auto& f : enumerate_homset(a, c, caps)) {
            for (const auto& g : enumerate_homset(b, c, caps)) {
              ++copairings;
              const LinRel h = copair(f, g);
              o.expect(compose(inj(1, a, b), h) == f && compose(inj(2, a, b), h) == g,
                       "copairing equation fails " + where);
              std::size_t n = 0;
              for (const auto& m : mediators) n += compose(inj(1, a, b), m) == f && compose(inj(2, a, b), m) == g;
              if (n != 1) {
                ++copair_failures;
                o.expect(false, "copairing [" + to_string(f) + ", " + to_string(g) + "] " + where + " has " +
                                    std::to_string(n) + " mediators");
              }
            }
          }
        }
      }
    }
  }
  o.notes.push_back(std::to_string(pairings) + " pairings and " + std::to_string(copairings) +
                    " copairings checked; " + std::to_string(copair_failures) + " copairings without a unique mediator");
}

void duality(Outcome& o) {
  std::size_t full = 0, partial = 0;
  for (std::uint64_t s = 0; full < 50 || partial < 50; ++s) {
    const Lis a = gen_lis(s, 3);
    if (a.size() == 0) continue;
    const bool is_full = in_inflfull(a);
    if ((is_full && full >= 50) || (!is_full && partial >= 50)) continue;
    ++(is_full ? full : partial);
    const LinRel d = delta(a);
    const auto inv = is_iso(d);
    const std::string at = " at seed " + std::to_string(s);
    if (is_full) {
      o.expect(inv && validate_rel(*inv).ok() && is_inverse_pair(d, *inv), "no inverse for a full system" + at);
    } else {
      o.expect(!inv, "inverse found for a non-full system" + at);
    }
    if (s > 100000) {
      o.expect(false, "generator did not produce enough systems of both kinds");
      break;
    }
  }
  o.notes.push_back(std::to_string(full) + " full and " + std::to_string(partial) + " non-full systems");
}

void comonad_monad(Outcome& o) {
  suites(o, {"comonad", "monad"}, 100, 4);
  const Lis d2 = fixtures::d2();
  const LinRel lhs = compose(bang_mor(cod(d2)), codig(d2));
  const LinRel id = identity(bang_obj(d2));
  o.expect(lhs == id, "on D2, !cod then codig is " + to_string(lhs) + ", identity is " + to_string(id));
}

void der_discrete(Outcome& o) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Lis a = gen_discrete(2 * s, 3), b = gen_discrete(2 * s + 1, 3);
    const LinRel r = gen_rel(s, a, b);
    o.expect(compose(der(a), r) == compose(bang_mor(r), der(b)), "der square fails at seed " + std::to_string(s));
  }
}

void theorem1(Outcome& o) {
  auto systems = fixtures::catalog();
  for (std::uint64_t s = 0; s < 50; ++s) systems.emplace_back("seed " + std::to_string(s), gen_lis(s + 900, 3));
  for (const auto& [name, a] : systems) {
    const auto rt = roundtrip_object(a);
    o.expect(rt.inverse && is_inverse_pair(rt.eta, *rt.inverse), name + ": eta is not an isomorphism");
    const Poset p = points(a);
    o.expect(is_bounded_complete(p), name + ": points not bounded-complete");
    o.expect(is_prime_algebraic(p), name + ": points not prime algebraic");
    o.expect(roundtrip_domain(p).has_value(), name + ": points do not survive the round trip");
  }
  std::vector<std::pair<std::string, Lis>> small = fixtures::catalog();
  for (std::uint64_t s = 0; s < 20; ++s) small.emplace_back("seed " + std::to_string(s), gen_lis(s + 4000, 3));
  std::size_t pairs = 0;
  for (const auto& [na, a] : small) {
    for (const auto& [nb, b] : small) {
      if (a.size() * b.size() > 9) continue;
      ++pairs;
      const auto rep = preservation_checks(a, b);
      o.expect(rep.ok(), na + ", " + nb + ": " + rep.witness);
    }
  }
  o.notes.push_back(std::to_string(pairs) + " pairs with at most 9 web-product tokens");
}

void bridge(Outcome& o) {
  for (const auto& [na, a] : fixtures::catalog()) {
    for (const auto& [nb, b] : fixtures::catalog()) {
      const auto rep = bridge_check(a, b);
      o.expect(rep.ok(), na + ", " + nb + ": " + rep.witness);
    }
  }
}

void phi(Outcome& o) {
  for (const auto& [na, a] : fixtures::catalog()) {
    for (const auto& [nb, b] : fixtures::catalog()) {
      const std::string where = na + ", " + nb;
      const auto lin = enumerate_homset(a, b);
      std::vector<TraceRel> images;
      for (const auto& r : lin) images.push_back(phi_embed(r));
      for (std::size_t i = 0; i < lin.size(); ++i) {
        for (std::size_t j = 0; j < lin.size(); ++j) {
          const auto pi = lin[i].pairs();
          const bool sub = std::all_of(pi.begin(), pi.end(), [&](const auto& p) { return lin[j].contains(p.first, p.second); });
          const auto& ip = images[i].pairs();
          const bool isub =
              std::all_of(ip.begin(), ip.end(), [&](const auto& p) { return images[j].contains(p.first, p.second); });
          o.expect(sub == isub, where + ": order not reflected");
          if (i != j) o.expect(!(images[i] == images[j]), where + ": phi is not injective");
        }
      }
      std::size_t linear = 0;
      for (const auto& s : enumerate_trace_homset(lis_to_is(a), lis_to_is(b))) {
        if (!is_linear_trace(s)) continue;
        ++linear;
        const bool hit = std::any_of(images.begin(), images.end(), [&](const TraceRel& t) { return t == s; });
        o.expect(hit, where + ": linear trace " + to_string(s) + " is not an image");
      }
      o.expect(linear == images.size(), where + ": image count differs from the linear traces");
    }
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

void cli_contract(Outcome& o) {
  const std::filesystem::path dir = INFL_GOLDEN_DIR;
  const std::string fx = (dir / "fixtures.infl").string();
  const std::filesystem::path dot_path = std::filesystem::temp_directory_path() / "infl_acceptance_dot.out";
  struct Golden {
    std::vector<std::string> args;
    const char* file;
  };
  const std::vector<Golden> goldens{
      {{"format", fx}, "format.out"},
      {{"eval", "V -o D2", "--in", fx}, "eval_web.out"},
      {{"eval", "V * C2", "--in", fx, "--print", "con"}, "eval_con.out"},
      {{"eval", "!C2", "--in", fx, "--print", "entails"}, "eval_entails.out"},
      {{"points", "V"}, "points_v.out"},
      {{"points", "!V", "--in", fx}, "points_bang_v.out"},
      {{"dot", "C2 & V", "--in", fx, "-o", dot_path.string()}, "dot.out"},
  };
  std::string out, err;
  for (const auto& g : goldens) {
    const std::string expected = slurp(dir / g.file);
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const int code = cli(g.args, out, err);
      if (g.args[0] == "dot") out = slurp(dot_path);
      o.expect(code == 0, std::string(g.file) + ": exit " + std::to_string(code) + " " + err);
      o.expect(out == expected, std::string(g.file) + ": output differs from the golden file");
      if (run == 0) first = out;
      else o.expect(out == first, std::string(g.file) + ": output differs between runs");
    }
  }
  std::filesystem::remove(dot_path);

  o.expect(cli({"check", fx}, out, err) == 0, "check on the fixture file should exit 0");
  o.expect(cli({"--strict", "check", (dir / "broken.infl").string()}, out, err) == 1, "invalid system should exit 1");
  o.expect(cli({"check", (dir / "syntax_error.infl").string()}, out, err) == 2, "syntax error should exit 2");
  o.expect(err.find("line 3, col 1") != std::string::npos, "syntax error should carry its location");
  o.expect(cli({"points"}, out, err) == 2, "missing argument should exit 2");
  o.expect(cli({"points", "!!!D2"}, out, err) == 1 && err.find("cap exceeded") != std::string::npos,
           "cap violation should exit 1 with a cap message");
  o.expect(cli({"laws", "--suite", "strong_monoidal", "--samples", "5"}, out, err) == 0,
           "unmutated strong_monoidal suite should exit 0");
  const int mutated = cli({"laws", "--suite", "strong_monoidal", "--samples", "5", "--mutate-m"}, out, err);
  o.expect(mutated == 1, "mutated m should make the suite exit 1");
  o.expect(out.find("FAIL") != std::string::npos && out.find("only in") != std::string::npos,
           "mutated m should be reported with a witness");
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    double limit;
    Criterion body;
  };
  const std::vector<Entry> criteria{
      {"axiom validation", 1, axiom_validation},
      {"category laws", 10, category_laws},
      {"cartesian degeneracy and universal properties", 30, cartesian},
      {"monoidal closed structure", 60, [](Outcome& o) { suites(o, {"smc", "closed"}, 100, 3); }},
      {"duality", 60, duality},
      {"exponential comonad and monad", 60, comonad_monad},
      {"strong monoidal structure of !", 60, [](Outcome& o) { suites(o, {"strong_monoidal"}, 100, 3); }},
      {"new-Seely coherence", 60, [](Outcome& o) { suites(o, {"seely"}, 100, 3); }},
      {"der naturality on discrete systems", 30, der_discrete},
      {"round trips and preservation", 120, theorem1},
      {"exponential versus function space", 120, bridge},
      {"embedding of linear relations", 30, phi},
      {"command line contract", 10, cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!run(static_cast<int>(i + 1), criteria[i].title, criteria[i].limit, criteria[i].body)) ++failed;
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
