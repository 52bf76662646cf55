#include "infl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "infl/classical.hpp"
#include "infl/domains.hpp"
#include "infl/dsl.hpp"
#include "infl/laws.hpp"

namespace infl {

namespace {

struct Options {
  std::string in;
  bool strict = false;
  std::optional<std::size_t> cap_subset, cap_pairwise, cap_homset;

  std::string file;
  std::string expr, expr2;
  std::string print = "web";
  bool count = false;

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t max_tokens = 3;
  std::string format = "text";
  bool mutate_m = false;

  std::string output = "-";
};

/// Failures that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Caps apply_caps(Caps c, const Options& o) {
  if (o.cap_subset) c.subset_web = *o.cap_subset;
  if (o.cap_pairwise) c.pairwise_web = *o.cap_pairwise;
  if (o.cap_homset) c.homset_pairs = *o.cap_homset;
  return c;
}

dsl::Env load(const Options& o, const Caps& caps) {
  dsl::SourceFile f;
  if (!o.in.empty()) f = dsl::parse(read_file(o.in));
  return dsl::Env(f, o.strict, caps);
}

std::string point_text(const TokenSet& x) { return x.empty() ? "∅" : to_string(x); }

void print_report(std::ostream& out, const ValidationReport& rep) {
  for (const auto& v : rep.violations) out << "  " << to_string(v.axiom) << ": " << v.witness << "\n";
}

int cmd_check(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const dsl::Env env(dsl::parse(read_file(o.file)), o.strict, caps);
  bool ok = true;
  for (const auto& [name, l] : env.systems()) {
    auto rep = validate_lis(l, caps);
    out << "system " << name << ": " << (rep.ok() ? "ok" : "invalid") << "\n";
    print_report(out, rep);
    ok = ok && rep.ok();
  }
  for (const auto& [name, r] : env.relations()) {
    auto rep = validate_rel(r, caps);
    out << "relation " << name << ": " << (rep.ok() ? "ok" : "invalid") << "\n";
    print_report(out, rep);
    ok = ok && rep.ok();
  }
  return ok ? 0 : 1;
}

int cmd_format(const Options& o, std::ostream& out) {
  out << dsl::print(dsl::parse(read_file(o.file)));
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const Lis a = load(o, caps).eval(o.expr);
  if (o.print == "web") {
    out << to_string(TokenSet(a.web())) << "\n";
  } else if (o.print == "con") {
    for (const auto& s : consistent_subsets(a, caps)) out << to_string(s) << "\n";
  } else {
    for (const auto& [x, y] : entailment_pairs(a, caps)) out << to_string(x) << " -> " << to_string(y) << "\n";
  }
  return 0;
}

int cmd_points(const Options& o, std::ostream& out, bool only_primes) {
  const Caps caps = apply_caps({}, o);
  const Poset p = points(load(o, caps).eval(o.expr), caps);
  if (only_primes) {
    for (std::size_t i : primes(p, caps)) out << point_text(p.at(i)) << "\n";
  } else {
    for (const auto& x : p.elements()) out << point_text(x) << "\n";
  }
  return 0;
}

int cmd_hom(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const dsl::Env env = load(o, caps);
  const auto homs = enumerate_homset(env.eval(o.expr), env.eval(o.expr2), caps);
  if (o.count) {
    out << homs.size() << "\n";
  } else {
    for (const auto& r : homs) out << to_string(r) << "\n";
  }
  return 0;
}

int cmd_laws(const Options& o, std::ostream& out) {
  SuiteParams params;
  params.seed = o.seed;
  params.samples = o.samples;
  params.max_tokens = o.max_tokens;
  params.caps = apply_caps(params.caps, o);
  params.mutate_m = o.mutate_m;
  std::vector<std::string_view> names;
  if (o.suite == "all") {
    for (auto n : suite_names()) names.push_back(n);
  } else {
    names.push_back(o.suite);
  }
  std::size_t failed_laws = 0;
  for (auto name : names) {
    const auto rep = run_suite(name, params);
    if (o.format == "json-lines") {
      for (const auto& i : rep.instances) {
        nlohmann::ordered_json j;
        j["suite"] = i.suite;
        j["law"] = i.law;
        j["seed"] = i.seed;
        j["verdict"] = to_string(i.verdict);
        j["witness"] = i.witness;
        out << j.dump() << "\n";
      }
    }
    for (const auto& s : rep.summary()) {
      if (s.failed) ++failed_laws;
      if (o.format == "json-lines") continue;
      out << rep.suite << " / " << s.law << ": " << (s.failed ? "FAIL" : "pass") << " (" << s.passed << " passed, "
          << s.failed << " failed, " << s.skipped << " skipped, " << s.redraws << " redraws)\n";
      for (const auto& i : rep.instances) {
        if (i.law == s.law && i.verdict == Verdict::Fail) {
          out << "  seed " << i.seed << ": " << i.witness << "\n";
          break;
        }
      }
    }
  }
  if (o.format != "json-lines") {
    out << (failed_laws ? std::to_string(failed_laws) + " law(s) failed" : std::string("all laws hold")) << "\n";
  }
  return failed_laws ? 1 : 0;
}

int cmd_bridge(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const dsl::Env env = load(o, caps);
  const auto rep = bridge_check(env.eval(o.expr), env.eval(o.expr2), caps);
  auto line = [&](const char* what, bool ok) { out << what << ": " << (ok ? "equal" : "differ") << "\n"; };
  line("webs", rep.webs_equal);
  line("consistency", rep.con_equal);
  line("entailment", rep.entails_equal);
  line("morphisms vs points", rep.homset_is_points);
  line("composition", rep.cokleisli_is_inf);
  if (!rep.ok()) out << "witness: " << rep.witness << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const Lis a = load(o, caps).eval(o.expr);
  const auto rt = roundtrip_object(a, caps);
  out << "eta: " << to_string(rt.eta) << "\n";
  if (rt.inverse) {
    out << "inverse: " << to_string(*rt.inverse) << "\n";
  } else {
    out << "eta is not an isomorphism\n";
  }
  const bool domain = roundtrip_domain(points(a, caps), caps).has_value();
  out << "points: " << (domain ? "order-isomorphic after the round trip" : "not order-isomorphic") << "\n";
  return rt.inverse && domain ? 0 : 1;
}

int cmd_dot(const Options& o, std::ostream& out) {
  const Caps caps = apply_caps({}, o);
  const Poset p = points(load(o, caps).eval(o.expr), caps);
  std::ostringstream dot;
  dot << "digraph points {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) dot << "  n" << i << " [label=\"" << to_string(p.at(i)) << "\"];\n";
  for (const auto& [i, j] : p.covers()) dot << "  n" << i << " -> n" << j << ";\n";
  dot << "}\n";
  if (o.output == "-") {
    out << dot.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.output);
    f << dot.str();
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Linear information systems toolkit", "infl"};
  app.require_subcommand(1);
  app.add_option("--in", o.in, "Definitions file");
  app.add_flag("--strict", o.strict, "Take con and entails as given, without closure");
  app.add_option("--cap-subset", o.cap_subset, "Override the subset cap (log2 of the set count)");
  app.add_option("--cap-pairwise", o.cap_pairwise, "Override the pairwise web cap");
  app.add_option("--cap-homset", o.cap_homset, "Override the hom-set candidate pair cap");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, std::function<int()> f) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&action, f] { action = f; });
    return s;
  };

  auto* check = sub("check", "Validate every definition in a file", [&] { return cmd_check(o, out); });
  check->add_option("file", o.file)->required();

  auto* fmt = sub("format", "Print a file in canonical form", [&] { return cmd_format(o, out); });
  fmt->add_option("file", o.file)->required();

  auto* eval = sub("eval", "Construct a system and print it", [&] { return cmd_eval(o, out); });
  eval->add_option("expr", o.expr)->required();
  eval->add_option("--print", o.print)->check(CLI::IsMember({"web", "con", "entails"}));

  auto* pts = sub("points", "List the points of a system", [&] { return cmd_points(o, out, false); });
  pts->add_option("expr", o.expr)->required();
  auto* prm = sub("primes", "List the prime points of a system", [&] { return cmd_points(o, out, true); });
  prm->add_option("expr", o.expr)->required();

  auto* hom = sub("hom", "Enumerate the morphisms between two systems", [&] { return cmd_hom(o, out); });
  hom->add_option("source", o.expr)->required();
  hom->add_option("target", o.expr2)->required();
  hom->add_flag("--count", o.count);

  auto* laws = sub("laws", "Run law suites", [&] { return cmd_laws(o, out); });
  laws->add_option("--suite", o.suite);
  laws->add_option("--seed", o.seed);
  laws->add_option("--samples", o.samples);
  laws->add_option("--max-tokens", o.max_tokens);
  laws->add_option("--format", o.format)->check(CLI::IsMember({"text", "json-lines"}));
  laws->add_flag("--mutate-m", o.mutate_m, "Drop one pair from m (smoke test for the checker)");

  auto* bridge = sub("bridge", "Compare !A -o B with the classical function space", [&] { return cmd_bridge(o, out); });
  bridge->add_option("a", o.expr)->required();
  bridge->add_option("b", o.expr2)->required();

  auto* rt = sub("roundtrip", "Round trip through points and primes", [&] { return cmd_roundtrip(o, out); });
  rt->add_option("expr", o.expr)->required();

  auto* dot = sub("dot", "Hasse diagram of the points in DOT", [&] { return cmd_dot(o, out); });
  dot->add_option("expr", o.expr)->required();
  dot->add_option("-o", o.output, "Output path, - for stdout");

  for (auto* s : app.get_subcommands({})) {
    s->fallthrough();
  }

  std::vector<const char*> argv{"infl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace infl
