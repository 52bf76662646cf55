#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl {

/// Two composable paths with common endpoints.
struct Diagram {
  std::string name;
  std::vector<LinRel> left;
  std::vector<LinRel> right;
};

struct DiagramResult {
  bool commutes = false;
  /// Empty when the diagram commutes; otherwise the first differing pair.
  std::string witness;
};

/// Composes both paths and compares the pair-sets exactly. Throws
/// ObjectMismatch for ill-typed paths or mismatched endpoints.
DiagramResult check_diagram(const Diagram& d, const Caps& caps = {});

/// Random valid system with at most max_tokens tokens; TOP when max_tokens = 0.
/// 30% of draws are forced into Inflfull, another 30% get identity entailment.
Lis gen_lis(std::uint64_t seed, std::size_t max_tokens);
/// Random discrete system (identity entailment, full consistency) with 1..max_tokens tokens.
Lis gen_discrete(std::uint64_t seed, std::size_t max_tokens);
/// Random valid morphism a → b: AR2 closure of random seeds, redrawn with
/// sparser seeds while AR1 fails. The empty relation ends the retry chain.
LinRel gen_rel(std::uint64_t seed, const Lis& a, const Lis& b, const Caps& caps = {});

enum class Verdict { Pass, Fail, Skip };
std::string to_string(Verdict v);

/// One checked law instance.
struct LawInstance {
  std::string suite;
  std::string law;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Pass;
  /// Failure witness, or the cap notice for a skipped instance.
  std::string witness;
  /// Instance description, e.g. the systems involved.
  std::string detail;
  /// Draws rejected for exceeding the caps before this instance.
  std::size_t redraws = 0;
};

struct LawSummary {
  std::string law;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t redraws = 0;
};

struct LawSuiteReport {
  std::string suite;
  std::vector<LawInstance> instances;

  bool ok() const;
  std::vector<LawSummary> summary() const;
};

struct SuiteParams {
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t max_tokens = 3;
  /// Suites build !-objects and tensors of them, so the pairwise cap is
  /// raised well above the interactive default.
  Caps caps{12, 1024, 16};
  /// Redraws allowed when an instance exceeds the caps.
  std::size_t attempts = 24;
  /// Mutation hook: drop one pair from every m used by the strong_monoidal suite.
  bool mutate_m = false;
};

std::span<const std::string_view> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
LawSuiteReport run_suite(std::string_view name, const SuiteParams& params);

struct CoverageEntry {
  std::string_view suite;
  std::string_view law;
  std::string_view statement;
};

/// Every law the suites check, with the equation it stands for.
std::span<const CoverageEntry> coverage_manifest();

/// m_{A,B} with its first pair removed (the mutation used by smoke tests).
LinRel mutated_m(const Lis& a, const Lis& b, const Caps& caps = {});

}  // namespace infl
