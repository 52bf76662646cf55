#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "infl/lis.hpp"
#include "infl/morph.hpp"

namespace infl::dsl {

struct Loc {
  std::size_t line = 1;
  std::size_t col = 1;
  // Locations are bookkeeping, not structure: parse(print(f)) == f.
  friend bool operator==(const Loc&, const Loc&) { return true; }
};

/// Syntax errors, unknown names and tokens outside a web, with a location.
class DslError : public std::invalid_argument {
 public:
  DslError(Loc loc, const std::string& msg);
  Loc loc;
};

struct Expr {
  enum class Kind { Name, One, Top, Bang, Dual, Tensor, Lolli, With, Plus };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<Expr> kids;
  Loc loc;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct SystemDef {
  std::string name;
  std::vector<std::string> tokens;
  std::vector<std::vector<std::string>> con;
  std::vector<std::pair<std::string, std::string>> entails;
  Loc loc;

  friend bool operator==(const SystemDef&, const SystemDef&) = default;
};

struct RelationDef {
  std::string name;
  Expr source;
  Expr target;
  bool close = false;
  std::vector<std::pair<Token, Token>> pairs;
  std::vector<Loc> pair_locs;
  Loc loc;

  friend bool operator==(const RelationDef&, const RelationDef&) = default;
};

using Definition = std::variant<SystemDef, RelationDef>;

struct SourceFile {
  std::vector<Definition> defs;
  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

SourceFile parse(std::string_view text);
Expr parse_expr(std::string_view text);

std::string print(const SourceFile& f);
std::string print(const Expr& e);

/// Elaborated definitions. Catalog names (ONE, TOP, D2, V, C2) resolve when
/// the file does not define them.
class Env {
 public:
  /// With strict, con generators and entailment pairs are taken as given
  /// instead of being closed.
  explicit Env(const SourceFile& f, bool strict = false, const Caps& caps = {});

  Lis eval(const Expr& e) const;
  Lis eval(std::string_view expr_text) const { return eval(parse_expr(expr_text)); }

  const std::vector<std::pair<std::string, Lis>>& systems() const { return systems_; }
  const std::vector<std::pair<std::string, LinRel>>& relations() const { return relations_; }

 private:
  const Lis* find_system(const std::string& name) const;

  Caps caps_;
  std::vector<std::pair<std::string, Lis>> systems_;
  std::vector<std::pair<std::string, LinRel>> relations_;
  std::vector<std::pair<std::string, Lis>> catalog_;
};

}  // namespace infl::dsl
