#include "infl/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "infl/bang.hpp"
#include "infl/constructions.hpp"
#include "infl/fixtures.hpp"

namespace infl::dsl {

DslError::DslError(Loc l, const std::string& msg)
    : std::invalid_argument("line " + std::to_string(l.line) + ", col " + std::to_string(l.col) + ": " + msg),
      loc(l) {}

namespace {

enum class Tok { Ident, LBrace, RBrace, LParen, RParen, Comma, Semi, Colon, Star, Bang, Amp, Plus, Arrow, Lolli, End };

struct Lexeme {
  Tok kind;
  std::string text;
  Loc loc;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Lexeme> lex(std::string_view src) {
  std::vector<Lexeme> out;
  Loc loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.col = 1;
      } else {
        ++loc.col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const Loc at = loc;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && (src[i + 1] == '>' || src[i + 1] == 'o')) {
      out.push_back({src[i + 1] == '>' ? Tok::Arrow : Tok::Lolli, std::string(src.substr(i, 2)), at});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case ':': k = Tok::Colon; break;
      case '*': k = Tok::Star; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '+': k = Tok::Plus; break;
      default: throw DslError(at, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), at});
    advance(1);
  }
  out.push_back({Tok::End, "end of input", loc});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SourceFile file() {
    SourceFile f;
    std::set<std::string> names;
    while (peek().kind != Tok::End) {
      const Lexeme& kw = peek();
      Definition d;
      if (is_kw("system")) {
        d = system();
      } else if (is_kw("relation")) {
        d = relation();
      } else {
        throw DslError(kw.loc, "expected 'system' or 'relation', found '" + kw.text + "'");
      }
      const std::string& name = std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
      if (!names.insert(name).second) throw DslError(kw.loc, "duplicate definition of '" + name + "'");
      f.defs.push_back(std::move(d));
    }
    return f;
  }

  Expr whole_expr() {
    Expr e = expr();
    if (peek().kind != Tok::End) throw DslError(peek().loc, "unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Lexeme& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Lexeme& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool is_kw(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  const Lexeme& expect(Tok k, std::string_view what) {
    if (peek().kind != k) throw DslError(peek().loc, "expected " + std::string(what) + ", found '" + peek().text + "'");
    return next();
  }

  void expect_kw(std::string_view kw) {
    if (!is_kw(kw)) throw DslError(peek().loc, "expected '" + std::string(kw) + "', found '" + peek().text + "'");
    next();
  }

  SystemDef system() {
    SystemDef s;
    s.loc = peek().loc;
    next();
    s.name = expect(Tok::Ident, "a system name").text;
    expect(Tok::LBrace, "'{'");
    expect_kw("tokens");
    std::set<std::string> web;
    while (peek().kind == Tok::Ident && !is_kw("con") && !is_kw("entails")) {
      const Lexeme& t = next();
      if (!web.insert(t.text).second) throw DslError(t.loc, "duplicate token '" + t.text + "'");
      s.tokens.push_back(t.text);
    }
    auto member = [&](const Lexeme& t) -> std::string {
      if (!web.count(t.text)) throw DslError(t.loc, "token '" + t.text + "' is not in the web of " + s.name);
      return t.text;
    };
    if (is_kw("con")) {
      next();
      if (peek().kind != Tok::LBrace) throw DslError(peek().loc, "expected a set after 'con'");
      while (peek().kind == Tok::LBrace) {
        next();
        std::vector<std::string> set;
        while (peek().kind != Tok::RBrace) {
          if (peek().kind == Tok::Comma && !set.empty()) next();
          set.push_back(member(expect(Tok::Ident, "a token or '}'")));
        }
        next();
        s.con.push_back(std::move(set));
      }
    }
    while (is_kw("entails")) {
      next();
      do {
        std::string from = member(expect(Tok::Ident, "a token"));
        expect(Tok::Arrow, "'->'");
        std::string to = member(expect(Tok::Ident, "a token"));
        s.entails.emplace_back(std::move(from), std::move(to));
        if (peek().kind == Tok::Semi) next();
      } while (peek().kind == Tok::Ident && !is_kw("entails"));
    }
    expect(Tok::RBrace, "'}'");
    return s;
  }

  RelationDef relation() {
    RelationDef r;
    r.loc = peek().loc;
    next();
    r.name = expect(Tok::Ident, "a relation name").text;
    expect(Tok::Colon, "':'");
    r.source = expr();
    expect(Tok::Arrow, "'->'");
    r.target = expr();
    if (is_kw("close")) {
      next();
      r.close = true;
    }
    expect(Tok::LBrace, "'{'");
    while (peek().kind != Tok::RBrace) {
      r.pair_locs.push_back(peek().loc);
      expect(Tok::LParen, "'(' or '}'");
      Token a = token();
      expect(Tok::Comma, "','");
      Token b = token();
      expect(Tok::RParen, "')'");
      r.pairs.emplace_back(a, b);
    }
    next();
    return r;
  }

  bool starts_token(std::size_t ahead) const {
    const Tok k = peek(ahead).kind;
    return k == Tok::Ident || k == Tok::Star || k == Tok::LParen || k == Tok::LBrace;
  }

  Token token() {
    const Lexeme& t = peek();
    switch (t.kind) {
      case Tok::Star:
        next();
        return Token::star();
      case Tok::LParen: {
        next();
        Token a = token();
        expect(Tok::Comma, "','");
        Token b = token();
        expect(Tok::RParen, "')'");
        return Token::pair(a, b);
      }
      case Tok::LBrace: {
        next();
        std::vector<Token> elems;
        while (peek().kind != Tok::RBrace) {
          if (!elems.empty()) expect(Tok::Comma, "',' or '}'");
          elems.push_back(token());
        }
        next();
        return Token::finset(std::move(elems));
      }
      case Tok::Ident:
        next();
        if ((t.text == "L" || t.text == "R") && starts_token(0)) {
          Token inner = token();
          return t.text == "L" ? Token::left(inner) : Token::right(inner);
        }
        return Token::atom(t.text);
      default:
        throw DslError(t.loc, "expected a token, found '" + t.text + "'");
    }
  }

  static Expr node(Expr::Kind k, Loc loc, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.loc = loc;
    e.kids = std::move(kids);
    return e;
  }

  Expr expr() {
    Expr l = lolli();
    while (peek().kind == Tok::Amp || peek().kind == Tok::Plus) {
      const Lexeme& op = next();
      Expr r = lolli();
      l = node(op.kind == Tok::Amp ? Expr::Kind::With : Expr::Kind::Plus, op.loc, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr lolli() {
    Expr l = tensor();
    if (peek().kind != Tok::Lolli) return l;
    const Loc at = next().loc;
    Expr r = lolli();
    return node(Expr::Kind::Lolli, at, {std::move(l), std::move(r)});
  }

  Expr tensor() {
    Expr l = prefix();
    while (peek().kind == Tok::Star) {
      const Loc at = next().loc;
      Expr r = prefix();
      l = node(Expr::Kind::Tensor, at, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr prefix() {
    if (peek().kind == Tok::Bang) {
      const Loc at = next().loc;
      return node(Expr::Kind::Bang, at, {prefix()});
    }
    if (is_kw("dual")) {
      const Loc at = next().loc;
      return node(Expr::Kind::Dual, at, {prefix()});
    }
    return atom();
  }

  Expr atom() {
    const Lexeme& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind != Tok::Ident) throw DslError(t.loc, "expected an expression, found '" + t.text + "'");
    next();
    if (t.text == "1") return node(Expr::Kind::One, t.loc, {});
    if (t.text == "top") return node(Expr::Kind::Top, t.loc, {});
    Expr e = node(Expr::Kind::Name, t.loc, {});
    e.name = t.text;
    return e;
  }

  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
};

int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::With:
    case Expr::Kind::Plus: return 0;
    case Expr::Kind::Lolli: return 1;
    case Expr::Kind::Tensor: return 2;
    case Expr::Kind::Bang:
    case Expr::Kind::Dual: return 3;
    default: return 4;
  }
}

std::string print_at(const Expr& e, int min) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Name: s = e.name; break;
    case Expr::Kind::One: s = "1"; break;
    case Expr::Kind::Top: s = "top"; break;
    case Expr::Kind::Bang: s = "!" + print_at(e.kids[0], 3); break;
    case Expr::Kind::Dual: s = "dual " + print_at(e.kids[0], 3); break;
    case Expr::Kind::Tensor: s = print_at(e.kids[0], 2) + " * " + print_at(e.kids[1], 3); break;
    case Expr::Kind::Lolli: s = print_at(e.kids[0], 2) + " -o " + print_at(e.kids[1], 1); break;
    case Expr::Kind::With: s = print_at(e.kids[0], 0) + " & " + print_at(e.kids[1], 1); break;
    case Expr::Kind::Plus: s = print_at(e.kids[0], 0) + " + " + print_at(e.kids[1], 1); break;
  }
  return level(e) < min ? "(" + s + ")" : s;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace

SourceFile parse(std::string_view text) { return Parser(text).file(); }

Expr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }

std::string print(const Expr& e) { return print_at(e, 0); }

std::string print(const SourceFile& f) {
  std::string out;
  for (std::size_t i = 0; i < f.defs.size(); ++i) {
    if (i) out += "\n";
    if (const auto* s = std::get_if<SystemDef>(&f.defs[i])) {
      out += "system " + s->name + " {\n  tokens";
      for (const auto& t : s->tokens) out += " " + t;
      out += "\n";
      if (!s->con.empty()) {
        out += "  con";
        for (const auto& set : s->con) out += " {" + join(set, " ") + "}";
        out += "\n";
      }
      for (const auto& [a, b] : s->entails) out += "  entails " + a + " -> " + b + "\n";
      out += "}\n";
    } else {
      const auto& r = std::get<RelationDef>(f.defs[i]);
      out += "relation " + r.name + " : " + print(r.source) + " -> " + print(r.target) + (r.close ? " close" : "") +
             " {\n";
      for (const auto& [a, b] : r.pairs) out += "  (" + to_string(a) + "," + to_string(b) + ")\n";
      out += "}\n";
    }
  }
  return out;
}

Env::Env(const SourceFile& f, bool strict, const Caps& caps) : caps_(caps), catalog_(fixtures::catalog()) {
  for (const auto& d : f.defs) {
    if (const auto* s = std::get_if<SystemDef>(&d)) {
      std::vector<Token> web;
      for (const auto& t : s->tokens) web.push_back(Token::atom(t));
      std::vector<TokenSet> con;
      for (const auto& set : s->con) {
        std::vector<Token> ts;
        for (const auto& t : set) ts.push_back(Token::atom(t));
        con.push_back(make_token_set(std::move(ts)));
      }
      std::vector<std::pair<Token, Token>> ent;
      for (const auto& [a, b] : s->entails) ent.emplace_back(Token::atom(a), Token::atom(b));
      systems_.emplace_back(s->name, strict ? raw_lis(s->name, web, con, ent) : make_lis(s->name, web, con, ent));
      continue;
    }
    const auto& r = std::get<RelationDef>(d);
    const Lis src = eval(r.source), tgt = eval(r.target);
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      const auto& [a, b] = r.pairs[i];
      const Loc at = i < r.pair_locs.size() ? r.pair_locs[i] : r.loc;
      if (!src.contains(a)) throw DslError(at, "token " + to_string(a) + " is not in the web of " + print(r.source));
      if (!tgt.contains(b)) throw DslError(at, "token " + to_string(b) + " is not in the web of " + print(r.target));
    }
    relations_.emplace_back(r.name, r.close ? ar2_close(src, tgt, r.pairs, caps_) : LinRel(src, tgt, r.pairs));
  }
}

const Lis* Env::find_system(const std::string& name) const {
  for (const auto* table : {&systems_, &catalog_}) {
    for (const auto& [n, l] : *table) {
      if (n == name) return &l;
    }
  }
  return nullptr;
}

Lis Env::eval(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Name:
      if (const Lis* l = find_system(e.name)) return *l;
      throw DslError(e.loc, "unknown system '" + e.name + "'");
    case Expr::Kind::One: return one_obj();
    case Expr::Kind::Top: return top_obj();
    case Expr::Kind::Bang: return bang_obj(eval(e.kids[0]), caps_);
    case Expr::Kind::Dual: return dual_obj(eval(e.kids[0]));
    case Expr::Kind::Tensor: return tensor_obj(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::Lolli: return lollipop_obj(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::With: return with_obj(eval(e.kids[0]), eval(e.kids[1]));
    case Expr::Kind::Plus: return plus_obj(eval(e.kids[0]), eval(e.kids[1]));
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace infl::dsl
