#include "infl/fixtures.hpp"

namespace infl::fixtures {

Lis one() {
  static const Lis instance = Lis({Token::star()}, [](std::span<const Token>) { return true; },
                                  [](Token a, Token b) { return a == b; }, "one");
  return instance;
}

Lis top() {
  static const Lis instance;
  return instance;
}

Lis d2() {
  static const Lis instance = discrete({"0", "1"});
  return instance;
}

Lis v() {
  static const Lis instance = make_lis("V", {Token::atom("p"), Token::atom("q")}, {}, {});
  return instance;
}

Lis c2() {
  const Token a = Token::atom("a");
  const Token b = Token::atom("b");
  static const Lis instance = make_lis("C2", {a, b}, {{a, b}}, {{a, b}});
  return instance;
}

std::vector<std::pair<std::string, Lis>> catalog() {
  return {{"ONE", one()}, {"TOP", top()}, {"D2", d2()}, {"V", v()}, {"C2", c2()}};
}

}  // namespace infl::fixtures
