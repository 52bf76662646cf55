#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infl/lis.hpp"

namespace infl::fixtures {

/// ({*}, {∅,{*}}, {(*,*)}); also the unit ⊥ of the dual tensor.
Lis one();
/// (∅, {∅}, ∅)
Lis top();
/// discrete({0,1})
Lis d2();
/// ({p,q}, con {∅,{p},{q}}, identity entailment)
Lis v();
/// ({a,b}, full con, a ⊢ b)
Lis c2();

/// The catalog in a fixed order: ONE, TOP, D2, V, C2.
std::vector<std::pair<std::string, Lis>> catalog();

}  // namespace infl::fixtures
