#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rulesim/rulesim.hpp"

namespace th {

using namespace rulesim;

inline Equation eq(Nat attr, Nat value) { return {AttributeId{attr}, value}; }

inline Assignment set_to(Nat attr, Nat value) {
    return {AttributeId{attr}, ExtendedValue::of(value)};
}

inline Assignment set_star(Nat attr) { return {AttributeId{attr}, ExtendedValue::star()}; }

inline RuleSystem sys(std::vector<std::pair<std::vector<Equation>, Nat>> parts) {
    return RuleSystem::from_parts(std::move(parts));
}

inline RuleSystem sys(const char* text) { return parse_rules(text); }

inline EquationSystem eqs(std::vector<Assignment> entries) {
    return EquationSystem(std::move(entries));
}

inline ExtendedTuple tup(std::vector<Assignment> entries) {
    return ExtendedTuple(std::move(entries));
}

}  // namespace th
