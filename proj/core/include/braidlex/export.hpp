#pragma once

#include <iosfwd>
#include <string>

#include "braidlex/automaton.hpp"

namespace braidlex {

// {"n":..,"initial":0,"states":[{"i","j","k","S","final_letter"}..],
//  "transitions":[[from, letter, to]..]}
std::string to_json(const Automaton& a, int indent = -1);
void write_dot(std::ostream& out, const Automaton& a);

}  // namespace braidlex
