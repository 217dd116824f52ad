#pragma once

#include <string>

#include "symring/birig.hpp"
#include "symring/characters.hpp"
#include "symring/symfunc.hpp"

namespace symring {

// Parse the expression grammar:
//   expr ::= ['+'|'-'] term (('+'|'-') term)*
//   term ::= [coeff '*'] basis '[' parts ']' | coeff
//   coeff ::= integer ['/' integer]
// e.g. "3*s[2,1] - p[4] + 1". Errors carry byte offsets. If all atoms share
// one basis the result keeps it; mixed-basis expressions are combined in the
// p basis.
SymFunc parse_expression(const std::string& src);

// Parse "[2,1]" / "2,1" / "[]" into a partition.
Partition parse_partition(const std::string& src);

// JSON: {"basis":"s","terms":[{"partition":[2,1],"coeff":"3"}]}
std::string symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

// JSON: {"left_basis":"s","right_basis":"s",
//        "terms":[{"left":[2],"right":[1],"coeff":"1"}]}
std::string tensor_to_json(const TensorElem& t);
TensorElem tensor_from_json(const std::string& text);

std::string char_table_to_json(const CharacterTable& t);
std::string report_to_json(const VerifyReport& r);

}  // namespace symring
