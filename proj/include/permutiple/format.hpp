// format.hpp
//
// Text renderings shared by the CLI and tests: (d_k,...,d_0)_b numeral tuples,
// equalities, cycles, permutations in cycle notation, and the inverse parsers.

#pragma once

#include <string>
#include <vector>

#include "permutiple/enumerate.hpp"

namespace permutiple {

std::string render_digits(const DigitString& ds);  // "(4,2,1,3,0)_6"
std::string render_equality(const DigitString& product, const DigitString& multiplicand, int n);
std::string render_cycle(const DigitCycle& c);     // "(0,3,1)"
std::string render_combo(const CycleCombo& c);     // "(0,3,1)(2,4)"
std::string render_string(const InputString& s);   // "(0,3)(3,1)(1,0)"
std::string render_permutation(const Permutation& p);  // "(0,4)(1,3)(2)"
std::string render_carries(const CarrySequence& c);    // "0,3,3,3,0,0"

// Accepts "98901" (one digit per character) or "(10,3,5,1,8,6)" (big-endian,
// decimal components); validates digits against b. Throws std::invalid_argument.
DigitString parse_numeral(const std::string& text, int b);

// Accepts "(1,3)(0,2)(2,0)(3,1)". Throws std::invalid_argument.
std::vector<InputPair> parse_pairs(const std::string& text);

}  // namespace permutiple
