// dot.hpp
//
// Deterministic Graphviz export. State 0 of the machine is double-circled
// (initial and accepting); highlighted digit edges render red, the convention
// used for marking a class graph inside the full mother graph.

#pragma once

#include <set>
#include <string>
#include <utility>

#include "permutiple/hoey_sloane.hpp"
#include "permutiple/mother_graph.hpp"

namespace permutiple {

std::string to_dot(const MotherGraph& m,
                   const std::set<std::pair<int, int>>& highlight = {});
std::string to_dot(const HoeySloaneGraph& machine);
std::string to_dot(const CycleImage& image, const std::string& name = "image");

}  // namespace permutiple
