// mother_graph.hpp
//
// The (n,b)-mother graph: digits 0..b-1 with an edge (d1,d2) whenever d1 can
// sit directly above d2 in some permutiple equality. Every permutiple's digit
// pairs decompose into simple cycles of this graph, so cycle enumeration is
// the front door of both search methods.

#pragma once

#include <utility>
#include <vector>

#include "permutiple/params.hpp"

namespace permutiple {

// Simple directed cycle, canonical form: rotated so the least vertex is first.
// A single vertex means a self-loop.
struct DigitCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  std::vector<std::pair<int, int>> edges() const;  // (v_i, v_{i+1 mod m})
  friend bool operator==(const DigitCycle&, const DigitCycle&) = default;
};

// Orders by (length, vertex sequence); matches the indexing C_0, C_1, ... used
// throughout the tables and the image CLI.
bool cycle_less(const DigitCycle& a, const DigitCycle& b);

struct MotherGraph {
  Params params;
  std::vector<std::vector<int>> out;  // out[d1] = sorted successors

  bool has_edge(int d1, int d2) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted lexicographically
};

// Edge condition: least_residue(d1 + (b-n)*d2, b) <= n-1.
bool edge_allowed(int d1, int d2, const Params& p);

MotherGraph build_mother_graph(const Params& p);

// All simple cycles (self-loops included), canonical and sorted by
// (length, lex). Johnson-style search: per-cycle cost stays polynomial even
// where counts run into the hundreds.
std::vector<DigitCycle> enumerate_cycles(const MotherGraph& m);

}  // namespace permutiple
