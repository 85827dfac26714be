// classify.hpp
//
// Structure on top of found permutiples: the digit graph of a witness, its
// class (everything whose graph fits inside), conjugacy of equalities over a
// shared digit multiset, palintiples, and the carry-string descent from base
// b to base n.

#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "permutiple/enumerate.hpp"

namespace permutiple {

// Edge set {(d_j, d_sigma(j))}; always a union of mother-graph cycles.
struct PermutipleGraph {
  int base = 10;
  std::set<std::pair<int, int>> edges;
  friend bool operator==(const PermutipleGraph&, const PermutipleGraph&) = default;
};

PermutipleGraph graph_of(const PermutipleWitness& w);

// Membership in the class anchored at a witness: the candidate's graph is a
// subgraph of the class graph.
bool in_class(const PermutipleWitness& candidate, const PermutipleGraph& class_graph);

// pi * tau * pi^{-1} under function composition. Conjugate equalities over a
// common reference digit tuple share this key.
Permutation conjugacy_key(const Permutation& pi, const Permutation& tau);

struct ConjugacyClass {
  std::vector<Permutation> keys;        // every key any member produced, sorted
  std::vector<FoundPermutiple> members; // sorted by product then multiplicand
};

// Partition of all permutiples sharing base's length and digit multiset.
// Repeated digits get every labeling; classes whose printed equalities
// overlap are merged. The class containing `base` is always present.
std::vector<ConjugacyClass> conjugacy_classes(const PermutipleWitness& base,
                                              const SearchOptions& options = {});

// Permutiples whose product reads as the reversal of their multiplicand.
// Generated from unions of 1- and 2-cycles only; emitted strings read
// palindromically as flattened digit sequences.
FindResult palintiples(const Params& p, int max_length, const SearchOptions& options = {});

struct DerivedPermutiple {
  int multiplier;            // inner m, 1 < m < n
  PermutipleWitness inner;   // base-n witness over the carry digits c_1..c_k
};

struct DerivedCheck {
  std::optional<DerivedPermutiple> derived;
  // The carry string also satisfied the digit condition at m = n, which the
  // strict m < n search excludes.
  bool near_miss_m_equals_n = false;
};

// Reads the witness's carries (c_k,...,c_1) as a base-n string and looks for
// an inner permutiple equality. Throws std::invalid_argument when the witness
// has fewer than 2 digits (no carry string to read).
DerivedCheck is_derived(const PermutipleWitness& w);

}  // namespace permutiple
