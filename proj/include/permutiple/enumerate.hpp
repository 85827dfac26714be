// enumerate.hpp
//
// The two search methods. Method 1 (find_all): enumerate cycle combinations
// of a given total length, prune by the digit-sum condition, and order each
// survivor's edge multiset into strings. Method 2 (generate_from_unions):
// iterate cycle multisets by total length and keep those whose machine image
// union is viable. Both end at the same walk enumeration and agree per length.

#pragma once

#include <cstddef>
#include <vector>

#include "permutiple/hoey_sloane.hpp"
#include "permutiple/mother_graph.hpp"

namespace permutiple {

// Multiset of mother-graph cycles, kept sorted by cycle_less.
struct CycleCombo {
  std::vector<DigitCycle> cycles;

  int total_length() const;
  std::vector<int> digit_multiset() const;        // sorted vertex multiset
  std::vector<InputPair> edge_multiset() const;   // sorted edge multiset
  friend bool operator==(const CycleCombo&, const CycleCombo&) = default;
};

bool combo_less(const CycleCombo& a, const CycleCombo& b);

// All multisets of `cycles` whose lengths sum to `length`, except combos made
// of 1-cycles only (those only ever spell the all-zero string). Deterministic
// lexicographic order over the canonical cycle list.
std::vector<CycleCombo> combos_of_length(const std::vector<DigitCycle>& cycles, int length);

struct FoundPermutiple {
  PermutipleWitness witness;
  CycleCombo source_combo;  // first combo (in enumeration order) producing it
  InputString string;
};

struct SearchOptions {
  bool allow_boundary_zeros = true;
  std::size_t string_cap = 10000;  // per-multiset walk cap, see StringOptions
  bool parallel = true;            // process combos with OpenMP when built in
};

struct FindResult {
  std::vector<FoundPermutiple> found;  // deduped, sorted by product then multiplicand
  bool truncated = false;              // some multiset hit the string cap
};

// Method 1: every permutiple of exactly `length` digits (leading zeros
// permitted by default), deduped on the (product, multiplicand) digit pair.
FindResult find_all(const Params& p, int length, const SearchOptions& options = {});

// Method 2: every permutiple of up to `max_length` digits, found by viability
// of cycle-image unions; ordered by length, then like find_all.
FindResult generate_from_unions(const Params& p, int max_length,
                                const SearchOptions& options = {});

// Method-2 sweep over an explicit cycle list; generate_from_unions passes all
// cycles, the palintiple search only those of length <= 2.
FindResult generate_from_cycles(const Params& p, const std::vector<DigitCycle>& cycles,
                                int max_length, const SearchOptions& options = {});

}  // namespace permutiple
