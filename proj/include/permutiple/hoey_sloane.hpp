// hoey_sloane.hpp
//
// The (n,b)-Hoey-Sloane machine: carries 0..n-1 as states, mother-graph edges
// as inputs. An input (d1,d2) divides exactly from a single state, namely
// least_residue(d1 + (b-n)*d2, b), so each edge of the mother graph appears
// exactly once across the whole labeled diagram. Walks from state 0 back to
// state 0 are exactly the digit-pair strings of permutiples.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/params.hpp"

namespace permutiple {

// (product digit, multiplicand digit) occupying one place of an equality.
using InputPair = std::pair<int, int>;

// The unique state from which (d1,d2) can be consumed. A value <= n-1 is
// equivalent to mother-graph edge membership.
int input_source_state(const InputPair& input, const Params& p);

// Next carry when consuming `input` at `state`: (n*d2 - d1 + state) / b.
// Empty when the input is not a mother-graph edge or is not consumable here
// (the division does not land on an integer).
std::optional<int> transition(int state, const InputPair& input, const Params& p);

struct HoeySloaneGraph {
  Params params;
  // labels[(c1,c2)] = sorted inputs consumed on the transition c1 -> c2.
  std::map<std::pair<int, int>, std::vector<InputPair>> labels;

  int states() const { return params.n; }
  // Inputs consumable at c1, sorted; always exactly b of them.
  std::vector<InputPair> inputs_at(int c1) const;
};

// Initial state and the only accepting state are both 0.
HoeySloaneGraph build_machine(const Params& p);

// Machine restricted to the labels drawn from one cycle (or a union of
// cycles); states with no incident label are dropped.
struct CycleImage {
  Params params;
  std::map<std::pair<int, int>, std::vector<InputPair>> labels;

  std::set<int> states() const;
  bool empty() const { return labels.empty(); }
  friend bool operator==(const CycleImage&, const CycleImage&) = default;
};

CycleImage cycle_image(const DigitCycle& cycle, const HoeySloaneGraph& machine);

// Statewise and labelwise set union.
CycleImage union_images(const std::vector<CycleImage>& images);

// Nonempty, contains state 0, and strongly connected: the necessary and
// sufficient shape for the underlying cycle multiset to order into at least
// one accepted walk through every state it touches.
bool is_viable(const CycleImage& image);

// Input string of an equality, place j first: inputs[j] = (d_j, d_sigma(j)).
struct InputString {
  std::vector<InputPair> inputs;

  int length() const { return static_cast<int>(inputs.size()); }
  std::vector<int> product_digits() const;       // little-endian
  std::vector<int> multiplicand_digits() const;  // little-endian
  friend bool operator==(const InputString&, const InputString&) = default;
};

struct StringOptions {
  // When false, drop strings whose final input has a zero component, i.e.
  // whose product or multiplicand would print with a leading zero.
  bool allow_boundary_zeros = true;
  std::size_t cap = 10000;  // maximum strings returned per multiset
};

struct StringEnumeration {
  std::vector<InputString> strings;  // sorted by big-endian product string
  bool truncated = false;            // cap reached; strings is a prefix
};

// Every ordering of `multiset` (consumed exactly, repeats and all) that walks
// the machine from state 0 back to state 0. Orderings over repeated elements
// are generated once each. Dead subtrees are pruned via a feasibility memo
// keyed on (state, remaining multiset).
StringEnumeration enumerate_strings(const std::vector<InputPair>& multiset,
                                    const HoeySloaneGraph& machine,
                                    const StringOptions& options = {});

// Converts an accepted string into a verified witness with a deterministic
// cycle-preserving sigma. Empty when the left/right digit multisets differ or
// the string does not encode a permutiple equality.
std::optional<PermutipleWitness> string_to_witness(const InputString& s, const Params& p);

}  // namespace permutiple
