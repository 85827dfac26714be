// enumerate.cpp
//
// Method 1 (fixed length, digit-sum pruned) and Method 2 (length sweep,
// viability pruned). Combos are independent work units; the parallel path
// collects per-combo results and merges them in combo order, so output is
// identical to the serial path.

#include "permutiple/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permutiple {

int CycleCombo::total_length() const {
  int total = 0;
  for (const auto& c : cycles) total += c.length();
  return total;
}

std::vector<int> CycleCombo::digit_multiset() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.insert(out.end(), c.vertices.begin(), c.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InputPair> CycleCombo::edge_multiset() const {
  std::vector<InputPair> out;
  for (const auto& c : cycles) {
    auto edges = c.edges();
    out.insert(out.end(), edges.begin(), edges.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool combo_less(const CycleCombo& a, const CycleCombo& b) {
  return std::lexicographical_compare(a.cycles.begin(), a.cycles.end(), b.cycles.begin(),
                                      b.cycles.end(), cycle_less);
}

std::vector<CycleCombo> combos_of_length(const std::vector<DigitCycle>& cycles, int length) {
  std::vector<CycleCombo> out;
  if (length <= 0) return out;

  std::vector<DigitCycle> current;
  // Multiplicity of cycles[idx] runs high to low so the emitted combo list is
  // lexicographic over the canonical (sorted) cycle sequences.
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      bool all_loops = std::all_of(current.begin(), current.end(),
                                   [](const DigitCycle& c) { return c.length() == 1; });
      if (!all_loops) out.push_back(CycleCombo{current});
      return;
    }
    if (idx == cycles.size()) return;
    const int len = cycles[idx].length();
    const int max_mult = remaining / len;
    for (int mult = max_mult; mult >= 0; --mult) {
      for (int i = 0; i < mult; ++i) current.push_back(cycles[idx]);
      self(self, idx + 1, remaining - mult * len);
      for (int i = 0; i < mult; ++i) current.pop_back();
    }
  };
  rec(rec, 0, length);
  return out;
}

namespace {

struct ComboYield {
  std::size_t combo_index;
  std::vector<InputString> strings;
  bool truncated = false;
};

// Shared tail of both methods: run the walk enumeration per combo (possibly
// in parallel), then merge, dedup on the printed pair, and sort.
std::vector<ComboYield> run_combos(const std::vector<CycleCombo>& combos,
                                   const std::vector<bool>& selected,
                                   const HoeySloaneGraph& machine, const SearchOptions& options) {
  std::vector<ComboYield> yields(combos.size());
  StringOptions walk_options{options.allow_boundary_zeros, options.string_cap};

  const auto body = [&](std::size_t i) {
    yields[i].combo_index = i;
    if (!selected[i]) return;
    auto enumeration = enumerate_strings(combos[i].edge_multiset(), machine, walk_options);
    yields[i].strings = std::move(enumeration.strings);
    yields[i].truncated = enumeration.truncated;
  };

#ifdef _OPENMP
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < combos.size(); ++i) body(i);
  } else {
    for (std::size_t i = 0; i < combos.size(); ++i) body(i);
  }
#else
  for (std::size_t i = 0; i < combos.size(); ++i) body(i);
#endif
  return yields;
}

void merge_yields(const std::vector<CycleCombo>& combos, std::vector<ComboYield>&& yields,
                  const Params& p, FindResult& result) {
  // Dedup key: the printed (product, multiplicand) pair. Distinct combos can
  // share an edge multiset, so the same string can surface twice; the first
  // combo in enumeration order claims it.
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> seen;
  for (auto& yield : yields) {
    result.truncated = result.truncated || yield.truncated;
    for (auto& s : yield.strings) {
      auto key = std::make_pair(s.product_digits(), s.multiplicand_digits());
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), yield.combo_index);
      auto witness = string_to_witness(s, p);
      assert(witness.has_value());  // accepted walks always verify
      result.found.push_back(
          FoundPermutiple{std::move(*witness), combos[yield.combo_index], std::move(s)});
    }
  }
}

void sort_found(std::vector<FoundPermutiple>& found) {
  std::sort(found.begin(), found.end(), [](const FoundPermutiple& a, const FoundPermutiple& b) {
    if (a.witness.digits.length() != b.witness.digits.length())
      return a.witness.digits.length() < b.witness.digits.length();
    if (a.witness.digits != b.witness.digits)
      return big_endian_less(a.witness.digits, b.witness.digits);
    return big_endian_less(a.witness.multiplicand(), b.witness.multiplicand());
  });
}

}  // namespace

FindResult find_all(const Params& p, int length, const SearchOptions& options) {
  FindResult result;
  if (length <= 0) return result;

  MotherGraph m = build_mother_graph(p);
  auto cycles = enumerate_cycles(m);
  auto combos = combos_of_length(cycles, length);
  HoeySloaneGraph machine = build_machine(p);

  std::vector<bool> selected(combos.size());
  for (std::size_t i = 0; i < combos.size(); ++i)
    selected[i] = digit_sum_filter(combos[i].digit_multiset(), p);

  auto yields = run_combos(combos, selected, machine, options);
  merge_yields(combos, std::move(yields), p, result);
  sort_found(result.found);
  return result;
}

FindResult generate_from_unions(const Params& p, int max_length, const SearchOptions& options) {
  MotherGraph m = build_mother_graph(p);
  return generate_from_cycles(p, enumerate_cycles(m), max_length, options);
}

FindResult generate_from_cycles(const Params& p, const std::vector<DigitCycle>& cycles,
                                int max_length, const SearchOptions& options) {
  FindResult result;
  if (max_length <= 0) return result;

  HoeySloaneGraph machine = build_machine(p);

  std::vector<CycleImage> images;
  images.reserve(cycles.size());
  for (const auto& c : cycles) images.push_back(cycle_image(c, machine));
  std::map<std::vector<int>, std::size_t> cycle_index;
  for (std::size_t i = 0; i < cycles.size(); ++i) cycle_index[cycles[i].vertices] = i;

  for (int length = 1; length <= max_length; ++length) {
    auto combos = combos_of_length(cycles, length);

    std::vector<bool> selected(combos.size());
    for (std::size_t i = 0; i < combos.size(); ++i) {
      std::vector<CycleImage> parts;
      parts.reserve(combos[i].cycles.size());
      for (const auto& c : combos[i].cycles) parts.push_back(images[cycle_index.at(c.vertices)]);
      selected[i] = is_viable(union_images(parts));
    }

    FindResult stage;
    auto yields = run_combos(combos, selected, machine, options);
    merge_yields(combos, std::move(yields), p, stage);
    sort_found(stage.found);

    result.truncated = result.truncated || stage.truncated;
    result.found.insert(result.found.end(), std::make_move_iterator(stage.found.begin()),
                        std::make_move_iterator(stage.found.end()));
  }
  return result;
}

}  // namespace permutiple
