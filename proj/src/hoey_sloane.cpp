// hoey_sloane.cpp
//
// Machine construction, cycle images, viability, and the walk enumeration
// that turns edge multisets into permutiple strings.

#include "permutiple/hoey_sloane.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>

namespace permutiple {

int input_source_state(const InputPair& input, const Params& p) {
  return least_residue(input.first + static_cast<long long>(p.b - p.n) * input.second, p.b);
}

std::optional<int> transition(int state, const InputPair& input, const Params& p) {
  if (state < 0 || state >= p.n) return std::nullopt;
  if (!edge_allowed(input.first, input.second, p)) return std::nullopt;
  if (input_source_state(input, p) != state) return std::nullopt;  // would not divide exactly
  int t = p.n * input.second - input.first + state;
  assert(t >= 0 && t % p.b == 0);
  int next = t / p.b;
  assert(next >= 0 && next <= p.n - 1);  // the bound argument on the numerator
  return next;
}

std::vector<InputPair> HoeySloaneGraph::inputs_at(int c1) const {
  std::vector<InputPair> out;
  for (const auto& [key, inputs] : labels)
    if (key.first == c1) out.insert(out.end(), inputs.begin(), inputs.end());
  std::sort(out.begin(), out.end());
  return out;
}

HoeySloaneGraph build_machine(const Params& p) {
  HoeySloaneGraph g{p, {}};
  MotherGraph m = build_mother_graph(p);
  for (auto [d1, d2] : m.edges()) {
    int c1 = input_source_state({d1, d2}, p);
    auto c2 = transition(c1, {d1, d2}, p);
    assert(c2.has_value());
    g.labels[{c1, *c2}].emplace_back(d1, d2);
  }
  for (auto& [key, inputs] : g.labels) std::sort(inputs.begin(), inputs.end());
  return g;
}

std::set<int> CycleImage::states() const {
  std::set<int> out;
  for (const auto& [key, inputs] : labels) {
    out.insert(key.first);
    out.insert(key.second);
  }
  return out;
}

CycleImage cycle_image(const DigitCycle& cycle, const HoeySloaneGraph& machine) {
  CycleImage image{machine.params, {}};
  for (auto [d1, d2] : cycle.edges()) {
    const Params& p = machine.params;
    int c1 = input_source_state({d1, d2}, p);
    auto c2 = transition(c1, {d1, d2}, p);
    assert(c2.has_value());  // cycle edges are mother-graph edges
    image.labels[{c1, *c2}].emplace_back(d1, d2);
  }
  for (auto& [key, inputs] : image.labels) {
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  }
  return image;
}

CycleImage union_images(const std::vector<CycleImage>& images) {
  if (images.empty()) return CycleImage{Params(2, 3), {}};
  CycleImage merged{images.front().params, {}};
  for (const auto& img : images)
    for (const auto& [key, inputs] : img.labels) {
      auto& slot = merged.labels[key];
      slot.insert(slot.end(), inputs.begin(), inputs.end());
    }
  for (auto& [key, inputs] : merged.labels) {
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  }
  return merged;
}

bool is_viable(const CycleImage& image) {
  auto st = image.states();
  if (st.empty() || !st.count(0)) return false;

  // Strong connectivity over the touched states: forward and backward
  // reachability from state 0 must each cover everything.
  auto reaches = [&](bool forward) {
    std::set<int> seen{0};
    std::vector<int> work{0};
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      for (const auto& [key, inputs] : image.labels) {
        int from = forward ? key.first : key.second;
        int to = forward ? key.second : key.first;
        if (from == v && !seen.count(to)) {
          seen.insert(to);
          work.push_back(to);
        }
      }
    }
    return seen;
  };
  return reaches(true) == st && reaches(false) == st;
}

std::vector<int> InputString::product_digits() const {
  std::vector<int> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) out.push_back(in.first);
  return out;
}

std::vector<int> InputString::multiplicand_digits() const {
  std::vector<int> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) out.push_back(in.second);
  return out;
}

namespace {

// Backtracking walk enumeration over the distinct inputs with multiplicities.
// Identical inputs are interchangeable, so iterating distinct inputs emits
// each ordering exactly once. A feasibility memo keyed on (state, remaining
// counts) prunes subtrees with no completion.
struct WalkEnumerator {
  Params p;
  std::vector<InputPair> distinct;
  std::vector<int> counts;
  std::vector<int> src, dst;
  StringOptions options;

  std::vector<InputPair> current;
  std::vector<InputString> found;
  bool truncated = false;
  std::unordered_map<std::string, bool> feasible;

  explicit WalkEnumerator(const Params& params) : p(params) {}

  std::string key(int state) const {
    std::string k(1, static_cast<char>(state));
    for (int c : counts) k.push_back(static_cast<char>(c));
    return k;
  }

  bool remaining() const {
    for (int c : counts)
      if (c > 0) return true;
    return false;
  }

  bool can_complete(int state) {
    if (!remaining()) return state == 0;
    auto k = key(state);
    auto it = feasible.find(k);
    if (it != feasible.end()) return it->second;
    bool ok = false;
    for (std::size_t i = 0; i < distinct.size() && !ok; ++i) {
      if (counts[i] == 0 || src[i] != state) continue;
      --counts[i];
      ok = can_complete(dst[i]);
      ++counts[i];
    }
    feasible.emplace(std::move(k), ok);
    return ok;
  }

  void step(int state) {
    if (truncated || !can_complete(state)) return;
    if (!remaining()) {
      if (!options.allow_boundary_zeros &&
          (current.back().first == 0 || current.back().second == 0))
        return;
      if (found.size() >= options.cap) {
        truncated = true;
        return;
      }
      found.push_back(InputString{current});
      return;
    }
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      if (truncated) return;
      if (counts[i] == 0 || src[i] != state) continue;
      --counts[i];
      current.push_back(distinct[i]);
      step(dst[i]);
      current.pop_back();
      ++counts[i];
    }
  }
};

}  // namespace

StringEnumeration enumerate_strings(const std::vector<InputPair>& multiset,
                                    const HoeySloaneGraph& machine,
                                    const StringOptions& options) {
  StringEnumeration result;
  if (multiset.empty()) return result;

  const Params& p = machine.params;
  WalkEnumerator walker(p);
  walker.options = options;

  std::vector<InputPair> sorted = multiset;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& input : sorted) {
    if (!edge_allowed(input.first, input.second, p))
      throw std::invalid_argument("input (" + std::to_string(input.first) + "," +
                                  std::to_string(input.second) +
                                  ") is not a mother-graph edge");
    if (!walker.distinct.empty() && walker.distinct.back() == input) {
      ++walker.counts.back();
      continue;
    }
    walker.distinct.push_back(input);
    walker.counts.push_back(1);
    walker.src.push_back(input_source_state(input, p));
    walker.dst.push_back(*transition(walker.src.back(), input, p));
  }

  walker.step(0);
  result.strings = std::move(walker.found);
  result.truncated = walker.truncated;

  std::sort(result.strings.begin(), result.strings.end(),
            [](const InputString& a, const InputString& b) {
              auto pa = a.product_digits(), pb = b.product_digits();
              std::reverse(pa.begin(), pa.end());
              std::reverse(pb.begin(), pb.end());
              if (pa != pb) return pa < pb;
              auto ma = a.multiplicand_digits(), mb = b.multiplicand_digits();
              std::reverse(ma.begin(), ma.end());
              std::reverse(mb.begin(), mb.end());
              return ma < mb;
            });
  return result;
}

std::optional<PermutipleWitness> string_to_witness(const InputString& s, const Params& p) {
  if (s.inputs.empty()) return std::nullopt;
  DigitString product(s.product_digits(), p.b);
  std::vector<int> mult = s.multiplicand_digits();

  if (product.sorted_digits() != DigitString(mult, p.b).sorted_digits()) return std::nullopt;

  // Greedy deterministic matching: place j of the multiplicand takes the
  // smallest unused product position holding that digit.
  const int len = product.length();
  std::vector<int> map(len, -1);
  std::vector<bool> used(len, false);
  for (int j = 0; j < len; ++j)
    for (int i = 0; i < len; ++i)
      if (!used[i] && product.digits[i] == mult[j]) {
        map[j] = i;
        used[i] = true;
        break;
      }
  Permutation sigma = make_cycle_preserving(Permutation(std::move(map)), product);
  return make_witness(product, sigma, p);
}

}  // namespace permutiple
