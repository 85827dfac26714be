// classify.cpp
//
// Witness graphs, class membership, conjugacy partitioning, palintiples, and
// the carry-string descent to a smaller base.

#include "permutiple/classify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace permutiple {

PermutipleGraph graph_of(const PermutipleWitness& w) {
  PermutipleGraph g{w.digits.base, {}};
  for (int j = 0; j < w.digits.length(); ++j)
    g.edges.emplace(w.digits.digits[j], w.digits.digits[w.sigma(j)]);

  assert([&] {
    // Edges come from the mother graph, and the cycle-preserving repair of
    // sigma exhibits the cycle cover: each repaired cycle visits pairwise
    // distinct digits, so every touched vertex sits on a simple cycle.
    for (auto [d1, d2] : g.edges)
      if (!edge_allowed(d1, d2, w.params)) return false;
    Permutation repaired = make_cycle_preserving(w.sigma, w.digits);
    for (const auto& cyc : repaired.cycles()) {
      std::vector<int> digits;
      for (int pos : cyc) digits.push_back(w.digits.digits[pos]);
      auto sorted = digits;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    return true;
  }());
  return g;
}

bool in_class(const PermutipleWitness& candidate, const PermutipleGraph& class_graph) {
  if (candidate.digits.base != class_graph.base)
    throw std::invalid_argument("class graph and candidate use different bases");
  PermutipleGraph g = graph_of(candidate);
  return std::includes(class_graph.edges.begin(), class_graph.edges.end(), g.edges.begin(),
                       g.edges.end());
}

Permutation conjugacy_key(const Permutation& pi, const Permutation& tau) {
  return compose(compose(pi, tau), pi.inverse());
}

namespace {

// All bijections f with ref[f(j)] == img[j]; both vectors must hold the same
// digit multiset. Count is the product of factorials of digit multiplicities.
std::vector<Permutation> digit_matchings(const std::vector<int>& img, const std::vector<int>& ref) {
  const int len = static_cast<int>(img.size());
  std::map<int, std::vector<int>> ref_slots;
  for (int i = 0; i < len; ++i) ref_slots[ref[i]].push_back(i);

  std::size_t total = 1;
  for (auto& [digit, slots] : ref_slots) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= slots.size(); ++i) f *= i;
    total *= f;
    if (total > 1'000'000)
      throw std::runtime_error("too many digit labelings to enumerate");
  }

  std::vector<Permutation> out;
  std::vector<int> current(len, -1);
  auto values = [&] {
    std::vector<int> v;
    for (auto& [digit, slots] : ref_slots) v.push_back(digit);
    return v;
  }();

  auto rec = [&](auto&& self, std::size_t vi) -> void {
    if (vi == values.size()) {
      out.push_back(Permutation(current));
      return;
    }
    int digit = values[vi];
    std::vector<int> img_positions;
    for (int j = 0; j < len; ++j)
      if (img[j] == digit) img_positions.push_back(j);
    std::vector<int> slots = ref_slots[digit];  // sorted; next_permutation covers all orders
    assert(img_positions.size() == slots.size());  // equal digit multisets
    do {
      for (std::size_t i = 0; i < img_positions.size(); ++i) current[img_positions[i]] = slots[i];
      self(self, vi + 1);
    } while (std::next_permutation(slots.begin(), slots.end()));
  };
  rec(rec, 0);
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const PermutipleWitness& base,
                                              const SearchOptions& options) {
  const Params& p = base.params;
  const std::vector<int> multiset = base.digits.sorted_digits();

  FindResult all = find_all(p, base.digits.length(), options);
  std::vector<FoundPermutiple> members;
  for (auto& f : all.found)
    if (f.witness.digits.sorted_digits() == multiset) members.push_back(std::move(f));

  // Keys are conjugations pi * tau * pi^{-1} relative to the base digit tuple.
  // Repeated digits admit several labelings; any shared key joins two members,
  // and a member carrying several keys joins those keys' groups.
  std::vector<std::vector<Permutation>> member_keys(members.size());
  std::map<Permutation, std::size_t> key_ids;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    const auto& product = members[mi].witness.digits.digits;
    const auto mult = members[mi].witness.multiplicand().digits;
    for (const auto& pi : digit_matchings(product, base.digits.digits))
      for (const auto& tau : digit_matchings(mult, product)) {
        Permutation key = conjugacy_key(pi, tau);
        key_ids.emplace(key, key_ids.size());
        member_keys[mi].push_back(std::move(key));
      }
    std::sort(member_keys[mi].begin(), member_keys[mi].end());
    member_keys[mi].erase(std::unique(member_keys[mi].begin(), member_keys[mi].end()),
                          member_keys[mi].end());
  }

  DisjointSets sets(members.size() + key_ids.size());
  for (std::size_t mi = 0; mi < members.size(); ++mi)
    for (const auto& key : member_keys[mi]) sets.unite(mi, members.size() + key_ids.at(key));

  std::map<std::size_t, ConjugacyClass> classes;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    auto& cls = classes[sets.find(mi)];
    cls.members.push_back(std::move(members[mi]));
    cls.keys.insert(cls.keys.end(), member_keys[mi].begin(), member_keys[mi].end());
  }

  std::vector<ConjugacyClass> out;
  for (auto& [root, cls] : classes) {
    std::sort(cls.keys.begin(), cls.keys.end());
    cls.keys.erase(std::unique(cls.keys.begin(), cls.keys.end()), cls.keys.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return big_endian_less(a.members.front().witness.digits, b.members.front().witness.digits);
  });
  return out;
}

FindResult palintiples(const Params& p, int max_length, const SearchOptions& options) {
  MotherGraph m = build_mother_graph(p);
  std::vector<DigitCycle> short_cycles;
  for (auto& c : enumerate_cycles(m))
    if (c.length() <= 2) short_cycles.push_back(std::move(c));

  FindResult swept = generate_from_cycles(p, short_cycles, max_length, options);

  // 1-/2-cycle unions admit non-reversal orderings too; keep only genuine
  // reversals, which read palindromically as flattened digit sequences.
  FindResult result;
  result.truncated = swept.truncated;
  for (auto& f : swept.found) {
    auto product = f.witness.digits.digits;
    auto mult = f.witness.multiplicand().digits;
    std::reverse(mult.begin(), mult.end());
    if (product != mult) continue;
    assert([&] {
      std::vector<int> flat;
      for (const auto& in : f.string.inputs) {
        flat.push_back(in.first);
        flat.push_back(in.second);
      }
      std::vector<int> rev(flat.rbegin(), flat.rend());
      return flat == rev;
    }());
    result.found.push_back(std::move(f));
  }
  return result;
}

DerivedCheck is_derived(const PermutipleWitness& w) {
  const int ell = w.digits.length();
  if (ell < 2) throw std::invalid_argument("derived check needs a witness of at least 2 digits");

  const int inner_base = w.params.n;
  // Carry string (c_k,...,c_1), little-endian c_1 first; k = ell-1 digits.
  std::vector<int> carry_digits(w.carries.carries.begin() + 1, w.carries.carries.end() - 1);
  DigitString inner_product(std::move(carry_digits), inner_base);

  DerivedCheck check;
  if (inner_product.all_zero()) return check;

  const std::uint64_t value = inner_product.value();
  const int k = inner_product.length();

  // Digit condition at multiplier m: value divides by m and the quotient,
  // written with k base-n digits, uses exactly the same digit multiset.
  auto quotient_string = [&](int m) -> std::optional<DigitString> {
    if (value % m != 0) return std::nullopt;
    std::uint64_t q = value / m;
    std::vector<int> qd(k, 0);
    for (int j = 0; j < k; ++j) {
      qd[j] = static_cast<int>(q % inner_base);
      q /= inner_base;
    }
    if (q != 0) return std::nullopt;
    DigitString qs(std::move(qd), inner_base);
    if (qs.sorted_digits() != inner_product.sorted_digits()) return std::nullopt;
    return qs;
  };

  for (int m = 2; m < w.params.n; ++m) {
    auto qs = quotient_string(m);
    if (!qs) continue;
    // Recover sigma by greedy matching, as for strings.
    std::vector<int> map(k, -1);
    std::vector<bool> used(k, false);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (!used[i] && inner_product.digits[i] == qs->digits[j]) {
          map[j] = i;
          used[i] = true;
          break;
        }
    Permutation sigma = make_cycle_preserving(Permutation(std::move(map)), inner_product);
    auto witness = make_witness(inner_product, sigma, Params(m, inner_base));
    assert(witness.has_value());  // value equality plus matching digits
    check.derived = DerivedPermutiple{m, std::move(*witness)};
    break;
  }
  check.near_miss_m_equals_n = quotient_string(w.params.n).has_value();
  return check;
}

}  // namespace permutiple
