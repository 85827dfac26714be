// digits.cpp
//
// Numeral core: digit strings, permutations, the carry recurrence, the
// digit-sum necessary condition, and cycle-preserving repair of a permutation.

#include "permutiple/digits.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace permutiple {

static void check_digits(const std::vector<int>& digits, int base) {
  if (base < 2) throw std::invalid_argument("digit string base must be at least 2");
  for (int d : digits)
    if (d < 0 || d >= base)
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base));
}

DigitString::DigitString(std::vector<int> little_endian, int base_)
    : digits(std::move(little_endian)), base(base_) {
  check_digits(digits, base);
}

DigitString DigitString::from_big_endian(std::vector<int> big_endian, int base_) {
  std::reverse(big_endian.begin(), big_endian.end());
  return DigitString(std::move(big_endian), base_);
}

std::vector<int> DigitString::big_endian() const {
  std::vector<int> out(digits.rbegin(), digits.rend());
  return out;
}

std::vector<int> DigitString::sorted_digits() const {
  std::vector<int> out = digits;
  std::sort(out.begin(), out.end());
  return out;
}

bool DigitString::all_zero() const {
  return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

int DigitString::digit_sum() const {
  return std::accumulate(digits.begin(), digits.end(), 0);
}

std::uint64_t DigitString::value() const {
  std::uint64_t acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    unsigned __int128 next = static_cast<unsigned __int128>(acc) * base + *it;
    if (next > UINT64_MAX) throw std::overflow_error("digit string value exceeds 64 bits");
    acc = static_cast<std::uint64_t>(next);
  }
  return acc;
}

bool big_endian_less(const DigitString& a, const DigitString& b) {
  auto ra = a.big_endian();
  auto rb = b.big_endian();
  return ra < rb;
}

Permutation::Permutation(std::vector<int> m) : map(std::move(m)) {
  std::vector<bool> seen(map.size(), false);
  for (int v : map) {
    if (v < 0 || v >= size() || seen[v])
      throw std::invalid_argument("permutation map is not a bijection on positions");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> m(size);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::reversal(int size) {
  std::vector<int> m(size);
  for (int j = 0; j < size; ++j) m[j] = size - 1 - j;
  return Permutation(std::move(m));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int size) {
  std::vector<int> m(size);
  std::iota(m.begin(), m.end(), 0);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= size) throw std::invalid_argument("cycle position out of range");
      m[from] = to;
    }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(map.size());
  for (int j = 0; j < size(); ++j) m[map[j]] = j;
  return Permutation(std::move(m));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(map.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int j = start;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = map[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;  // starts ascend, so each cycle already leads with its least element
}

Permutation compose(const Permutation& pi, const Permutation& tau) {
  if (pi.size() != tau.size()) throw std::invalid_argument("composing permutations of unequal size");
  std::vector<int> m(pi.size());
  for (int j = 0; j < pi.size(); ++j) m[j] = pi(tau(j));
  return Permutation(std::move(m));
}

const char* CarryCheck::reason() const {
  switch (status) {
    case Status::accepted: return "accepted";
    case Status::non_integral_step: return "non-integral carry step";
    case Status::carry_out_of_range: return "carry out of range";
    case Status::nonzero_final_carry: return "nonzero final carry";
  }
  return "unknown";
}

CarryCheck compute_carries(const DigitString& ds, const Permutation& sigma, const Params& p) {
  if (sigma.size() != ds.length())
    throw std::invalid_argument("permutation size does not match digit string length");
  check_digits(ds.digits, p.b);

  CarryCheck result;
  result.carries.carries.push_back(0);  // c_0 = 0
  int c = 0;
  for (int j = 0; j < ds.length(); ++j) {
    int t = p.n * ds.digits[sigma(j)] - ds.digits[j] + c;
    if (t % p.b != 0 || t < 0) {
      // t < 0 and divisible would mean a negative carry; fold it in here.
      result.status = (t % p.b != 0) ? CarryCheck::Status::non_integral_step
                                     : CarryCheck::Status::carry_out_of_range;
      result.fail_index = j;
      return result;
    }
    c = t / p.b;
    if (c > p.n - 1) {
      result.status = CarryCheck::Status::carry_out_of_range;
      result.fail_index = j;
      return result;
    }
    result.carries.carries.push_back(c);
  }
  if (c != 0) {
    result.status = CarryCheck::Status::nonzero_final_carry;
    result.fail_index = ds.length();
    return result;
  }
  return result;
}

bool verify(const DigitString& ds, const Permutation& sigma, const Params& p) {
  return compute_carries(ds, sigma, p).accepted();
}

DigitString PermutipleWitness::multiplicand() const {
  std::vector<int> m(digits.digits.size());
  for (int j = 0; j < digits.length(); ++j) m[j] = digits.digits[sigma(j)];
  return DigitString(std::move(m), digits.base);
}

std::optional<PermutipleWitness> make_witness(const DigitString& ds, const Permutation& sigma,
                                              const Params& p) {
  if (ds.base != p.b) throw std::invalid_argument("digit string base does not match params");
  CarryCheck check = compute_carries(ds, sigma, p);
  if (!check) return std::nullopt;
  return PermutipleWitness{p, ds, sigma, std::move(check.carries)};
}

bool digit_sum_filter(const std::vector<int>& digit_multiset, const Params& p) {
  check_digits(digit_multiset, p.b);
  long long sum = std::accumulate(digit_multiset.begin(), digit_multiset.end(), 0LL);
  long long lhs = static_cast<long long>(p.n - 1) * sum;
  if (lhs % (p.b - 1) != 0) return false;
  long long carry_sum = lhs / (p.b - 1);
  long long len = static_cast<long long>(digit_multiset.size());
  return carry_sum >= 0 && carry_sum <= (len - 1) * (p.n - 1);
}

Permutation make_cycle_preserving(const Permutation& sigma, const DigitString& ds) {
  if (sigma.size() != ds.length())
    throw std::invalid_argument("permutation size does not match digit string length");

  auto cycles = sigma.cycles();
  const auto& d = ds.digits;

  // Splitting at positions with equal digits keeps the digit-pair multiset;
  // repeat until every cycle's digits are pairwise distinct.
  bool changed = true;
  while (changed) {
    changed = false;
    // Keep canonical order: each cycle led by its least element, list sorted.
    for (auto& cyc : cycles) {
      auto least = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), least, cyc.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    for (std::size_t ci = 0; ci < cycles.size() && !changed; ++ci) {
      auto& cyc = cycles[ci];
      const int m = static_cast<int>(cyc.size());
      for (int pp = 0; pp < m && !changed; ++pp)
        for (int q = pp + 1; q < m; ++q)
          if (d[cyc[pp]] == d[cyc[q]]) {
            std::vector<int> first(cyc.begin(), cyc.begin() + pp);
            first.insert(first.end(), cyc.begin() + q, cyc.end());
            std::vector<int> second(cyc.begin() + pp, cyc.begin() + q);
            cyc = std::move(first);
            cycles.push_back(std::move(second));
            changed = true;
            break;
          }
    }
  }

  std::vector<int> m(d.size());
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) m[cyc[i]] = cyc[(i + 1) % cyc.size()];
  Permutation repaired{std::move(m)};

  // Same digit-pair multiset as the input permutation, by construction.
  assert(([&] {
    std::vector<std::pair<int, int>> before, after;
    for (int j = 0; j < ds.length(); ++j) {
      before.emplace_back(d[j], d[sigma(j)]);
      after.emplace_back(d[j], d[repaired(j)]);
    }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    return before == after;
  }()));
  return repaired;
}

}  // namespace permutiple
