// digits.hpp
//
// Digit strings, position permutations, and the carry recurrence that decides
// whether (d_k,...,d_0)_b equals n * (d_sigma(k),...,d_sigma(0))_b.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permutiple/params.hpp"

namespace permutiple {

// Digit string stored little-endian: digits[j] is the coefficient of base^j.
// Display is big-endian everywhere; only the internal order is little-endian.
struct DigitString {
  std::vector<int> digits;
  int base = 10;

  DigitString() = default;
  DigitString(std::vector<int> little_endian, int base_);
  static DigitString from_big_endian(std::vector<int> big_endian, int base_);

  int length() const { return static_cast<int>(digits.size()); }
  std::vector<int> big_endian() const;
  std::vector<int> sorted_digits() const;  // the digit multiset
  bool all_zero() const;
  int digit_sum() const;

  // Exact value sum d_j * base^j. Throws std::overflow_error past 64 bits;
  // anything that fits is exact. Only the desk-scale oracle and tests need it.
  std::uint64_t value() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

// Compares display (big-endian) order; for equal lengths this is numeric order.
bool big_endian_less(const DigitString& a, const DigitString& b);

// Permutation of positions {0,...,k}; map[j] = sigma(j).
struct Permutation {
  std::vector<int> map;

  Permutation() = default;
  explicit Permutation(std::vector<int> m);  // validates bijection
  static Permutation identity(int size);
  static Permutation reversal(int size);
  // Cycles use the usual notation: (a0,a1,...) sends a0 -> a1 -> ... -> a0.
  // Positions omitted from every cycle are fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int size);

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int j) const { return map[j]; }
  Permutation inverse() const;

  // Disjoint cycle decomposition, fixed points included; each cycle starts at
  // its least element and cycles are ordered by least element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Function composition: compose(pi, tau)(j) = pi(tau(j)).
Permutation compose(const Permutation& pi, const Permutation& tau);

// c_0, ..., c_l for an l-digit check; carries[j] = c_j.
struct CarrySequence {
  std::vector<int> carries;
  friend bool operator==(const CarrySequence&, const CarrySequence&) = default;
};

// Outcome of running the carry recurrence b*c_{j+1} - c_j = n*d_{sigma(j)} - d_j
// with c_0 = 0. Acceptance means every step divided exactly, every carry landed
// in [0, n-1], and c_l = 0.
struct CarryCheck {
  enum class Status { accepted, non_integral_step, carry_out_of_range, nonzero_final_carry };

  Status status = Status::accepted;
  int fail_index = -1;     // step j at which the recurrence failed; -1 if accepted
  CarrySequence carries;   // full sequence when accepted, prefix otherwise

  bool accepted() const { return status == Status::accepted; }
  explicit operator bool() const { return accepted(); }
  const char* reason() const;
};

CarryCheck compute_carries(const DigitString& ds, const Permutation& sigma, const Params& p);
bool verify(const DigitString& ds, const Permutation& sigma, const Params& p);

// A verified permutiple: digits are the product side, digits[sigma(j)] is the
// multiplicand digit at place j.
struct PermutipleWitness {
  Params params;
  DigitString digits;
  Permutation sigma;
  CarrySequence carries;

  DigitString multiplicand() const;
};

std::optional<PermutipleWitness> make_witness(const DigitString& ds, const Permutation& sigma,
                                              const Params& p);

// Necessary condition on a digit multiset: (n-1) * digit sum must be (b-1)
// times a feasible carry sum, i.e. divisible with quotient in
// [0, (l-1)*(n-1)]. Never rejects a real permutiple's digits.
bool digit_sum_filter(const std::vector<int>& digit_multiset, const Params& p);

// Rewrites sigma so that every cycle visits pairwise distinct digits of ds,
// keeping the multiset of digit pairs (d_j, d_sigma(j)) intact. Splits at the
// first repeated-digit pair, scanning cycles in ascending order of least
// element; already-clean permutations come back unchanged.
Permutation make_cycle_preserving(const Permutation& sigma, const DigitString& ds);

}  // namespace permutiple
