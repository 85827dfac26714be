// oracle.hpp
//
// Ground truth by exhaustion: multiply every candidate multiplicand the
// schoolbook way and compare digit multisets. Deliberately shares nothing
// with the graph and machine code beyond the digit types, so agreement with
// the search paths is meaningful evidence.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/params.hpp"

namespace permutiple::oracle {

struct OracleOptions {
  bool allow_boundary_zeros = true;     // include leading-zero representations
  std::uint64_t budget = 100'000'000;   // maximum multiplicand strings visited
  bool parallel = true;                 // OpenMP scan when built in
};

struct OracleResult {
  Params params;
  int length;
  // (product, multiplicand) pairs, sorted ascending; all-zero excluded.
  std::vector<std::pair<DigitString, DigitString>> pairs;
};

// Every length-digit permutiple by brute force. Throws std::runtime_error
// before scanning if b^length exceeds the budget.
OracleResult brute_force(const Params& p, int length, const OracleOptions& options = {});

struct CrossCheckReport {
  Params params;
  int length;
  std::size_t agreed = 0;
  std::vector<std::pair<DigitString, DigitString>> only_in_search;
  std::vector<std::pair<DigitString, DigitString>> only_in_oracle;
  double search_ms = 0.0;
  double oracle_ms = 0.0;

  bool ok() const { return only_in_search.empty() && only_in_oracle.empty(); }
};

// Runs find_all and brute_force at the same length and zero policy, compares
// the (product, multiplicand) sets, and reports discrepancies plus timings.
CrossCheckReport cross_check(const Params& p, int length, const OracleOptions& options = {});

}  // namespace permutiple::oracle
