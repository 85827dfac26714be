// cross_check.cpp
//
// The bridge between the independent oracle and the graph search: run both at
// the same configuration and diff the (product, multiplicand) sets.

#include <algorithm>
#include <chrono>

#include "permutiple/enumerate.hpp"
#include "permutiple/oracle.hpp"

namespace permutiple::oracle {

CrossCheckReport cross_check(const Params& p, int length, const OracleOptions& options) {
  using clock = std::chrono::steady_clock;
  CrossCheckReport report{p, length, 0, {}, {}, 0.0, 0.0};

  SearchOptions search_options;
  search_options.allow_boundary_zeros = options.allow_boundary_zeros;
  search_options.parallel = options.parallel;

  auto t0 = clock::now();
  FindResult found = find_all(p, length, search_options);
  auto t1 = clock::now();
  OracleResult truth = brute_force(p, length, options);
  auto t2 = clock::now();

  report.search_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

  auto pair_of = [](const FoundPermutiple& f) {
    return std::make_pair(f.witness.digits, f.witness.multiplicand());
  };
  auto less = [](const auto& a, const auto& b) {
    if (a.first.digits != b.first.digits) return a.first.digits < b.first.digits;
    return a.second.digits < b.second.digits;
  };

  std::vector<std::pair<DigitString, DigitString>> searched;
  searched.reserve(found.found.size());
  for (const auto& f : found.found) searched.push_back(pair_of(f));
  std::sort(searched.begin(), searched.end(), less);

  std::vector<std::pair<DigitString, DigitString>> truthed = truth.pairs;
  std::sort(truthed.begin(), truthed.end(), less);

  std::set_difference(searched.begin(), searched.end(), truthed.begin(), truthed.end(),
                      std::back_inserter(report.only_in_search), less);
  std::set_difference(truthed.begin(), truthed.end(), searched.begin(), searched.end(),
                      std::back_inserter(report.only_in_oracle), less);
  report.agreed = searched.size() - report.only_in_search.size();
  return report;
}

}  // namespace permutiple::oracle
