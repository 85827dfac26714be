// oracle.cpp
//
// Exhaustive ground truth. Scans every length-digit multiplicand, multiplies
// by n the schoolbook way, and keeps digit-multiset matches. No graph or
// machine code on this path; the scan splits into index ranges whose results
// concatenate in range order, so parallel output is identical to serial.

#include "permutiple/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permutiple::oracle {

namespace {

struct ScanRange {
  std::uint64_t begin, end;
};

// Candidates in [range.begin, range.end), visited in increasing index order;
// the index is the multiplicand's value, so results emerge sorted.
void scan(const Params& p, int length, const OracleOptions& options, ScanRange range,
          std::vector<std::pair<DigitString, DigitString>>& out) {
  const int b = p.b, n = p.n;
  std::vector<int> mult(length, 0);
  {
    std::uint64_t idx = range.begin;
    for (int j = 0; j < length; ++j) {
      mult[j] = static_cast<int>(idx % b);
      idx /= b;
    }
  }

  std::vector<int> product(length, 0);
  std::vector<int> mult_count(b, 0), product_count(b, 0);
  for (int d : mult) ++mult_count[d];

  for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
    if (idx != range.begin) {
      // Odometer step keeps the digit counts current.
      for (int j = 0; j < length; ++j) {
        --mult_count[mult[j]];
        if (++mult[j] < b) {
          ++mult_count[mult[j]];
          break;
        }
        mult[j] = 0;
        ++mult_count[0];
      }
    }
    if (idx == 0) continue;  // the all-zero string is the trivial case
    if (!options.allow_boundary_zeros && mult[length - 1] == 0) continue;

    int carry = 0;
    bool fits = true;
    std::fill(product_count.begin(), product_count.end(), 0);
    for (int j = 0; j < length; ++j) {
      int t = n * mult[j] + carry;
      product[j] = t % b;
      ++product_count[product[j]];
      carry = t / b;
    }
    fits = (carry == 0);
    if (!fits) continue;
    if (!options.allow_boundary_zeros && product[length - 1] == 0) continue;
    if (product_count != mult_count) continue;

    out.emplace_back(DigitString(product, b), DigitString(mult, b));
  }
}

std::uint64_t checked_pow(int base, int exp, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < exp; ++i) {
    if (total > budget / base)
      throw std::runtime_error("oracle budget exceeded: b^length > " + std::to_string(budget));
    total *= base;
  }
  return total;
}

}  // namespace

OracleResult brute_force(const Params& p, int length, const OracleOptions& options) {
  if (length <= 0) throw std::invalid_argument("oracle length must be positive");
  const std::uint64_t total = checked_pow(p.b, length, options.budget);

  OracleResult result{p, length, {}};

#ifdef _OPENMP
  if (options.parallel) {
    const int chunks = std::max(1, omp_get_max_threads() * 4);
    const std::uint64_t step = (total + chunks - 1) / chunks;
    std::vector<std::vector<std::pair<DigitString, DigitString>>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
      ScanRange range{c * step, std::min(total, (c + 1) * step)};
      if (range.begin < range.end) scan(p, length, options, range, parts[c]);
    }
    for (auto& part : parts)
      result.pairs.insert(result.pairs.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
    return result;
  }
#endif
  scan(p, length, options, ScanRange{0, total}, result.pairs);
  return result;
}

}  // namespace permutiple::oracle
