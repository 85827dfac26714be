// params.hpp
//
// Multiplier/base parameter pair shared by every construction in the library.

#pragma once

#include <stdexcept>
#include <string>

namespace permutiple {

// We look for base-b numbers equal to n times a rearrangement of their own
// digits. Everything downstream assumes 1 < n < b, so construction rejects
// anything else.
struct Params {
  int n;
  int b;

  Params(int n_, int b_) : n(n_), b(b_) {
    if (b_ < 3 || n_ <= 1 || n_ >= b_)
      throw std::invalid_argument("params require 1 < n < b, got n=" + std::to_string(n_) +
                                  " b=" + std::to_string(b_));
  }

  friend bool operator==(const Params&, const Params&) = default;
};

// Least non-negative residue of x modulo b; x may be negative.
inline int least_residue(long long x, int b) {
  long long r = x % b;
  return static_cast<int>(r < 0 ? r + b : r);
}

}  // namespace permutiple
