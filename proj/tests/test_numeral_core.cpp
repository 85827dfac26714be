#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include <permutiple/digits.hpp>
#include <permutiple/format.hpp>

using namespace permutiple;

TEST_CASE("params validate the multiplier range") {
  CHECK_NOTHROW(Params(2, 4));
  CHECK_NOTHROW(Params(9, 10));
  CHECK_THROWS_AS(Params(1, 4), std::invalid_argument);   // n must exceed 1
  CHECK_THROWS_AS(Params(4, 4), std::invalid_argument);   // n must be below b
  CHECK_THROWS_AS(Params(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(Params(0, 2), std::invalid_argument);
}

TEST_CASE("digit strings store little-endian and display big-endian") {
  auto ds = DigitString::from_big_endian({8, 7, 9, 1, 2}, 10);
  CHECK(ds.digits == std::vector<int>{2, 1, 9, 7, 8});
  CHECK(ds.big_endian() == std::vector<int>{8, 7, 9, 1, 2});
  CHECK(ds.length() == 5);
  CHECK(ds.value() == 87912);
  CHECK(ds.digit_sum() == 27);
  CHECK(ds.sorted_digits() == std::vector<int>{1, 2, 7, 8, 9});
  CHECK_FALSE(ds.all_zero());
  CHECK(DigitString({0, 0, 0}, 4).all_zero());
  CHECK(render_digits(ds) == "(8,7,9,1,2)_10");
}

TEST_CASE("digit strings reject out-of-range digits") {
  CHECK_THROWS_AS(DigitString({0, 4}, 4), std::invalid_argument);
  CHECK_THROWS_AS(DigitString({-1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(DigitString::from_big_endian({10}, 10), std::invalid_argument);
}

TEST_CASE("value is exact up to 64 bits and throws past them") {
  // 18446744073709551615 = 2^64 - 1.
  std::vector<int> max_digits{1, 8, 4, 4, 6, 7, 4, 4, 0, 7, 3, 7, 0, 9, 5, 5, 1, 6, 1, 5};
  CHECK(DigitString::from_big_endian(max_digits, 10).value() == UINT64_MAX);
  std::vector<int> overflow{1, 8, 4, 4, 6, 7, 4, 4, 0, 7, 3, 7, 0, 9, 5, 5, 1, 6, 1, 6};
  CHECK_THROWS_AS(DigitString::from_big_endian(overflow, 10).value(), std::overflow_error);
}

TEST_CASE("big-endian ordering compares by displayed digits") {
  auto a = DigitString::from_big_endian({1, 2, 3}, 10);
  auto b = DigitString::from_big_endian({1, 3, 2}, 10);
  CHECK(big_endian_less(a, b));
  CHECK_FALSE(big_endian_less(b, a));
  CHECK_FALSE(big_endian_less(a, a));
}

TEST_CASE("permutations validate, invert, compose, and decompose into cycles") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);

  auto rho = Permutation::reversal(5);
  CHECK(rho.map == std::vector<int>{4, 3, 2, 1, 0});
  CHECK(rho.inverse() == rho);
  CHECK(compose(rho, rho) == Permutation::identity(5));
  CHECK(rho.cycles() == std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2}});
  CHECK(render_permutation(rho) == "(0,4)(1,3)(2)");

  // compose(pi, tau)(j) = pi(tau(j)).
  auto pi = Permutation::from_cycles({{0, 1}}, 3);
  auto tau = Permutation::from_cycles({{1, 2}}, 3);
  CHECK(compose(pi, tau).map == std::vector<int>{1, 2, 0});
  CHECK(compose(tau, pi).map == std::vector<int>{2, 0, 1});

  auto psi = Permutation::from_cycles({{0, 1, 2, 3, 4}}, 5);
  CHECK(psi(0) == 1);
  CHECK(psi(4) == 0);
  CHECK(compose(psi, psi.inverse()) == Permutation::identity(5));
}

TEST_CASE("carry run accepts the reversal equality 87912 = 4 * 21978") {
  auto prod = DigitString::from_big_endian({8, 7, 9, 1, 2}, 10);
  auto chk = compute_carries(prod, Permutation::reversal(5), Params(4, 10));
  REQUIRE(chk.accepted());
  CHECK(chk.carries.carries == std::vector<int>{0, 3, 3, 3, 0, 0});
  CHECK(chk.fail_index == -1);
  CHECK(render_carries(chk.carries) == "0,3,3,3,0,0");
}

TEST_CASE("carry run reports the failing step and reason") {
  // (3,4), digits (0,2) little-endian, identity: the last carry is 1, not 0.
  auto chk = compute_carries(DigitString({0, 2}, 4), Permutation::identity(2), Params(3, 4));
  CHECK(chk.status == CarryCheck::Status::nonzero_final_carry);
  CHECK(chk.fail_index == 2);
  CHECK_FALSE(chk.accepted());
  CHECK(std::string(chk.reason()) == "nonzero final carry");

  // (2,4), digits (1,1), identity: 2*1 - 1 = 1 does not divide by 4 at place 0.
  auto chk2 = compute_carries(DigitString({1, 1}, 4), Permutation::identity(2), Params(2, 4));
  CHECK(chk2.status == CarryCheck::Status::non_integral_step);
  CHECK(chk2.fail_index == 0);
  CHECK(chk2.carries.carries == std::vector<int>{0});
}

TEST_CASE("witnesses expose the multiplicand read through sigma") {
  auto prod = DigitString::from_big_endian({8, 7, 9, 1, 2}, 10);
  auto w = make_witness(prod, Permutation::reversal(5), Params(4, 10));
  REQUIRE(w.has_value());
  CHECK(w->multiplicand().big_endian() == std::vector<int>{2, 1, 9, 7, 8});
  CHECK(w->digits.value() == 4 * w->multiplicand().value());

  CHECK_FALSE(make_witness(prod, Permutation::identity(5), Params(4, 10)).has_value());
  CHECK_THROWS_AS(make_witness(DigitString({0, 1}, 4), Permutation::identity(2), Params(2, 6)),
                  std::invalid_argument);  // base mismatch
}

TEST_CASE("acceptance is exactly value equality, over random strings") {
  std::mt19937 rng(20260815);
  int accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    int b = 3 + static_cast<int>(rng() % 8);       // 3..10
    int n = 2 + static_cast<int>(rng() % (b - 2));  // 2..b-1
    int len = 1 + static_cast<int>(rng() % 6);
    std::vector<int> digits(len);
    for (int& d : digits) d = static_cast<int>(rng() % b);
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    Params p(n, b);
    DigitString ds(digits, b);
    Permutation sigma(perm);
    DigitString mult = PermutipleWitness{p, ds, sigma, {}}.multiplicand();
    bool equality = ds.value() == static_cast<std::uint64_t>(n) * mult.value();
    CHECK(verify(ds, sigma, p) == equality);
    if (equality) ++accepted;
  }
  CHECK(accepted > 0);  // the sample exercises both outcomes
}

TEST_CASE("digit-sum condition never rejects digits of a real permutiple") {
  // (2,6): multisets that admit length-5 permutiples pass.
  CHECK(digit_sum_filter({0, 1, 2, 3, 4}, Params(2, 6)));
  CHECK(digit_sum_filter({1, 2, 3, 4, 5}, Params(2, 6)));
  // Sum 6 is not divisible by b-1 = 5.
  CHECK_FALSE(digit_sum_filter({0, 1, 2, 3}, Params(2, 6)));
  // Divisible, but the implied carry sum exceeds (l-1)(n-1): one digit 5 at
  // (2,6) gives carry sum 1 > 0 with l = 1.
  CHECK_FALSE(digit_sum_filter({5}, Params(2, 6)));
  // 87912's digits at (4,10): (n-1)*27 = 81 = 9*9, carry sum 9 <= 4*3.
  CHECK(digit_sum_filter({1, 2, 7, 8, 9}, Params(4, 10)));
}

TEST_CASE("cycle-preserving repair splits cycles that revisit a digit value") {
  // Digits (little-endian) 2,1,2,0: positions 0 and 2 carry the same digit.
  // The 4-cycle (0,2,3,1) visits them both, so it splits at that pair into
  // (0)(2,3,1), keeping the multiset of digit pairs intact.
  DigitString ds({2, 1, 2, 0}, 4);
  auto sigma = Permutation::from_cycles({{0, 2, 3, 1}}, 4);
  auto repaired = make_cycle_preserving(sigma, ds);
  CHECK(repaired.cycles() == std::vector<std::vector<int>>{{0}, {1, 2, 3}});

  std::vector<std::pair<int, int>> before, after;
  for (int j = 0; j < 4; ++j) {
    before.emplace_back(ds.digits[j], ds.digits[sigma(j)]);
    after.emplace_back(ds.digits[j], ds.digits[repaired(j)]);
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  CHECK(before == after);

  // Already-clean permutations come back unchanged.
  DigitString distinct({0, 1, 2, 3}, 4);
  CHECK(make_cycle_preserving(sigma, distinct) == sigma);
}

TEST_CASE("cycle-preserving repair leaves every cycle over distinct digits") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int b = 3 + static_cast<int>(rng() % 6);
    int len = 2 + static_cast<int>(rng() % 6);
    std::vector<int> digits(len);
    for (int& d : digits) d = static_cast<int>(rng() % b);
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    DigitString ds(digits, b);
    auto repaired = make_cycle_preserving(Permutation(perm), ds);
    for (const auto& cyc : repaired.cycles()) {
      std::vector<int> seen;
      for (int pos : cyc) seen.push_back(digits[pos]);
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}

TEST_CASE("numeral parsing accepts both compact and tuple forms") {
  CHECK(parse_numeral("87912", 10).big_endian() == std::vector<int>{8, 7, 9, 1, 2});
  CHECK(parse_numeral("(10,3,5,1,8,6)", 12).big_endian() == std::vector<int>{10, 3, 5, 1, 8, 6});
  CHECK(parse_numeral("0", 4).digits == std::vector<int>{0});
  CHECK_THROWS_AS(parse_numeral("19", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_numeral("(12,1)", 12), std::invalid_argument);
  CHECK_THROWS_AS(parse_numeral("", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_numeral("(1,,2)", 10), std::invalid_argument);
}

TEST_CASE("pair-list parsing round-trips the string rendering") {
  auto pairs = parse_pairs("(1,3)(0,2)(2,0)(3,1)");
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0] == InputPair{1, 3});
  CHECK(pairs[3] == InputPair{3, 1});
  InputString s{pairs};
  CHECK(render_string(s) == "(1,3)(0,2)(2,0)(3,1)");
  CHECK_THROWS_AS(parse_pairs("(1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pairs("1,3"), std::invalid_argument);
}
