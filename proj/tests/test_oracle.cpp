#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <permutiple/enumerate.hpp>
#include <permutiple/oracle.hpp>

using namespace permutiple;

namespace {

using Row = std::pair<std::vector<int>, std::vector<int>>;

Row row(const std::vector<int>& prod, const std::vector<int>& mult) { return {prod, mult}; }

std::set<Row> rows_of(const oracle::OracleResult& r) {
  std::set<Row> out;
  for (const auto& [p, m] : r.pairs) out.insert({p.big_endian(), m.big_endian()});
  return out;
}

std::set<Row> rows_of(const FindResult& r) {
  std::set<Row> out;
  for (const auto& f : r.found)
    out.insert({f.witness.digits.big_endian(), f.witness.multiplicand().big_endian()});
  return out;
}

// The defining property, checked the slowest possible way: try every
// permutation of places against the carry recurrence.
std::set<Row> by_all_permutations(const Params& p, int len, bool allow_boundary_zeros) {
  std::set<Row> out;
  std::vector<int> digits(len, 0);
  std::vector<int> perm(len);
  auto bump = [&] {
    for (int j = 0; j < len; ++j) {
      if (++digits[j] < p.b) return true;
      digits[j] = 0;
    }
    return false;
  };
  do {
    DigitString ds(digits, p.b);
    if (ds.all_zero()) continue;
    for (int j = 0; j < len; ++j) perm[j] = j;
    do {
      Permutation sigma(perm);
      if (!verify(ds, sigma, p)) continue;
      std::vector<int> mult(len);
      for (int j = 0; j < len; ++j) mult[j] = digits[sigma(j)];
      DigitString ms(mult, p.b);
      if (!allow_boundary_zeros && (digits[len - 1] == 0 || mult[len - 1] == 0)) continue;
      out.insert({ds.big_endian(), ms.big_endian()});
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (bump());
  return out;
}

}  // namespace

TEST_CASE("the exhaustive scan at (2,6) length 5 finds the same 40 equalities") {
  auto res = oracle::brute_force(Params(2, 6), 5);
  CHECK(res.pairs.size() == 40);
  auto rows = rows_of(res);
  CHECK(rows == rows_of(find_all(Params(2, 6), 5)));
  CHECK(rows.count(row({4, 2, 1, 3, 0}, {2, 1, 0, 4, 3})) == 1);
  CHECK(rows.count(row({2, 5, 1, 3, 4}, {1, 2, 3, 4, 5})) == 1);
  for (const auto& [p, m] : res.pairs) {
    CHECK(p.base == 6);
    CHECK(p.value() == 2 * m.value());
    CHECK(p.sorted_digits() == m.sorted_digits());
  }
}

TEST_CASE("short (2,6) lengths are empty; the all-zero string never counts") {
  CHECK(oracle::brute_force(Params(2, 6), 1).pairs.empty());
  CHECK(oracle::brute_force(Params(2, 6), 2).pairs.empty());
  CHECK(oracle::brute_force(Params(2, 6), 3).pairs.empty());
}

TEST_CASE("six-digit (2,4) scan covers the doubled 3-cycle family") {
  auto rows = rows_of(oracle::brute_force(Params(2, 4), 6));
  CHECK(rows.count(row({1, 0, 2, 1, 0, 2}, {0, 2, 1, 0, 2, 1})) == 1);
  CHECK(rows.count(row({2, 1, 0, 2, 1, 0}, {1, 0, 2, 1, 0, 2})) == 1);
  CHECK(rows.count(row({2, 1, 0, 1, 0, 2}, {1, 0, 2, 0, 2, 1})) == 1);
  CHECK(rows.count(row({1, 0, 1, 0, 2, 2}, {0, 2, 0, 2, 1, 1})) == 1);
  CHECK(rows.count(row({2, 2, 1, 0, 1, 0}, {1, 1, 0, 2, 0, 2})) == 1);
  CHECK(rows.count(row({1, 0, 2, 2, 1, 0}, {0, 2, 1, 1, 0, 2})) == 1);
}

TEST_CASE("the budget throws before any work happens") {
  oracle::OracleOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(oracle::brute_force(Params(2, 6), 5, tiny), std::runtime_error);
  // 12^9 blows the default budget of 1e8.
  CHECK_THROWS_AS(oracle::brute_force(Params(2, 12), 9), std::runtime_error);
  // Exactly at the limit is fine: 6^5 = 7776.
  oracle::OracleOptions exact;
  exact.budget = 7776;
  CHECK(oracle::brute_force(Params(2, 6), 5, exact).pairs.size() == 40);
}

TEST_CASE("the zero policy drops exactly the leading-zero pairs") {
  oracle::OracleOptions no_zeros;
  no_zeros.allow_boundary_zeros = false;
  auto full = rows_of(oracle::brute_force(Params(2, 6), 5));
  auto trimmed = rows_of(oracle::brute_force(Params(2, 6), 5, no_zeros));

  std::set<Row> expect;
  for (const auto& r : full)
    if (r.first.front() != 0 && r.second.front() != 0) expect.insert(r);
  CHECK(trimmed == expect);
  CHECK(trimmed.size() == 32);  // 8 of the 40 wear a boundary zero

  SearchOptions search_no_zeros;
  search_no_zeros.allow_boundary_zeros = false;
  CHECK(trimmed == rows_of(find_all(Params(2, 6), 5, search_no_zeros)));
}

TEST_CASE("serial and parallel scans produce identical ordered output") {
  for (auto [n, b, len] : {std::tuple{2, 6, 5}, {3, 4, 6}, {4, 10, 4}}) {
    oracle::OracleOptions serial;
    serial.parallel = false;
    auto par = oracle::brute_force(Params(n, b), len);
    auto ser = oracle::brute_force(Params(n, b), len, serial);
    REQUIRE(par.pairs.size() == ser.pairs.size());
    for (std::size_t i = 0; i < par.pairs.size(); ++i) {
      CHECK(par.pairs[i].first == ser.pairs[i].first);
      CHECK(par.pairs[i].second == ser.pairs[i].second);
    }
  }
}

TEST_CASE("scan output is sorted by product, then multiplicand") {
  auto res = oracle::brute_force(Params(3, 5), 4);
  for (std::size_t i = 1; i < res.pairs.size(); ++i) {
    const auto prev = std::make_pair(res.pairs[i - 1].first.big_endian(),
                                     res.pairs[i - 1].second.big_endian());
    const auto curr =
        std::make_pair(res.pairs[i].first.big_endian(), res.pairs[i].second.big_endian());
    CHECK(prev < curr);
  }
}

TEST_CASE("the scan agrees with trying every permutation explicitly") {
  for (auto [n, b] : {std::pair{2, 4}, {3, 4}, {2, 5}, {2, 6}}) {
    for (int len = 1; len <= 4; ++len) {
      CAPTURE(n);
      CAPTURE(b);
      CAPTURE(len);
      Params p(n, b);
      CHECK(rows_of(oracle::brute_force(p, len)) == by_all_permutations(p, len, true));

      oracle::OracleOptions no_zeros;
      no_zeros.allow_boundary_zeros = false;
      CHECK(rows_of(oracle::brute_force(p, len, no_zeros)) ==
            by_all_permutations(p, len, false));
    }
  }
}

TEST_CASE("cross_check reports agreement between the two paths") {
  auto rep = oracle::cross_check(Params(2, 6), 5);
  CHECK(rep.ok());
  CHECK(rep.agreed == 40);
  CHECK(rep.only_in_search.empty());
  CHECK(rep.only_in_oracle.empty());
  CHECK(rep.search_ms >= 0.0);
  CHECK(rep.oracle_ms >= 0.0);

  for (int len = 1; len <= 5; ++len) {
    CAPTURE(len);
    auto a = oracle::cross_check(Params(2, 4), len);
    CHECK(a.ok());
    CHECK(a.agreed == find_all(Params(2, 4), len).found.size());
    auto c = oracle::cross_check(Params(3, 4), len);
    CHECK(c.ok());
  }
}
