#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <permutiple/format.hpp>
#include <permutiple/mother_graph.hpp>

using namespace permutiple;

namespace {

using Edge = std::pair<int, int>;

// Independent cycle finder: depth-first over every start vertex, keeping only
// cycles whose least vertex is the start. Exponential, fine for b <= 6.
void naive_extend(const MotherGraph& m, int start, std::vector<int>& path,
                  std::vector<bool>& on_path, std::vector<std::vector<int>>& out) {
  int v = path.back();
  for (int w : m.out[v]) {
    if (w == start) {
      out.push_back(path);
    } else if (w > start && !on_path[w]) {
      path.push_back(w);
      on_path[w] = true;
      naive_extend(m, start, path, on_path, out);
      on_path[w] = false;
      path.pop_back();
    }
  }
}

std::vector<DigitCycle> naive_cycles(const MotherGraph& m) {
  std::vector<std::vector<int>> raw;
  for (int s = 0; s < m.params.b; ++s) {
    std::vector<int> path{s};
    std::vector<bool> on_path(m.params.b, false);
    on_path[s] = true;
    naive_extend(m, s, path, on_path, raw);
  }
  std::vector<DigitCycle> cycles;
  cycles.reserve(raw.size());
  for (auto& vs : raw) cycles.push_back(DigitCycle{std::move(vs)});
  std::sort(cycles.begin(), cycles.end(), cycle_less);
  return cycles;
}

}  // namespace

TEST_CASE("edge rule matches the least-residue condition") {
  Params p(4, 10);
  // (d1,d2) allowed iff the would-be source carry lands below n.
  CHECK(edge_allowed(8, 2, p));   // 87912's top pair
  CHECK(edge_allowed(9, 9, p));
  CHECK_FALSE(edge_allowed(9, 8, p));
  CHECK_FALSE(edge_allowed(4, 7, p));  // not an edge; (7,4) is
  CHECK(edge_allowed(7, 4, p));
}

TEST_CASE("the (2,4)-mother graph has exactly the figure's eight edges") {
  auto m = build_mother_graph(Params(2, 4));
  std::vector<Edge> want{{0, 0}, {0, 2}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 3}};
  CHECK(m.edges() == want);
  CHECK(m.edge_count() == 8);
  CHECK(m.has_edge(0, 2));
  CHECK_FALSE(m.has_edge(2, 0));
}

TEST_CASE("the (3,4)-mother graph has exactly the figure's twelve edges") {
  auto m = build_mother_graph(Params(3, 4));
  std::vector<Edge> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 3},
                         {2, 0}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  CHECK(m.edges() == want);
}

TEST_CASE("the (2,6)-mother graph has exactly the figure's twelve edges") {
  auto m = build_mother_graph(Params(2, 6));
  std::vector<Edge> want{{0, 0}, {0, 3}, {1, 0}, {1, 3}, {2, 1}, {2, 4},
                         {3, 1}, {3, 4}, {4, 2}, {4, 5}, {5, 2}, {5, 5}};
  CHECK(m.edges() == want);
}

TEST_CASE("every mother graph has n*b edges and is n-regular both ways") {
  for (int b = 3; b <= 12; ++b) {
    for (int n = 2; n < b; ++n) {
      auto m = build_mother_graph(Params(n, b));
      CHECK(m.edge_count() == n * b);
      std::vector<int> in_deg(b, 0);
      for (int d1 = 0; d1 < b; ++d1) {
        CHECK(static_cast<int>(m.out[d1].size()) == n);
        for (int d2 : m.out[d1]) ++in_deg[d2];
      }
      for (int d = 0; d < b; ++d) CHECK(in_deg[d] == n);
    }
  }
}

TEST_CASE("cycles come back canonical: least vertex first, sorted by length then lex") {
  auto m = build_mother_graph(Params(2, 4));
  auto cycles = enumerate_cycles(m);
  std::vector<std::vector<int>> want{{0}, {3}, {1, 2}, {0, 2, 1}, {1, 2, 3}, {0, 2, 3, 1}};
  REQUIRE(cycles.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(cycles[i].vertices == want[i]);

  // The cycle's edge view closes the loop.
  CHECK(cycles[3].edges() == std::vector<Edge>{{0, 2}, {2, 1}, {1, 0}});
  CHECK(cycles[0].edges() == std::vector<Edge>{{0, 0}});
  CHECK(render_cycle(cycles[5]) == "(0,2,3,1)");
}

TEST_CASE("the (3,4)-mother graph lists its ten cycles in table order") {
  auto cycles = enumerate_cycles(build_mother_graph(Params(3, 4)));
  std::vector<std::vector<int>> want{{0},    {1},    {2},    {3},          {0, 1},
                                     {0, 2}, {1, 3}, {2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}};
  REQUIRE(cycles.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(cycles[i].vertices == want[i]);
}

TEST_CASE("the (2,6)-mother graph has ten cycles") {
  auto cycles = enumerate_cycles(build_mother_graph(Params(2, 6)));
  std::vector<std::vector<int>> want{{0},          {5},          {1, 3},          {2, 4},
                                     {0, 3, 1},    {2, 4, 5},    {1, 3, 4, 2},    {0, 3, 4, 2, 1},
                                     {1, 3, 4, 5, 2}, {0, 3, 4, 5, 2, 1}};
  REQUIRE(cycles.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(cycles[i].vertices == want[i]);
}

TEST_CASE("blocked search agrees with a naive finder everywhere it can run") {
  for (int b = 3; b <= 6; ++b)
    for (int n = 2; n < b; ++n) {
      auto m = build_mother_graph(Params(n, b));
      auto fast = enumerate_cycles(m);
      auto slow = naive_cycles(m);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("cycle enumeration scales to the large configuration") {
  auto cycles = enumerate_cycles(build_mother_graph(Params(4, 10)));
  CHECK(cycles.size() == 986);
  // Every reported cycle is a real simple cycle on real edges.
  auto m = build_mother_graph(Params(4, 10));
  std::set<std::vector<int>> distinct;
  for (const auto& c : cycles) {
    for (auto [d1, d2] : c.edges()) CHECK(m.has_edge(d1, d2));
    std::set<int> verts(c.vertices.begin(), c.vertices.end());
    CHECK(static_cast<int>(verts.size()) == c.length());
    CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) == c.vertices.front());
    distinct.insert(c.vertices);
  }
  CHECK(distinct.size() == cycles.size());
}

TEST_CASE("the 1- and 2-cycle inventory at (4,10) matches the palintiple listing") {
  auto cycles = enumerate_cycles(build_mother_graph(Params(4, 10)));
  std::vector<std::vector<int>> short_ones;
  for (const auto& c : cycles)
    if (c.length() <= 2) short_ones.push_back(c.vertices);
  std::vector<std::vector<int>> want{{0},    {3},    {6},    {9},    {0, 2}, {1, 5},
                                     {1, 7}, {2, 8}, {3, 5}, {4, 6}, {4, 8}, {7, 9}};
  CHECK(short_ones == want);
}
