// mother_graph.cpp
//
// Mother-graph construction and simple-cycle enumeration (Johnson's blocked
// search, self-loops handled separately).

#include "permutiple/mother_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace permutiple {

std::vector<std::pair<int, int>> DigitCycle::edges() const {
  std::vector<std::pair<int, int>> out;
  const int m = length();
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % m]);
  return out;
}

bool cycle_less(const DigitCycle& a, const DigitCycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

bool MotherGraph::has_edge(int d1, int d2) const {
  const auto& row = out[d1];
  return std::binary_search(row.begin(), row.end(), d2);
}

int MotherGraph::edge_count() const {
  int total = 0;
  for (const auto& row : out) total += static_cast<int>(row.size());
  return total;
}

std::vector<std::pair<int, int>> MotherGraph::edges() const {
  std::vector<std::pair<int, int>> all;
  for (int d1 = 0; d1 < static_cast<int>(out.size()); ++d1)
    for (int d2 : out[d1]) all.emplace_back(d1, d2);
  return all;
}

bool edge_allowed(int d1, int d2, const Params& p) {
  if (d1 < 0 || d1 >= p.b || d2 < 0 || d2 >= p.b) return false;
  return least_residue(d1 + static_cast<long long>(p.b - p.n) * d2, p.b) <= p.n - 1;
}

MotherGraph build_mother_graph(const Params& p) {
  MotherGraph m{p, std::vector<std::vector<int>>(p.b)};
  for (int d1 = 0; d1 < p.b; ++d1)
    for (int d2 = 0; d2 < p.b; ++d2)
      if (edge_allowed(d1, d2, p)) m.out[d1].push_back(d2);
  // For each residue c <= n-1 and each d2 there is exactly one d1, hence nb
  // edges and n-regular in/out degrees.
  assert(m.edge_count() == p.n * p.b);
  return m;
}

namespace {

// Tarjan over an arbitrary vertex subset, used to restrict Johnson's search.
struct SccFinder {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack, active;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit SccFinder(const std::vector<std::vector<int>>& a, const std::vector<bool>& act)
      : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
        on_stack(a.size(), false), active(act) {}

  void run(int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (!active[w]) continue;
      if (index[w] < 0) {
        run(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

// Johnson's circuit search anchored at s, restricted to the strong component
// of s within the vertices >= s.
struct CircuitSearch {
  const std::vector<std::vector<int>>& adj;  // component-restricted adjacency
  int s;
  std::vector<bool> blocked;
  std::vector<std::vector<int>> block_list;
  std::vector<int> path;
  std::vector<DigitCycle>& out;

  CircuitSearch(const std::vector<std::vector<int>>& a, int start, std::vector<DigitCycle>& o)
      : adj(a), s(start), blocked(a.size(), false), block_list(a.size()), out(o) {}

  void unblock(int u) {
    blocked[u] = false;
    auto pending = std::move(block_list[u]);
    block_list[u].clear();
    for (int w : pending)
      if (blocked[w]) unblock(w);
  }

  bool circuit(int v) {
    bool found = false;
    path.push_back(v);
    blocked[v] = true;
    for (int w : adj[v]) {
      if (w == s) {
        out.push_back(DigitCycle{path});  // path starts at s = least vertex
        found = true;
      } else if (!blocked[w]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : adj[v])
        if (std::find(block_list[w].begin(), block_list[w].end(), v) == block_list[w].end())
          block_list[w].push_back(v);
    }
    path.pop_back();
    return found;
  }
};

}  // namespace

std::vector<DigitCycle> enumerate_cycles(const MotherGraph& m) {
  const int V = m.params.b;
  std::vector<DigitCycle> cycles;

  for (int v = 0; v < V; ++v)
    if (m.has_edge(v, v)) cycles.push_back(DigitCycle{{v}});

  // Loop-free adjacency for the blocked search.
  std::vector<std::vector<int>> adj(V);
  for (int d1 = 0; d1 < V; ++d1)
    for (int d2 : m.out[d1])
      if (d1 != d2) adj[d1].push_back(d2);

  for (int s = 0; s < V; ++s) {
    // Strong component of s among vertices >= s; cycles whose least vertex is
    // s live entirely inside it.
    std::vector<bool> active(V, false);
    for (int v = s; v < V; ++v) active[v] = true;
    SccFinder scc(adj, active);
    for (int v = s; v < V; ++v)
      if (scc.index[v] < 0) scc.run(v);

    std::vector<std::vector<int>> restricted(V);
    for (int d1 = s; d1 < V; ++d1) {
      if (scc.comp[d1] != scc.comp[s]) continue;
      for (int d2 : adj[d1])
        if (d2 >= s && scc.comp[d2] == scc.comp[s]) restricted[d1].push_back(d2);
    }
    if (restricted[s].empty()) continue;

    CircuitSearch search(restricted, s, cycles);
    search.circuit(s);
  }

  std::sort(cycles.begin(), cycles.end(), cycle_less);
  return cycles;
}

}  // namespace permutiple
