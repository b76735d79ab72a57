#include "specex/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specex {

namespace {

std::vector<std::vector<int>> subsets_lex(int m, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(t);
  // Iterative lexicographic t-combinations of {0..m-1}.
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == m - t + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

bool is_connected(const Graph& g) {
  DistanceProfile p = bfs_distances(g, 0);
  return std::none_of(p.distances.begin(), p.distances.end(), [](int d) {
    return d == DistanceProfile::kUnreachable;
  });
}

}  // namespace

Graph kneser(int m, int t) {
  if (t < 1 || m <= t)
    throw std::invalid_argument("kneser: requires m > t >= 1");
  std::vector<std::vector<int>> verts = subsets_lex(m, t);
  int n = static_cast<int>(verts.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (disjoint(verts[u], verts[v])) g.add_edge(u, v);
  return g;
}

Graph folded_cube(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("folded_cube: requires odd m >= 3");
  int bits = m - 1;
  int n = 1 << bits;
  unsigned mask = n - 1;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int b = 0; b < bits; ++b) {
      int v = u ^ (1 << b);
      if (u < v) g.add_edge(u, v);
    }
    int anti = static_cast<int>(~static_cast<unsigned>(u) & mask);
    if (u < anti) g.add_edge(u, anti);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: requires n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite: requires a, b >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph hypercube(int m) {
  if (m < 1) throw std::invalid_argument("hypercube: requires m >= 1");
  int n = 1 << m;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < m; ++b) {
      int v = u ^ (1 << b);
      if (u < v) g.add_edge(u, v);
    }
  return g;
}

Graph circulant(int n, const std::vector<int>& connections) {
  if (n < 2) throw std::invalid_argument("circulant: requires n >= 2");
  Graph g(n);
  for (int s : connections) {
    if (s < 1 || s > n / 2)
      throw std::invalid_argument(
          "circulant: connection offsets must lie in 1..n/2");
    for (int i = 0; i < n; ++i) {
      int j = (i + s) % n;
      if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph random_connected_regular(int n, int k, std::mt19937_64& rng) {
  if (k < 0 || k >= n || (n * k) % 2 != 0)
    throw std::invalid_argument(
        "random_connected_regular: requires 0 <= k < n and nk even");
  if (k == 0 && n > 1)
    throw std::invalid_argument("random_connected_regular: 0-regular on n > 1 "
                                "is never connected");

  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Deterministic k-regular start: circulant offsets 1..k/2 (+ antipode
    // when k is odd; nk even then forces n even).
    std::vector<std::pair<int, int>> edges;
    for (int s = 1; s <= k / 2; ++s)
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + s) % n);
    if (k % 2 == 1)
      for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);

    auto has = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return std::any_of(edges.begin(), edges.end(), [&](auto e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e.first == a && e.second == b;
      });
    };

    // Degree-preserving 2-switches keep the graph simple and k-regular.
    std::uniform_int_distribution<size_t> pick(0, edges.empty() ? 0 : edges.size() - 1);
    long switches = 20L * static_cast<long>(edges.size()) + 20;
    for (long s = 0; s < switches; ++s) {
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (rng() & 1) std::swap(c, d);
      // (a,b),(c,d) -> (a,c),(b,d)
      if (a == c || a == d || b == c || b == d) continue;
      if (has(a, c) || has(b, d)) continue;
      edges[i] = {a, c};
      edges[j] = {b, d};
    }

    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_regular: sampling failed");
}

Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution flip(edge_prob);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (flip(rng)) g.add_edge(i, j);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: sampling failed");
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

}  // namespace specex
