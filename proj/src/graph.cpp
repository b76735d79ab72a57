#include "specex/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace specex {

Graph::Graph(int n) : n_(n), stride_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  bits_.assign(size_t(n_) * stride_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self loops are not allowed");
  bits_[size_t(u) * stride_ + v / 64] |= uint64_t(1) << (v % 64);
  bits_[size_t(v) * stride_ + u / 64] |= uint64_t(1) << (u % 64);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[size_t(u) * stride_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  for (int w = 0; w < stride_; ++w) d += std::popcount(row(u)[w]);
  return d;
}

long Graph::edge_count() const {
  long twice = 0;
  for (int u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

SquareMatrixZ Graph::adjacency_matrix() const {
  SquareMatrixZ a(n_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) { a.at(u, v) = 1; });
  return a;
}

SquareMatrixZ Graph::laplacian_matrix() const {
  SquareMatrixZ l(n_);
  for (int u = 0; u < n_; ++u) {
    l.at(u, u) = degree(u);
    for_each_neighbor(u, [&](int v) { l.at(u, v) = -1; });
  }
  return l;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) {
      if (u < v) g.add_edge(perm[u], perm[v]);
    });
  return g;
}

int DistanceProfile::eccentricity() const {
  int e = 0;
  for (int d : distances)
    if (d != kUnreachable) e = std::max(e, d);
  return e;
}

DistanceProfile bfs_distances(const Graph& g, int root) {
  DistanceProfile p;
  p.root = root;
  p.distances.assign(g.vertex_count(), DistanceProfile::kUnreachable);
  p.distances[root] = 0;
  std::vector<int> queue{root};
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    g.for_each_neighbor(u, [&](int v) {
      if (p.distances[v] == DistanceProfile::kUnreachable) {
        p.distances[v] = p.distances[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return p;
}

BasicProfile basic_profile(const Graph& g) {
  BasicProfile bp;
  int n = g.vertex_count();

  int k = g.degree(0);
  bp.regular = true;
  for (int u = 1; u < n; ++u)
    if (g.degree(u) != k) {
      bp.regular = false;
      break;
    }
  if (bp.regular) bp.valency = k;

  DistanceProfile from0 = bfs_distances(g, 0);
  bp.connected = std::none_of(
      from0.distances.begin(), from0.distances.end(),
      [](int d) { return d == DistanceProfile::kUnreachable; });

  if (bp.connected) {
    int diam = 0;
    for (int u = 0; u < n; ++u)
      diam = std::max(diam, bfs_distances(g, u).eccentricity());
    bp.diameter = diam;
  }

  // 2-coloring by BFS parity, per component.
  bp.bipartite = true;
  std::vector<int> color(n, -1);
  for (int s = 0; s < n && bp.bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t head = 0; head < queue.size() && bp.bipartite; ++head) {
      int u = queue[head];
      g.for_each_neighbor(u, [&](int v) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          bp.bipartite = false;
        }
      });
    }
  }
  return bp;
}

std::optional<int> odd_girth_combinatorial(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  for (int r = 0; r < n; ++r) {
    DistanceProfile p = bfs_distances(g, r);
    for (int u = 0; u < n; ++u) {
      if (p.distances[u] == DistanceProfile::kUnreachable) continue;
      g.for_each_neighbor(u, [&](int v) {
        if (v < u) return;
        if (p.distances[v] == p.distances[u]) {
          int candidate = 2 * p.distances[u] + 1;
          if (best < 0 || candidate < best) best = candidate;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<long> excess_vector(const Graph& g, int dist) {
  if (dist < 1) throw std::invalid_argument("excess_vector: dist must be >= 1");
  int n = g.vertex_count();
  std::vector<long> out(n, 0);
  for (int u = 0; u < n; ++u) {
    DistanceProfile p = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) {
      if (p.distances[v] == DistanceProfile::kUnreachable)
        throw std::invalid_argument("excess_vector: graph is not connected");
      if (p.distances[v] == dist) ++out[u];
    }
  }
  return out;
}

int IntersectionArray::a(int i) const {
  if (i < 0 || i > diameter())
    throw std::invalid_argument("intersection array index out of range");
  int k = b.empty() ? 0 : b[0];
  int bi = i < diameter() ? b[i] : 0;
  int ci = i == 0 ? 0 : c[i - 1];
  return k - bi - ci;
}

std::optional<IntersectionArray> is_distance_regular_direct(const Graph& g) {
  BasicProfile bp = basic_profile(g);
  if (!bp.connected)
    throw std::invalid_argument("is_distance_regular_direct: not connected");
  if (!bp.regular)
    throw std::invalid_argument("is_distance_regular_direct: not regular");

  int n = g.vertex_count();
  int words = g.row_words();
  int diam = *bp.diameter;
  if (diam == 0) return IntersectionArray{};  // K_1

  std::vector<int> b(diam, -1), c(diam, -1), a(diam, -1);
  std::vector<std::vector<uint64_t>> layer(diam + 1,
                                           std::vector<uint64_t>(words));
  for (int u = 0; u < n; ++u) {
    DistanceProfile p = bfs_distances(g, u);
    for (auto& mask : layer) std::fill(mask.begin(), mask.end(), 0);
    for (int v = 0; v < n; ++v)
      layer[p.distances[v]][v / 64] |= uint64_t(1) << (v % 64);

    for (int v = 0; v < n; ++v) {
      int i = p.distances[v];
      if (i == 0) continue;
      const uint64_t* rv = g.row(v);
      int ci = 0, ai = 0, bi = 0;
      for (int w = 0; w < words; ++w) {
        ci += std::popcount(rv[w] & layer[i - 1][w]);
        ai += std::popcount(rv[w] & layer[i][w]);
        if (i + 1 <= diam) bi += std::popcount(rv[w] & layer[i + 1][w]);
      }
      int idx = i - 1;
      if (c[idx] == -1) {
        c[idx] = ci;
        a[idx] = ai;
        b[idx] = bi;
      } else if (c[idx] != ci || a[idx] != ai || b[idx] != bi) {
        return std::nullopt;
      }
    }
  }

  IntersectionArray arr;
  arr.b.push_back(*bp.valency);  // b_0 = k
  for (int i = 0; i + 1 < diam; ++i) arr.b.push_back(b[i]);
  for (int i = 0; i < diam; ++i) arr.c.push_back(c[i]);
  return arr;
}

}  // namespace specex
