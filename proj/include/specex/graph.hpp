#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specex/matrix.hpp"

namespace specex {

/// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows
/// (64 vertices per word). No self loops; edges are kept symmetric. Treat as
/// immutable once populated.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  void add_edge(int u, int v);

  int vertex_count() const { return n_; }
  long edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int u) const;

  int row_words() const { return stride_; }
  const uint64_t* row(int u) const { return &bits_[size_t(u) * stride_]; }

  /// Calls f(v) for every neighbor v of u, ascending.
  template <typename F>
  void for_each_neighbor(int u, F&& f) const {
    const uint64_t* r = row(u);
    for (int w = 0; w < stride_; ++w) {
      uint64_t word = r[w];
      while (word) {
        int b = __builtin_ctzll(word);
        f(w * 64 + b);
        word &= word - 1;
      }
    }
  }

  SquareMatrixZ adjacency_matrix() const;
  /// Degree diagonal minus adjacency.
  SquareMatrixZ laplacian_matrix() const;

  /// Image graph with vertex u renamed perm[u].
  Graph relabel(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(int u) const;

  int n_;
  int stride_;
  std::vector<uint64_t> bits_;
};

/// BFS distances from one root; kUnreachable marks other components.
struct DistanceProfile {
  static constexpr int kUnreachable = -1;

  int root = 0;
  std::vector<int> distances;

  /// Largest finite distance.
  int eccentricity() const;
};

DistanceProfile bfs_distances(const Graph& g, int root);

struct BasicProfile {
  bool connected = false;
  bool regular = false;
  std::optional<int> valency;   // set when regular
  std::optional<int> diameter;  // set when connected
  bool bipartite = false;
};

BasicProfile basic_profile(const Graph& g);

/// Length of the shortest odd cycle; nullopt when the graph has none
/// (bipartite). Works per root: any edge inside one BFS layer at depth t
/// closes an odd closed walk of length 2t+1, and the minimum such walk over
/// all roots is the odd girth.
std::optional<int> odd_girth_combinatorial(const Graph& g);

/// Entry u is the number of vertices at distance exactly `dist` from u.
/// Requires a connected graph.
std::vector<long> excess_vector(const Graph& g, int dist);

/// Intersection array {b_0..b_{D-1}; c_1..c_D} of a distance-regular graph.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(c.size()); }
  /// a_i = k - b_i - c_i with b_D = 0 and c_0 = 0.
  int a(int i) const;

  friend bool operator==(const IntersectionArray&,
                         const IntersectionArray&) = default;
};

/// Distance-regularity by direct counting over every vertex pair: returns the
/// intersection array iff the counts c_i, a_i, b_i depend only on the
/// distance i. Requires a connected regular graph.
std::optional<IntersectionArray> is_distance_regular_direct(const Graph& g);

}  // namespace specex
