#pragma once

// Simple undirected graphs with bitset adjacency, the Odd-graph family
// constructors, distances, and covering-map checks.

#include "oddspectra/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddspectra {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex label of the bipartite double of O_k: a (k-1)-subset of
/// {1, ..., 2k-1} stored as a bitmask (bit x stands for element x+1) and a
/// parity bit. Odd-graph vertices carry parity 0.
struct DoubleOddLabel {
  std::uint32_t subset = 0;
  std::uint8_t parity = 0;

  friend auto operator<=>(const DoubleOddLabel&, const DoubleOddLabel&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Adds the undirected edge uv. Loops and out-of-range endpoints throw.
  void add_edge(Vertex u, Vertex v);
  /// Labels must be pairwise distinct and there must be exactly one per vertex.
  void set_labels(std::vector<DoubleOddLabel> labels);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(Vertex u) const;
  std::vector<Vertex> neighbors(Vertex u) const;
  std::size_t max_degree() const;
  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<DoubleOddLabel>>& labels() const { return labels_; }
  std::optional<Vertex> find_label(const DoubleOddLabel& label) const;

  /// Copy in which vertex v is renamed image[v]. Labels move with vertices.
  Graph relabeled(std::span<const Vertex> image) const;

  template <typename Scalar>
  DenseMatrix<Scalar> adjacency_matrix() const {
    DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n_, n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u)) a(u, v) = Scalar(1);
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::optional<std::vector<DoubleOddLabel>> labels_;
};

/// Largest k accepted by the Odd-graph constructors (C(15,7) = 6435 vertices).
inline constexpr int kMaxOddGraphK = 8;

/// O_k: (k-1)-subsets of a (2k-1)-set, adjacent when disjoint. Vertices are
/// ordered by subset bitmask.
Graph odd_graph(int k);
/// (u,i) ~ (w,j) iff uw is an edge of g and i != j. Vertices (u,0) come
/// first as 0..n-1, then (u,1) as n..2n-1.
Graph bipartite_double(const Graph& g);
/// 2O_k, the bipartite double of O_k.
Graph double_odd_graph(int k);
/// 2O_k plus the matching {(v,0),(v,1)}. This adds edges between antipodes
/// rather than identifying them, so it is not the usual folded graph.
Graph folded_double_odd(int k);

/// The (k-1)-subsets of [2k-1] as bitmasks, ascending: the vertex order of O_k.
std::vector<std::uint32_t> odd_graph_subsets(int k);

/// Vertex index of (subset, parity) in double_odd_graph(k) / folded_double_odd(k).
Vertex double_odd_index(int k, const DoubleOddLabel& label);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

inline constexpr std::uint32_t kInfiniteDistance = std::numeric_limits<std::uint32_t>::max();

using DistanceMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;

struct DistanceTable {
  DistanceMatrix dist;
  std::uint32_t diameter = 0;  ///< largest finite distance
  bool connected = true;

  std::uint32_t operator()(Vertex u, Vertex v) const { return dist(u, v); }
};

/// Breadth-first hop distances from one source; unreachable vertices get
/// kInfiniteDistance.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);
DistanceTable all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
/// Proper 2-colouring if one exists.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

struct AntipodalResult {
  std::vector<Vertex> map;           ///< filled on success
  std::optional<Vertex> violating;   ///< vertex without a unique antipode
  std::size_t antipode_count = 0;    ///< its number of vertices at distance d

  explicit operator bool() const { return !violating.has_value(); }
};

/// Sends each vertex to its unique vertex at distance = diameter.
AntipodalResult antipodal_map(const Graph& g, const DistanceTable& dt);

struct CoveringVerdict {
  bool holds = true;
  std::string reason;
  std::optional<Edge> violating_edge;      ///< edge of g mapped to a non-edge
  std::optional<Vertex> violating_vertex;  ///< unreached vertex or bad fibre element

  explicit operator bool() const { return holds; }
};

/// Checks that f: V(g) -> V(h) is a surjective local isomorphism.
CoveringVerdict verify_covering_map(const Graph& g, const Graph& h, std::span<const Vertex> f);

}  // namespace oddspectra
