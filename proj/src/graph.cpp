#include "oddspectra/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace oddspectra {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::set_labels(std::vector<DoubleOddLabel> labels) {
  if (labels.size() != n_) throw std::invalid_argument("label count differs from vertex count");
  std::set<DoubleOddLabel> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("vertex labels must be distinct");
  labels_ = std::move(labels);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  auto r = row(u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = degree(0);
  for (Vertex u = 1; u < n_; ++u)
    if (degree(u) != d) return std::nullopt;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<Vertex> Graph::find_label(const DoubleOddLabel& label) const {
  if (!labels_) return std::nullopt;
  auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_->begin());
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != n_) throw std::invalid_argument("relabeling has wrong length");
  Graph out(n_);
  for (const auto& [u, v] : edges()) out.add_edge(image[u], image[v]);
  if (labels_) {
    std::vector<DoubleOddLabel> moved(n_);
    for (Vertex v = 0; v < n_; ++v) moved[image[v]] = (*labels_)[v];
    out.set_labels(std::move(moved));
  }
  return out;
}

namespace {

void check_k(int k) {
  if (k < 2) throw std::domain_error("k must be at least 2");
  if (k > kMaxOddGraphK) throw std::length_error("k exceeds the supported Odd-graph size");
}

/// All bitmasks over `bits` bits with popcount `weight`, ascending.
std::vector<std::uint32_t> masks_of_weight(int bits, int weight) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << bits); ++m)
    if (std::popcount(m) == weight) out.push_back(m);
  return out;
}

}  // namespace

std::vector<std::uint32_t> odd_graph_subsets(int k) {
  check_k(k);
  return masks_of_weight(2 * k - 1, k - 1);
}

Graph odd_graph(int k) {
  const auto masks = odd_graph_subsets(k);
  Graph g(masks.size());
  for (Vertex u = 0; u < masks.size(); ++u)
    for (Vertex v = u + 1; v < masks.size(); ++v)
      if ((masks[u] & masks[v]) == 0) g.add_edge(u, v);
  std::vector<DoubleOddLabel> labels;
  labels.reserve(masks.size());
  for (auto m : masks) labels.push_back({m, 0});
  g.set_labels(std::move(labels));
  return g;
}

Graph bipartite_double(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Graph out(2 * g.order());
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(u, n + v);
    out.add_edge(v, n + u);
  }
  const auto& labels = g.labels();
  if (labels && std::all_of(labels->begin(), labels->end(),
                            [](const DoubleOddLabel& l) { return l.parity == 0; })) {
    std::vector<DoubleOddLabel> doubled;
    doubled.reserve(2 * g.order());
    for (std::uint8_t parity : {0, 1})
      for (const auto& l : *labels) doubled.push_back({l.subset, parity});
    out.set_labels(std::move(doubled));
  }
  return out;
}

Graph double_odd_graph(int k) { return bipartite_double(odd_graph(k)); }

Graph folded_double_odd(int k) {
  Graph g = double_odd_graph(k);
  const auto half = static_cast<Vertex>(g.order() / 2);
  for (Vertex v = 0; v < half; ++v) g.add_edge(v, half + v);
  return g;
}

Vertex double_odd_index(int k, const DoubleOddLabel& label) {
  check_k(k);
  // Colex rank; for a fixed popcount it coincides with ascending bitmask order.
  std::int64_t rank = 0;
  int seen = 0;
  for (int bit = 0; bit < 2 * k - 1; ++bit) {
    if ((label.subset >> bit) & 1U) rank += binomial(bit, ++seen);
  }
  if (seen != k - 1 || (label.subset >> (2 * k - 1)) != 0)
    throw std::invalid_argument("subset is not a (k-1)-subset of [2k-1]");
  return static_cast<Vertex>(rank + (label.parity ? binomial(2 * k - 1, k - 1) : 0));
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint32_t> dist(n, kInfiniteDistance);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  dist[source] = 0;
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier = visited;
  for (std::uint32_t level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < words; ++i) {
      for (std::uint64_t w = frontier[i]; w != 0; w &= w - 1) {
        auto r = g.row(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        for (std::size_t j = 0; j < words; ++j) next[j] |= r[j];
      }
    }
    bool grew = false;
    for (std::size_t j = 0; j < words; ++j) {
      next[j] &= ~visited[j];
      visited[j] |= next[j];
      for (std::uint64_t w = next[j]; w != 0; w &= w - 1) {
        dist[j * 64 + std::countr_zero(w)] = level;
        grew = true;
      }
    }
    if (!grew) break;
    frontier.swap(next);
  }
  return dist;
}

DistanceTable all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceTable dt;
  dt.dist.resize(n, n);
  for (Vertex s = 0; s < n; ++s) {
    const auto d = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      dt.dist(s, t) = d[t];
      if (d[t] == kInfiniteDistance)
        dt.connected = false;
      else
        dt.diameter = std::max(dt.diameter, d[t]);
    }
  }
  return dt;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](auto x) { return x == kInfiniteDistance; });
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> colour(n, 2);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != 2) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] == 2) {
          colour[v] = colour[u] ^ 1;
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

AntipodalResult antipodal_map(const Graph& g, const DistanceTable& dt) {
  if (!dt.connected) throw std::invalid_argument("antipodal map needs a connected graph");
  AntipodalResult result;
  const std::size_t n = g.order();
  result.map.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    std::size_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (dt(u, v) == dt.diameter) {
        ++count;
        result.map[u] = v;
      }
    }
    if (count != 1) {
      result.violating = u;
      result.antipode_count = count;
      result.map.clear();
      return result;
    }
  }
  return result;
}

CoveringVerdict verify_covering_map(const Graph& g, const Graph& h, std::span<const Vertex> f) {
  CoveringVerdict verdict;
  auto fail = [&](std::string reason) {
    verdict.holds = false;
    verdict.reason = std::move(reason);
    return verdict;
  };
  if (f.size() != g.order()) return fail("map is not total on V(g)");
  for (Vertex x = 0; x < g.order(); ++x) {
    if (f[x] >= h.order()) {
      verdict.violating_vertex = x;
      return fail("image outside V(h)");
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (!h.adjacent(f[u], f[v])) {
      verdict.violating_edge = Edge{u, v};
      return fail("not a homomorphism");
    }
  }
  std::vector<bool> hit(h.order(), false);
  for (Vertex x = 0; x < g.order(); ++x) hit[f[x]] = true;
  for (Vertex w = 0; w < h.order(); ++w) {
    if (!hit[w]) {
      verdict.violating_vertex = w;
      return fail("not surjective");
    }
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Vertex> images;
    for (Vertex y : g.neighbors(x)) images.push_back(f[y]);
    std::sort(images.begin(), images.end());
    if (images != h.neighbors(f[x])) {
      verdict.violating_vertex = x;
      return fail("neighbourhood of a fibre element is not mapped bijectively");
    }
  }
  return verdict;
}

}  // namespace oddspectra
