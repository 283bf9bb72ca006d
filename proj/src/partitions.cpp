#include "oddspectra/partitions.hpp"

#include "oddspectra/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oddspectra {

Partition::Partition(std::size_t n, std::vector<std::vector<Vertex>> cells)
    : cell_of_(n, n), cells_(std::move(cells)) {
  std::size_t covered = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty()) throw std::invalid_argument("partition cells must be nonempty");
    for (Vertex v : cells_[i]) {
      if (v >= n) throw std::invalid_argument("partition vertex out of range");
      if (cell_of_[v] != n) throw std::invalid_argument("partition cells must be disjoint");
      cell_of_[v] = i;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition cells must cover every vertex");
}

Partition Partition::from_cell_of(std::span<const std::size_t> cell_of) {
  const std::size_t count = cell_of.empty() ? 0 : *std::max_element(cell_of.begin(), cell_of.end()) + 1;
  std::vector<std::vector<Vertex>> cells(count);
  for (Vertex v = 0; v < cell_of.size(); ++v) cells[cell_of[v]].push_back(v);
  return Partition(cell_of.size(), std::move(cells));
}

std::vector<std::size_t> Partition::cell_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : cells_) sizes.push_back(c.size());
  return sizes;
}

std::optional<std::size_t> Partition::singleton_cell() const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].size() == 1) return i;
  return std::nullopt;
}

bool Partition::same_cells(const Partition& other) const {
  auto normalized = [](const Partition& p) {
    std::set<std::vector<Vertex>> out;
    for (auto c : p.cells_) {
      std::sort(c.begin(), c.end());
      out.insert(std::move(c));
    }
    return out;
  };
  return order() == other.order() && normalized(*this) == normalized(other);
}

Partition distance_partition(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  std::vector<std::vector<Vertex>> cells;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] == kInfiniteDistance) throw std::invalid_argument("distance partition needs a connected graph");
    if (dist[u] >= cells.size()) cells.resize(dist[u] + 1);
    cells[dist[u]].push_back(u);
  }
  return Partition(g.order(), std::move(cells));
}

Partition orbit_partition(std::size_t n, std::span<const Permutation> gens) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : gens) {
    if (p.degree() != n) throw std::invalid_argument("generator degree differs from vertex count");
    for (Vertex x = 0; x < n; ++x) {
      const Vertex a = find(x), b = find(p(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest vertices of their orbits, so cells come out
  // ordered by minimum vertex.
  std::vector<std::size_t> index(n, n);
  std::vector<std::vector<Vertex>> cells;
  for (Vertex x = 0; x < n; ++x) {
    const Vertex r = find(x);
    if (index[r] == n) {
      index[r] = cells.size();
      cells.emplace_back();
    }
    cells[index[r]].push_back(x);
  }
  return Partition(n, std::move(cells));
}

EquitableResult is_equitable(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition and graph sizes differ");
  const std::size_t r = p.cell_count();
  QuotientMatrix q = QuotientMatrix::Zero(r, r);
  std::vector<std::int64_t> counts(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& cell = p.cell(i);
    for (std::size_t idx = 0; idx < cell.size(); ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbors(cell[idx])) ++counts[p.cell_of(w)];
      if (idx == 0) {
        for (std::size_t j = 0; j < r; ++j) q(i, j) = counts[j];
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (counts[j] != q(i, j))
          return EquitableRefutation{i, j, cell[0], cell[idx], q(i, j), counts[j]};
      }
    }
  }
  return q;
}

QuotientSpectrumVerdict quotient_spectrum_subset_check(const Graph& g, const QuotientMatrix& q) {
  QuotientSpectrumVerdict verdict;
  verdict.quotient_char_poly = char_poly(q);
  // Quotient eigenvalues are adjacency eigenvalues, so |root| <= max degree.
  const auto bound = static_cast<std::int64_t>(g.max_degree());
  const auto roots = integer_roots(verdict.quotient_char_poly, bound);
  verdict.residual_degree = roots.residual_degree;
  const IntMatrix a = g.adjacency_matrix<BigInt>();
  for (const auto& [root, mult] : roots.roots) {
    RootCheck check{root, mult, nullity_at(a, root)};
    if (check.adjacency_multiplicity == 0) verdict.holds = false;
    verdict.roots.push_back(check);
  }
  return verdict;
}

SingletonCellVerdict singleton_cell_full_spectrum_check(const Graph& g, const Partition& p,
                                                        std::span<const Permutation> witnesses) {
  SingletonCellVerdict verdict;
  if (!p.singleton_cell()) {
    verdict.reason = "partition has no singleton cell";
    return verdict;
  }
  for (const auto& w : witnesses) {
    if (!is_automorphism(g, w)) {
      verdict.reason = "a witness generator is not an automorphism";
      return verdict;
    }
  }
  if (!orbit_partition(g.order(), witnesses).same_cells(p)) {
    verdict.reason = "partition is not the orbit partition of the witnesses";
    return verdict;
  }
  const auto equitable = is_equitable(g, p);
  if (const auto* refutation = std::get_if<EquitableRefutation>(&equitable)) {
    verdict.reason = "partition is not equitable";
    verdict.refutation = *refutation;
    return verdict;
  }
  const auto& q = std::get<QuotientMatrix>(equitable);
  const auto roots = integer_roots(char_poly(q), static_cast<std::int64_t>(g.max_degree()));
  for (const auto& r : roots.roots) verdict.quotient_roots.push_back(r.root);
  const auto spectrum = integral_spectrum(g);
  verdict.graph_eigenvalues = spectrum.eigenvalues();
  verdict.graph_residual = spectrum.residual;
  verdict.holds = spectrum.integral() && verdict.graph_eigenvalues == verdict.quotient_roots;
  verdict.reason = verdict.holds ? "integer eigenvalues of the graph equal the quotient roots"
                                 : "graph eigenvalues and quotient roots differ";
  return verdict;
}

}  // namespace oddspectra
