#include "oddspectra/partitions.hpp"
#include "oddspectra/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace oddspectra {

AutomorphismVerdict is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) throw std::invalid_argument("permutation degree differs from graph order");
  AutomorphismVerdict verdict;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w) != g.adjacent(p(u), p(w))) {
        verdict.holds = false;
        verdict.violating_pair = Edge{u, w};
        return verdict;
      }
    }
  }
  return verdict;
}

Permutation theta_generator(int k) {
  const auto half = static_cast<Vertex>(odd_graph_subsets(k).size());
  std::vector<Vertex> image(2 * half);
  for (Vertex v = 0; v < half; ++v) {
    image[v] = v + half;
    image[v + half] = v;
  }
  return Permutation(std::move(image));
}

Permutation sigma_generator(const Permutation& sigma, int k) {
  if (sigma.degree() != static_cast<std::size_t>(2 * k - 1))
    throw std::invalid_argument("sigma must act on 2k-1 points");
  const auto subsets = odd_graph_subsets(k);
  const auto half = static_cast<Vertex>(subsets.size());
  std::vector<Vertex> image(2 * half);
  for (Vertex v = 0; v < half; ++v) {
    std::uint32_t moved = 0;
    for (std::uint32_t s = subsets[v]; s != 0; s &= s - 1)
      moved |= std::uint32_t{1} << sigma(static_cast<Vertex>(std::countr_zero(s)));
    const Vertex target = double_odd_index(k, {moved, 0});
    image[v] = target;
    image[v + half] = target + half;
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> symmetric_group_generators(std::size_t m) {
  std::vector<Permutation> gens;
  if (m < 2) return gens;
  gens.push_back(Permutation::transposition(m, 0, 1));
  if (m > 2) {
    std::vector<Vertex> points(m);
    for (Vertex i = 0; i < m; ++i) points[i] = i;
    gens.push_back(Permutation::cycle(m, points));
  }
  return gens;
}

std::vector<Permutation> double_odd_symmetry_generators(int k) {
  std::vector<Permutation> gens{theta_generator(k)};
  for (const auto& sigma : symmetric_group_generators(2 * k - 1))
    gens.push_back(sigma_generator(sigma, k));
  return gens;
}

std::vector<Permutation> double_odd_vertex_stabilizer_generators(int k, Vertex v) {
  const auto subsets = odd_graph_subsets(k);
  if (v >= 2 * subsets.size()) throw std::invalid_argument("vertex out of range");
  const std::uint32_t subset = subsets[v % subsets.size()];
  const auto points = static_cast<std::size_t>(2 * k - 1);
  std::vector<Vertex> inside, outside;
  for (Vertex x = 0; x < points; ++x) ((subset >> x) & 1U ? inside : outside).push_back(x);
  std::vector<Permutation> gens;
  for (const auto* block : {&inside, &outside}) {
    if (block->size() < 2) continue;
    const std::vector<Vertex> pair{(*block)[0], (*block)[1]};
    gens.push_back(sigma_generator(Permutation::cycle(points, pair), k));
    if (block->size() > 2) gens.push_back(sigma_generator(Permutation::cycle(points, *block), k));
  }
  return gens;
}

TransitivityVerdict is_vertex_transitive(const Graph& g, std::span<const Permutation> gens) {
  TransitivityVerdict verdict;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto check = is_automorphism(g, gens[i]);
    if (!check) {
      verdict.bad_generator = i;
      verdict.bad_generator_witness = check;
      return verdict;
    }
  }
  verdict.orbit_count = orbit_partition(g.order(), gens).cell_count();
  verdict.holds = verdict.orbit_count == 1;
  return verdict;
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

/// Ordered equitable refinement. Every step depends only on the cell
/// structure, never on vertex names, so automorphisms commute with it.
class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), words_(g.words_per_row()) {}

  void refine(Cells& cells) const {
    std::vector<std::uint64_t> mask(words_);
    for (std::size_t s = 0; s < cells.size();) {
      std::fill(mask.begin(), mask.end(), 0);
      for (Vertex v : cells[s]) mask[v / 64] |= std::uint64_t{1} << (v % 64);
      Cells next;
      next.reserve(cells.size());
      bool split = false;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<std::size_t, std::vector<Vertex>> by_count;
        for (Vertex v : cell) by_count[count_into(v, mask)].push_back(v);
        if (by_count.size() > 1) split = true;
        for (auto& [count, part] : by_count) next.push_back(std::move(part));
      }
      cells = std::move(next);
      s = split ? 0 : s + 1;
    }
  }

  /// Cell sizes followed by the quotient entries of an equitable partition.
  std::vector<std::size_t> signature(const Cells& cells) const {
    std::vector<std::size_t> sig;
    std::vector<std::size_t> cell_of(g_.order());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      sig.push_back(cells[i].size());
      for (Vertex v : cells[i]) cell_of[v] = i;
    }
    for (const auto& cell : cells) {
      std::vector<std::size_t> counts(cells.size(), 0);
      for (Vertex w : g_.neighbors(cell.front())) ++counts[cell_of[w]];
      sig.insert(sig.end(), counts.begin(), counts.end());
    }
    return sig;
  }

 private:
  std::size_t count_into(Vertex v, const std::vector<std::uint64_t>& mask) const {
    auto r = g_.row(v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(r[i] & mask[i]);
    return c;
  }

  const Graph& g_;
  std::size_t words_;
};

/// Index of the first smallest non-singleton cell, or cells.size() if discrete.
std::size_t target_cell(const Cells& cells) {
  std::size_t best = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1 && (best == cells.size() || cells[i].size() < cells[best].size())) best = i;
  return best;
}

Cells individualize(const Cells& cells, std::size_t cell, Vertex v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != cell) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex w : cells[i])
      if (w != v) rest.push_back(w);
    out.push_back(std::move(rest));
  }
  return out;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), refiner_(g) {}

  PermGroup run() {
    const std::size_t n = g_.order();
    if (n == 0) return PermGroup(0, {});
    Cells root{std::vector<Vertex>(n)};
    for (Vertex v = 0; v < n; ++v) root[0][v] = v;
    refiner_.refine(root);

    // Leftmost path of the search tree.
    path_.push_back(root);
    signatures_.push_back(refiner_.signature(root));
    for (;;) {
      const Cells& node = path_.back();
      const std::size_t t = target_cell(node);
      if (t == node.size()) break;
      targets_.push_back(node[t]);
      target_index_.push_back(t);
      base_.push_back(*std::min_element(node[t].begin(), node[t].end()));
      Cells child = individualize(node, t, base_.back());
      refiner_.refine(child);
      signatures_.push_back(refiner_.signature(child));
      path_.push_back(std::move(child));
    }
    first_leaf_.resize(n);
    for (std::size_t i = 0; i < path_.back().size(); ++i) first_leaf_[i] = path_.back()[i].front();

    // Level i (0-based) handles the orbit of base_[i] under the pointwise
    // stabilizer of base_[0..i-1].
    for (std::size_t level = base_.size(); level-- > 0;) {
      for (Vertex w : sorted(targets_[level])) {
        if (w == base_[level] || in_orbit(level, w)) continue;
        Cells child = individualize(path_[level], target_index_[level], w);
        refiner_.refine(child);
        if (refiner_.signature(child) != signatures_[level + 1]) continue;
        if (auto found = search(child, level + 1)) generators_.push_back({level, *found});
      }
    }

    std::vector<Permutation> gens;
    for (const auto& [level, p] : generators_) gens.push_back(p);
    PermGroup group(n, std::move(gens));
    BigInt product = 1;
    for (std::size_t level = 0; level < base_.size(); ++level) product *= orbit(level).size();
    if (product != group.order())
      throw std::logic_error("automorphism search: orbit product disagrees with stabilizer chain");
    return group;
  }

 private:
  static std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Depth-first search for any leaf below `node` that yields an automorphism.
  std::optional<Permutation> search(const Cells& node, std::size_t depth) {
    const std::size_t t = target_cell(node);
    if (t == node.size()) {
      std::vector<Vertex> image(g_.order());
      for (std::size_t i = 0; i < node.size(); ++i) image[first_leaf_[i]] = node[i].front();
      Permutation candidate(std::move(image));
      if (is_automorphism(g_, candidate)) return candidate;
      return std::nullopt;
    }
    if (depth >= base_.size()) return std::nullopt;
    for (Vertex w : sorted(node[t])) {
      Cells child = individualize(node, t, w);
      refiner_.refine(child);
      if (refiner_.signature(child) != signatures_[depth + 1]) continue;
      if (auto found = search(child, depth + 1)) return found;
    }
    return std::nullopt;
  }

  std::vector<Vertex> orbit(std::size_t level) const {
    std::vector<Vertex> orbit{base_[level]};
    std::vector<bool> seen(g_.order(), false);
    seen[base_[level]] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& [found_level, p] : generators_) {
        if (found_level < level) continue;
        const Vertex y = p(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    return orbit;
  }

  bool in_orbit(std::size_t level, Vertex w) const {
    const auto o = orbit(level);
    return std::find(o.begin(), o.end(), w) != o.end();
  }

  const Graph& g_;
  Refiner refiner_;
  std::vector<Cells> path_;
  std::vector<std::vector<std::size_t>> signatures_;
  std::vector<std::vector<Vertex>> targets_;
  std::vector<std::size_t> target_index_;
  std::vector<Vertex> base_;
  std::vector<Vertex> first_leaf_;
  std::vector<std::pair<std::size_t, Permutation>> generators_;
};

}  // namespace

PermGroup full_automorphism_group(const Graph& g, std::size_t max_vertices) {
  if (g.order() > max_vertices)
    throw CapacityError("automorphism search limited to " + std::to_string(max_vertices) +
                        " vertices, graph has " + std::to_string(g.order()));
  return AutomorphismSearch(g).run();
}

}  // namespace oddspectra
