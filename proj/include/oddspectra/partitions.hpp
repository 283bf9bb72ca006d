#pragma once

// Vertex partitions: distance and orbit partitions, equitability, quotient
// matrices, and the two quotient-spectrum checks.

#include "oddspectra/exact_linalg.hpp"
#include "oddspectra/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace oddspectra {

class Permutation;

class Partition {
 public:
  Partition() = default;
  /// Cells must be nonempty, disjoint, and cover 0..n-1.
  Partition(std::size_t n, std::vector<std::vector<Vertex>> cells);
  static Partition from_cell_of(std::span<const std::size_t> cell_of);

  std::size_t order() const { return cell_of_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  std::size_t cell_of(Vertex v) const { return cell_of_[v]; }
  const std::vector<Vertex>& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  std::vector<std::size_t> cell_sizes() const;
  std::optional<std::size_t> singleton_cell() const;

  /// Same cells up to renumbering.
  bool same_cells(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<std::size_t> cell_of_;
  std::vector<std::vector<Vertex>> cells_;
};

/// Cell r holds the vertices at distance r from v.
Partition distance_partition(const Graph& g, Vertex v);

/// Orbits of <gens>, cells ordered by their smallest vertex.
Partition orbit_partition(std::size_t n, std::span<const Permutation> gens);

/// b(i, j) = number of neighbours in cell j of any vertex of cell i.
using QuotientMatrix = CountMatrix;

/// Two vertices of cell i with different neighbour counts into cell j.
struct EquitableRefutation {
  std::size_t cell_i = 0, cell_j = 0;
  Vertex u = 0, u_prime = 0;
  std::int64_t count_u = 0, count_u_prime = 0;
};

using EquitableResult = std::variant<QuotientMatrix, EquitableRefutation>;

EquitableResult is_equitable(const Graph& g, const Partition& p);

struct RootCheck {
  std::int64_t root = 0;
  std::size_t quotient_multiplicity = 0;
  std::size_t adjacency_multiplicity = 0;
};

struct QuotientSpectrumVerdict {
  bool holds = true;
  Polynomial quotient_char_poly;
  std::vector<RootCheck> roots;
  int residual_degree = 0;  ///< quotient factor with no integer roots; no claim is made about it

  explicit operator bool() const { return holds; }
};

/// Every integer root of char_poly(q) is an eigenvalue of A(g).
QuotientSpectrumVerdict quotient_spectrum_subset_check(const Graph& g, const QuotientMatrix& q);

struct SingletonCellVerdict {
  bool holds = false;
  std::string reason;
  std::optional<EquitableRefutation> refutation;
  std::vector<std::int64_t> graph_eigenvalues;
  std::vector<std::int64_t> quotient_roots;
  std::size_t graph_residual = 0;

  explicit operator bool() const { return holds; }
};

/// For p the orbit partition of <witnesses> with a singleton cell: the
/// integer eigenvalues of g coincide with the integer roots of the quotient
/// and g has no non-integral remainder. The orbit closure of the witnesses
/// is recomputed and compared to p.
SingletonCellVerdict singleton_cell_full_spectrum_check(const Graph& g, const Partition& p,
                                                        std::span<const Permutation> witnesses);

}  // namespace oddspectra
