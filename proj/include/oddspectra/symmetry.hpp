#pragma once

// Permutation groups, the Odd-graph symmetry generators, vertex transitivity,
// and full automorphism groups of small graphs.

#include "oddspectra/bigint.hpp"
#include "oddspectra/graph.hpp"
#include "oddspectra/permutation.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace oddspectra {

/// Permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims. Base points are the smallest moved points.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  std::vector<Vertex> base() const;
  /// Basic orbit lengths |b_i^{G_(i)}| along the chain.
  std::vector<std::size_t> basic_orbit_lengths() const;

  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Vertex base_point = 0;
    std::vector<Permutation> strong_generators;
    std::vector<Vertex> orbit;
    /// transversal[x] maps base_point to x; empty for points outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  void rebuild_orbit(Level& level) const;
  /// Sifts p through the levels starting at `from`; returns the residue and
  /// the level where sifting stopped (levels_.size() if it went through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Exact order of <gens> on `degree` points.
BigInt group_order(std::size_t degree, std::span<const Permutation> gens);

struct AutomorphismVerdict {
  bool holds = true;
  std::optional<Edge> violating_pair;  ///< u~w but p(u), p(w) not adjacent, or the reverse

  explicit operator bool() const { return holds; }
};

AutomorphismVerdict is_automorphism(const Graph& g, const Permutation& p);

/// (v, i) -> (v, 1-i) on the vertices of 2O_k.
Permutation theta_generator(int k);
/// Vertex permutation of 2O_k induced by sigma acting on {1..2k-1}; sigma is
/// given on 0-based points, point x standing for element x+1.
Permutation sigma_generator(const Permutation& sigma, int k);
/// (0 1) and (0 1 ... m-1), which generate Sym(m).
std::vector<Permutation> symmetric_group_generators(std::size_t m);
/// theta together with f_sigma over the generators of Sym(2k-1).
std::vector<Permutation> double_odd_symmetry_generators(int k);
/// Generators of the stabilizer of vertex v inside <theta, f_sigma>: the
/// f_sigma with sigma preserving v's subset, i.e. Sym(S) x Sym(S^c).
std::vector<Permutation> double_odd_vertex_stabilizer_generators(int k, Vertex v);

struct TransitivityVerdict {
  bool holds = false;
  std::size_t orbit_count = 0;
  std::optional<std::size_t> bad_generator;  ///< index of a non-automorphism generator
  AutomorphismVerdict bad_generator_witness;

  explicit operator bool() const { return holds; }
};

TransitivityVerdict is_vertex_transitive(const Graph& g, std::span<const Permutation> gens);

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultAutomorphismLimit = 70;

/// Aut(g) by equitable refinement and backtracking over individualized
/// vertices. Throws CapacityError when g has more than max_vertices vertices.
PermGroup full_automorphism_group(const Graph& g,
                                  std::size_t max_vertices = kDefaultAutomorphismLimit);

}  // namespace oddspectra
