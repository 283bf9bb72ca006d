#pragma once

#include "oddspectra/graph.hpp"

#include <compare>
#include <span>
#include <vector>

namespace oddspectra {

/// Bijection on {0, ..., n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, Vertex a, Vertex b);
  /// Cycle points[0] -> points[1] -> ... -> points[0].
  static Permutation cycle(std::size_t n, std::span<const Vertex> points);

  std::size_t degree() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest point not fixed, or degree() for the identity.
  Vertex first_moved_point() const;

  /// Product with p applied first: (p * q)(x) = q(p(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace oddspectra
