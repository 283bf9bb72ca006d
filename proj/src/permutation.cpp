#include "oddspectra/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace oddspectra {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::transposition(std::size_t n, Vertex a, Vertex b) {
  if (a >= n || b >= n) throw std::invalid_argument("transposition point out of range");
  Permutation p = identity(n);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::cycle(std::size_t n, std::span<const Vertex> points) {
  std::vector<Vertex> image = identity(n).image_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= n) throw std::invalid_argument("cycle point out of range");
    image[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv.image_[image_[v]] = v;
  return inv;
}

bool Permutation::is_identity() const { return first_moved_point() == image_.size(); }

Vertex Permutation::first_moved_point() const {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return v;
  return static_cast<Vertex>(image_.size());
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degrees differ");
  Permutation r;
  r.image_.resize(p.degree());
  for (Vertex v = 0; v < p.degree(); ++v) r.image_[v] = q.image_[p.image_[v]];
  return r;
}

}  // namespace oddspectra
