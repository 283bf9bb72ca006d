#include "oddspectra/symmetry.hpp"

#include <algorithm>

namespace oddspectra {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree differs from group degree");
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base_point] = Permutation::identity(degree_);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Vertex x = level.orbit[i];
    for (const auto& s : level.strong_generators) {
      const Vertex y = s(x);
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Vertex x = p(levels_[i].base_point);
    const auto& u = levels_[i].transversal[x];
    if (!u) return {std::move(p), i};
    p = p * u->inverse();
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  levels_.clear();
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    const bool moves_base = std::any_of(levels_.begin(), levels_.end(),
                                        [&](const Level& l) { return g(l.base_point) != l.base_point; });
    if (!moves_base) levels_.push_back(Level{g.first_moved_point(), {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = !g.is_identity();
      for (std::size_t j = 0; j < i && fixes_prefix; ++j)
        fixes_prefix = g(levels_[j].base_point) == levels_[j].base_point;
      if (fixes_prefix) levels_[i].strong_generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  // Holt's formulation: verify Schreier generators from the deepest level up,
  // dropping back down whenever a new strong generator appears.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      const Vertex beta = level.orbit[oi];
      for (std::size_t si = 0; si < level.strong_generators.size(); ++si) {
        const Permutation& s = level.strong_generators[si];
        Permutation h = *level.transversal[beta] * s * level.transversal[s(beta)]->inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size())
          levels_.push_back(Level{residue.first_moved_point(), {}, {}, {}});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].strong_generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& l : levels_) order_ *= l.orbit.size();
}

std::vector<Vertex> PermGroup::base() const {
  std::vector<Vertex> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

BigInt group_order(std::size_t degree, std::span<const Permutation> gens) {
  return PermGroup(degree, std::vector<Permutation>(gens.begin(), gens.end())).order();
}

}  // namespace oddspectra
