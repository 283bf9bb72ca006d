#include "oddspectra/symmetry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace oddspectra;

namespace {

// Closure of <gens> by breadth-first multiplication; independent order oracle.
std::size_t brute_force_order(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = p * g;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Number of vertex permutations preserving adjacency, over all n!.
std::size_t brute_force_automorphism_count(const Graph& g) {
  std::vector<Vertex> image(g.order());
  std::iota(image.begin(), image.end(), Vertex{0});
  std::size_t count = 0;
  do {
    if (is_automorphism(g, Permutation(image))) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      if (coin(rng)) g.add_edge(u, w);
  return g;
}

Graph petersen_with_pendant() {
  Graph g = odd_graph(3);
  std::vector<Edge> edges = g.edges();
  edges.push_back({0, 10});
  return Graph(11, edges);
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  const std::vector<Vertex> pts{0, 1, 2};
  const Permutation c = Permutation::cycle(4, pts);
  CHECK(c.image() == std::vector<Vertex>{1, 2, 0, 3});
  CHECK((c * c * c).is_identity());
  CHECK((c * c.inverse()).is_identity());
  const Permutation t = Permutation::transposition(4, 1, 3);
  // p * q applies p first.
  CHECK((c * t)(0) == t(c(0)));
  CHECK((c * t)(0) == 3);
  CHECK(t.first_moved_point() == 1);
  CHECK(Permutation::identity(5).first_moved_point() == 5);
}

TEST_CASE("non-automorphisms are reported with a pair") {
  const Graph g = petersen_with_pendant();
  const auto verdict = is_automorphism(g, Permutation::transposition(11, 0, 1));
  REQUIRE_FALSE(verdict);
  REQUIRE(verdict.violating_pair);
  const auto [u, w] = *verdict.violating_pair;
  const Permutation p = Permutation::transposition(11, 0, 1);
  CHECK(g.adjacent(u, w) != g.adjacent(p(u), p(w)));
  CHECK_THROWS_AS(is_automorphism(g, Permutation::identity(10)), std::invalid_argument);
}

TEST_CASE("theta and f_sigma generators") {
  const Permutation theta = theta_generator(2);
  CHECK(theta.image() == std::vector<Vertex>{3, 4, 5, 0, 1, 2});
  CHECK((theta * theta).is_identity());

  CHECK(sigma_generator(Permutation::identity(5), 3).is_identity());
  // Swapping elements 1 and 2 swaps {1} and {2} on both sides of 2O_2.
  const Permutation s = sigma_generator(Permutation::transposition(3, 0, 1), 2);
  CHECK(s.image() == std::vector<Vertex>{1, 0, 2, 4, 3, 5});
  CHECK_THROWS(sigma_generator(Permutation::identity(4), 3));

  std::mt19937 rng(11);
  for (int k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const Permutation a = random_permutation(2 * k - 1, rng);
      const Permutation b = random_permutation(2 * k - 1, rng);
      CHECK(sigma_generator(a, k) * sigma_generator(b, k) == sigma_generator(a * b, k));
    }
  }
}

TEST_CASE("symmetry generators are automorphisms of 2O_k and F(2O_k)") {
  for (int k = 2; k <= 5; ++k) {
    const Graph gamma = double_odd_graph(k);
    const Graph lambda = folded_double_odd(k);
    const auto gens = double_odd_symmetry_generators(k);
    CHECK(gens.size() == 3);
    for (const auto& g : gens) {
      CHECK(is_automorphism(gamma, g));
      CHECK(is_automorphism(lambda, g));
    }
    const Permutation theta = theta_generator(k);
    for (std::size_t i = 1; i < gens.size(); ++i) CHECK(theta * gens[i] == gens[i] * theta);
  }
}

TEST_CASE("group orders") {
  const Permutation id = Permutation::identity(5);
  CHECK(group_order(5, std::span(&id, 1)) == 1);
  CHECK(group_order(5, {}) == 1);
  CHECK(PermGroup(6, symmetric_group_generators(6)).order() == 720);

  const BigInt expected[] = {12, 240, 10080, 725760};
  for (int k = 2; k <= 5; ++k) {
    const auto gens = double_odd_symmetry_generators(k);
    const PermGroup group(2 * odd_graph_subsets(k).size(), gens);
    CHECK(group.order() == expected[k - 2]);
    CHECK(group.order() == 2 * factorial(2 * k - 1));
    BigInt product = 1;
    for (auto len : group.basic_orbit_lengths()) product *= len;
    CHECK(product == group.order());
  }

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<Permutation> gens;
    const int count = 1 + trial % 3;
    for (int i = 0; i < count; ++i) {
      // Mix in sparse permutations so that proper subgroups show up.
      if (trial % 2) {
        std::uniform_int_distribution<Vertex> pt(0, static_cast<Vertex>(n - 1));
        Vertex a = pt(rng), b = pt(rng);
        gens.push_back(a == b ? Permutation::identity(n) : Permutation::transposition(n, a, b));
      } else {
        gens.push_back(random_permutation(n, rng));
      }
    }
    CHECK(group_order(n, gens) == brute_force_order(n, gens));
  }
}

TEST_CASE("group membership") {
  const PermGroup rotations(6, {Permutation::cycle(6, std::vector<Vertex>{0, 1, 2, 3, 4, 5})});
  CHECK(rotations.order() == 6);
  CHECK(rotations.contains(Permutation::cycle(6, std::vector<Vertex>{0, 2, 4}) *
                           Permutation::cycle(6, std::vector<Vertex>{1, 3, 5})));
  CHECK_FALSE(rotations.contains(Permutation::transposition(6, 0, 1)));
  CHECK(rotations.contains(Permutation::identity(6)));

  const auto gens = double_odd_symmetry_generators(3);
  const PermGroup group(20, gens);
  const Permutation product = gens[0] * gens[2] * gens[1] * gens[2];
  CHECK(group.contains(product));
  CHECK_FALSE(group.contains(Permutation::transposition(20, 0, 1)));
}

TEST_CASE("vertex transitivity") {
  for (int k = 2; k <= 5; ++k) {
    const auto verdict = is_vertex_transitive(folded_double_odd(k), double_odd_symmetry_generators(k));
    CHECK(verdict);
    CHECK(verdict.orbit_count == 1);
  }

  const Graph p3 = path_graph(3);
  const Permutation flip = Permutation::transposition(3, 0, 2);
  const auto path = is_vertex_transitive(p3, std::span(&flip, 1));
  CHECK_FALSE(path);
  CHECK(path.orbit_count == 2);

  const Permutation rotate = Permutation::cycle(6, std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(is_vertex_transitive(cycle_graph(6), std::span(&rotate, 1)));

  const std::vector<Permutation> gens{rotate, Permutation::transposition(6, 0, 1)};
  const auto bad = is_vertex_transitive(cycle_graph(6), gens);
  CHECK_FALSE(bad);
  CHECK(bad.bad_generator == std::size_t{1});
  CHECK_FALSE(bad.bad_generator_witness);
}

TEST_CASE("full automorphism groups of known graphs") {
  CHECK(full_automorphism_group(complete_bipartite_graph(3, 3)).order() == 72);
  CHECK(full_automorphism_group(odd_graph(3)).order() == 120);
  CHECK(full_automorphism_group(cycle_graph(7)).order() == 14);
  CHECK(full_automorphism_group(complete_graph(5)).order() == 120);
  CHECK(full_automorphism_group(Graph(4)).order() == 24);
  CHECK(full_automorphism_group(Graph(0)).order() == 1);
  CHECK(full_automorphism_group(petersen_with_pendant()).order() == 12);

  const Graph f3 = folded_double_odd(3);
  const PermGroup aut = full_automorphism_group(f3);
  CHECK(aut.order() == 240);
  for (const auto& g : aut.generators()) CHECK(is_automorphism(f3, g));
  for (const auto& g : double_odd_symmetry_generators(3)) CHECK(aut.contains(g));
}

TEST_CASE("automorphism group order is invariant under relabeling") {
  std::mt19937 rng(23);
  for (const Graph& g : {folded_double_odd(3), double_odd_graph(3), odd_graph(3)}) {
    const BigInt reference = full_automorphism_group(g).order();
    for (int trial = 0; trial < 3; ++trial) {
      const Permutation p = random_permutation(g.order(), rng);
      CHECK(full_automorphism_group(g.relabeled(p.image())).order() == reference);
    }
  }
}

TEST_CASE("automorphism search agrees with brute force on small random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Graph g = random_graph(n, trial % 3 == 0 ? 0.3 : 0.5, rng);
    const PermGroup aut = full_automorphism_group(g);
    CHECK(aut.order() == brute_force_automorphism_count(g));
    for (const auto& p : aut.generators()) CHECK(is_automorphism(g, p));
  }
}

TEST_CASE("automorphism search capacity") {
  CHECK_THROWS_AS(full_automorphism_group(double_odd_graph(5)), CapacityError);
  CHECK_THROWS_AS(full_automorphism_group(cycle_graph(12), 10), CapacityError);
  CHECK(full_automorphism_group(cycle_graph(12), 12).order() == 24);
}

TEST_CASE("Aut(F(2O_k)) contains the embedded 2(2k-1)! subgroup") {
  for (int k = 2; k <= 4; ++k) {
    const BigInt order = full_automorphism_group(folded_double_odd(k)).order();
    const BigInt embedded = 2 * factorial(2 * k - 1);
    CHECK(order % embedded == 0);
    if (k == 2) CHECK(order == 72);
    else CHECK(order == embedded);
  }
}
