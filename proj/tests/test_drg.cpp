#include "oddspectra/drg.hpp"
#include "oddspectra/exact_linalg.hpp"

#include <doctest.h>

using namespace oddspectra;

namespace {

IntersectionArray array_of(const Graph& g) {
  auto result = intersection_array(g);
  REQUIRE(std::holds_alternative<IntersectionArray>(result));
  return std::get<IntersectionArray>(result);
}

IntersectionArray make_array(std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
  IntersectionArray arr;
  arr.d = b.size();
  arr.k = b.front();
  arr.b = std::move(b);
  arr.c = std::move(c);
  return arr;
}

// K3 x K2: 3-regular and vertex-transitive but a_1 depends on the edge.
Graph triangular_prism() {
  Graph g(6);
  for (Vertex i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, 3 + i);
  }
  return g;
}

}  // namespace

TEST_CASE("computed intersection arrays") {
  CHECK(array_of(odd_graph(3)) == make_array({3, 2}, {1, 1}));
  CHECK(array_of(double_odd_graph(3)) == make_array({3, 2, 2, 1, 1}, {1, 1, 2, 2, 3}));
  CHECK(array_of(cycle_graph(6)) == make_array({2, 1, 1}, {1, 1, 2}));
  CHECK(array_of(complete_graph(3)) == make_array({2}, {1}));
  CHECK(to_string(array_of(odd_graph(3))) == "{3,2;1,1}");
  CHECK(array_of(odd_graph(3)).a() == std::vector<std::int64_t>{0, 0, 2});
}

TEST_CASE("predicted arrays") {
  const auto o3 = predicted_odd_array(3);
  CHECK(o3 == make_array({3, 2}, {1, 1}));
  CHECK(o3.a().back() == 2);
  const auto o4 = predicted_odd_array(4);
  CHECK(o4 == make_array({4, 3, 3}, {1, 1, 2}));
  CHECK(o4.a().back() == 2);
  const auto o2 = predicted_odd_array(2);
  CHECK(o2 == make_array({2, 1}, {1, 1}));
  CHECK(o2.a().back() == 1);

  CHECK(predicted_double_odd_array(2) == make_array({2, 1, 1}, {1, 1, 2}));
  CHECK(predicted_double_odd_array(3) == make_array({3, 2, 2, 1, 1}, {1, 1, 2, 2, 3}));
  for (int k = 2; k <= 12; ++k) {
    const auto arr = predicted_double_odd_array(k);
    CHECK(arr.valid());
    CHECK(arr.d == static_cast<std::size_t>(2 * k - 1));
    for (auto a : arr.a()) CHECK(a == 0);
  }
  CHECK_THROWS(predicted_odd_array(1));
}

TEST_CASE("Odd graph arrays against the closed form") {
  // O_2 = K_3 has diameter 1, so the closed form's leading (1, 1) cannot match.
  const auto k3 = array_of(odd_graph(2));
  CHECK(k3 == make_array({2}, {1}));
  CHECK(k3.a() == std::vector<std::int64_t>{0, 1});
  CHECK_FALSE(k3 == predicted_odd_array(2));
  for (int k = 3; k <= 5; ++k) CHECK(array_of(odd_graph(k)) == predicted_odd_array(k));
}

TEST_CASE("2O_k arrays match the closed form") {
  for (int k = 2; k <= 5; ++k) {
    const auto arr = array_of(double_odd_graph(k));
    CHECK(arr == predicted_double_odd_array(k));
    CHECK(arr.d == static_cast<std::size_t>(2 * k - 1));
  }
}

TEST_CASE("bipartite double distance-regularity criterion") {
  const auto petersen = bipartite_double_drg_criterion(make_array({3, 2}, {1, 1}));
  CHECK(petersen.holds);
  CHECK(petersen.predicted_diameter == 5);

  const auto k3 = bipartite_double_drg_criterion(make_array({2}, {1}));
  CHECK(k3.holds);
  CHECK(k3.predicted_diameter == 3);
  CHECK(all_pairs_distances(bipartite_double(complete_graph(3))).diameter == 3);

  const auto c5 = bipartite_double_drg_criterion(array_of(cycle_graph(5)));
  CHECK(array_of(cycle_graph(5)) == make_array({2, 1}, {1, 1}));
  CHECK(c5.holds);
  CHECK(c5.predicted_diameter == 5);
  const Graph c10 = bipartite_double(cycle_graph(5));
  CHECK(all_pairs_distances(c10).diameter == 5);
  CHECK(std::holds_alternative<IntersectionArray>(intersection_array(c10)));

  // K4 has a_1 = 2 > 0 at d = 1, so the criterion holds; K4's double is K4,4 minus a matching.
  CHECK(bipartite_double_drg_criterion(array_of(complete_graph(4))).holds);
  // 2O_3 has all a_r = 0, so it fails.
  CHECK_FALSE(bipartite_double_drg_criterion(array_of(double_odd_graph(3))).holds);
}

TEST_CASE("intersection matrices") {
  IntMatrix petersen(3, 3);
  petersen << 0, 3, 0, 1, 0, 2, 0, 1, 2;
  CHECK(intersection_matrix(make_array({3, 2}, {1, 1})) == petersen);
  IntMatrix k2(2, 2);
  k2 << 0, 1, 1, 0;
  CHECK(intersection_matrix(make_array({1}, {1})) == k2);
}

TEST_CASE("intersection matrix of 2O_k has simple roots +-(k-i)") {
  for (int k = 2; k <= 12; ++k) {
    const auto roots = integer_roots(char_poly(intersection_matrix(predicted_double_odd_array(k))), k);
    CHECK(roots.residual_degree == 0);
    std::vector<RootMultiplicity> expected;
    for (int v = -k; v <= k; ++v)
      if (v != 0) expected.push_back({v, 1});
    CHECK(roots.roots == expected);
  }
}

TEST_CASE("intersection-matrix roots are the distinct eigenvalues of 2O_k") {
  for (int k = 2; k <= 4; ++k) {
    const Graph g = double_odd_graph(k);
    const auto roots = integer_roots(char_poly(intersection_matrix(array_of(g))), k);
    std::vector<std::int64_t> root_set;
    for (const auto& r : roots.roots) root_set.push_back(r.root);
    CHECK(root_set == integral_spectrum(g).eigenvalues());
  }
}

TEST_CASE("non-distance-regular graphs are refuted with witnesses") {
  const Graph path = path_graph(4);
  const auto p = intersection_array(path);
  REQUIRE(std::holds_alternative<DrgRefutation>(p));
  const auto& rp = std::get<DrgRefutation>(p);
  CHECK(rp.kind == DrgRefutation::Kind::irregular);
  CHECK(path.degree(rp.u) != path.degree(rp.v));

  const Graph prism = triangular_prism();
  const auto q = intersection_array(prism);
  REQUIRE(std::holds_alternative<DrgRefutation>(q));
  const auto& r = std::get<DrgRefutation>(q);
  CHECK(r.kind == DrgRefutation::Kind::non_constant);
  const auto dt = all_pairs_distances(prism);
  CHECK(dt(r.u, r.v) == r.distance);
  CHECK(dt(r.ref_u, r.ref_v) == r.distance);
  auto count = [&](Vertex u, Vertex v) {
    std::int64_t n = 0;
    const auto target = r.parameter == 'b' ? r.distance + 1 : r.distance - 1;
    for (Vertex w : prism.neighbors(v)) n += dt(u, w) == target;
    return n;
  };
  CHECK(count(r.u, r.v) == r.value);
  CHECK(count(r.ref_u, r.ref_v) == r.reference_value);
  CHECK(r.value != r.reference_value);

  Graph two_triangles(6);
  for (Vertex i = 0; i < 3; ++i) {
    two_triangles.add_edge(i, (i + 1) % 3);
    two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  const auto t = intersection_array(two_triangles);
  REQUIRE(std::holds_alternative<DrgRefutation>(t));
  CHECK(std::get<DrgRefutation>(t).kind == DrgRefutation::Kind::disconnected);
}
