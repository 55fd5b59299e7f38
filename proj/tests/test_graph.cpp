#include <doctest.h>

#include <random>

#include "modcyc/errors.hpp"
#include "modcyc/generators.hpp"
#include "modcyc/graph.hpp"
#include "oracles.hpp"

using namespace modcyc;

TEST_SUITE("graph") {

TEST_CASE("from_edges rejects loops and repeated edges") {
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), ContractViolation);
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, twice), ContractViolation);
  std::vector<Edge> out_of_range{{0, 5}};
  CHECK_THROWS(Graph::from_edges(3, out_of_range));
}

TEST_CASE("external neighbourhood") {
  Graph k3 = complete_graph(3);
  CHECK(external_neighborhood(k3, VertexSet(3, {0})).members() == std::vector<Vertex>{1, 2});
  CHECK(external_neighborhood(k3, VertexSet::all(3)).empty());

  Graph pet = petersen_graph();
  auto nb = external_neighborhood(pet, VertexSet(10, {0, 1, 2, 3, 4}));
  CHECK(nb.members() == std::vector<Vertex>{5, 6, 7, 8, 9});
}

TEST_CASE("remove_vertices keeps origins") {
  Graph k4 = complete_graph(4);
  Graph k3 = remove_vertices(k4, VertexSet(4, {2}));
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(std::vector<Vertex>(k3.origin().begin(), k3.origin().end()) == std::vector<Vertex>{0, 1, 3});

  Graph same = remove_vertices(k4, VertexSet(4));
  CHECK(same == k4);

  Graph c6 = cycle_graph(6);
  Graph p5 = remove_vertices(c6, VertexSet(6, {0}));
  CHECK(p5.size() == 4);
  CHECK(diameter(p5) == 4);

  // composition: removing twice maps back to the root ids
  Graph twice = remove_vertices(p5, VertexSet(5, {0}));
  CHECK(twice.origin(0) == 2);
}

TEST_CASE("shortest path between sets") {
  Graph c6 = cycle_graph(6);
  auto same = shortest_path_between_sets(c6, VertexSet(6, {1, 2}), VertexSet(6, {2, 4}));
  REQUIRE(same);
  CHECK(same->length() == 0);
  auto p = shortest_path_between_sets(c6, VertexSet(6, {0}), VertexSet(6, {3}));
  REQUIRE(p);
  CHECK(p->length() == 3);
  CHECK(validate_path(c6, *p));

  auto blocked = shortest_path_between_sets(c6, VertexSet(6, {0}), VertexSet(6, {3}), VertexSet(6, {1, 5}));
  CHECK_FALSE(blocked);
}

TEST_CASE("shortest path length matches BFS on random trees") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 40;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    Graph tree = Graph::from_edges(n, edges);
    Vertex a = rng() % n, b = rng() % n;
    auto p = shortest_path_between_sets(tree, VertexSet(n, {a}), VertexSet(n, {b}));
    REQUIRE(p);
    CHECK(validate_path(tree, *p));
    CHECK(p->length() == oracle::bfs(tree, a)[b]);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(7)) == 1);
  CHECK(diameter(path_graph(9)) == 8);
  CHECK(diameter(petersen_graph()) == oracle::diameter(petersen_graph()));
  CHECK(diameter(petersen_graph()) == 2);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_FALSE(diameter(Graph::from_edges(4, split)));
}

TEST_CASE("witness validation") {
  Graph k3 = complete_graph(3);
  CHECK(validate_cycle(k3, CycleWitness{{0, 1, 2}}));
  CHECK_FALSE(validate_cycle(k3, CycleWitness{{0, 1, 0}}));
  CHECK_FALSE(validate_cycle(k3, CycleWitness{{0, 1}}));
  CHECK_FALSE(validate_path(path_graph(4), PathWitness{{0, 1, 2, 1}}));
  CHECK_FALSE(validate_path(path_graph(4), PathWitness{{0, 2}}));
  CHECK(validate_path(path_graph(4), PathWitness{{3}}));
  CHECK(canonical(CycleWitness{{3, 2, 1, 0}}) == CycleWitness{{0, 1, 2, 3}});
}

TEST_CASE("connected subset of prescribed size") {
  Graph c10 = cycle_graph(10);
  auto s = connected_subset_of_size(c10, 4);
  CHECK(s.size() == 4);
  CHECK(is_connected(remove_vertices(c10, s.complement())));
  CHECK(connected_subset_of_size(c10, 1).size() == 1);
  CHECK(connected_subset_of_size(c10, 10) == VertexSet::all(10));
}

}
