#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domlocal/biclique.hpp"
#include "domlocal/gen.hpp"
#include "domlocal/oracle.hpp"
#include "domlocal/runtime.hpp"

using namespace domlocal;

TEST_CASE("determinism: same (n, seed) gives the identical graph") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(gen_planar(40, seed).edges() == gen_planar(40, seed).edges());
    CHECK(gen_outerplanar(30, seed).edges() == gen_outerplanar(30, seed).edges());
    CHECK(gen_girth5_planar(30, seed).edges() == gen_girth5_planar(30, seed).edges());
    CHECK(gen_bipartite_planar(30, seed).edges() == gen_bipartite_planar(30, seed).edges());
    CHECK(gen_sparse_er(30, 3.0, seed).edges() == gen_sparse_er(30, 3.0, seed).edges());
  }
}

TEST_CASE("planar generator is certified planar") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) CHECK(is_planar(gen_planar(50, seed)));
}

TEST_CASE("triangle-free planar generator: planar, no triangles") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = gen_triangle_free_planar(18, seed);
    CHECK(is_planar(g));
    CHECK(girth(g) >= 4);  // triangle-free (or forest, girth = INT_MAX)
  }
}

TEST_CASE("bipartite planar generator: bipartite and planar") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = gen_bipartite_planar(40, seed);
    CHECK(is_planar(g));
    CHECK(is_bipartite(g));
  }
}

TEST_CASE("girth-5 generator: planar with girth at least 5") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = gen_girth5_planar(35, seed);
    CHECK(is_planar(g));
    CHECK(girth(g) >= 5);
  }
}

TEST_CASE("outerplanar generator is certified outerplanar") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) CHECK(is_outerplanar(gen_outerplanar(40, seed)));
}

TEST_CASE("all class generators exclude K_{3,3} as a subgraph") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK_FALSE(contains_biclique(gen_planar(40, seed), 3, 3));
    CHECK_FALSE(contains_biclique(gen_outerplanar(40, seed), 3, 3));
  }
}

TEST_CASE("g_gamma_m(1,1) is a triangle") {
  Graph g = g_gamma_m(1, 1);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(girth(g) == 3);
}

TEST_CASE("g_gamma_m shape and 2-degeneracy") {
  Graph g = g_gamma_m(3, 5);
  CHECK(g.vertex_count() == 3 + 5 + 15);
  // v1 is adjacent to every w^j
  for (int j = 1; j <= 5; ++j) CHECK(g.has_edge(0, 3 + j - 1));
  CHECK(degeneracy_order(g).second == 2);
  CHECK(degeneracy_order(g_gamma_m(4, 7)).second == 2);
}

TEST_CASE("g_gamma_m(3,5): {v1,v2,v3} dominates; exact gamma is 3") {
  Graph g = g_gamma_m(3, 5);
  std::vector<int> vs{0, 1, 2};
  CHECK(dominates(g, vs));
  auto sol = exact_min_dominating_set(g, g.vertices());
  CHECK(sol.size() == 3);
}

TEST_CASE("sparse ER has roughly the requested density") {
  Graph g = gen_sparse_er(500, 4.0, 9);
  CHECK(g.vertex_count() == 500);
  CHECK(g.edge_count() > 600);   // expectation ~1000
  CHECK(g.edge_count() < 1400);
}
