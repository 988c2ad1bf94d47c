#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "domlocal/gen.hpp"
#include "domlocal/phase1.hpp"

using namespace domlocal;

namespace {

// Independent reference for neighborhood dominatability: exhaustive subsets
// of V \ {v} up to size k, on the whole graph.
bool brute_dominatable(const Graph& g, int v, int k) {
  std::vector<int> open = g.neighbors(v);
  if (open.empty()) return true;
  std::vector<int> pool;
  for (int u : g.vertices())
    if (u != v) pool.push_back(u);
  int n = static_cast<int>(pool.size());
  std::function<bool(int, int, std::vector<int>)> rec = [&](int from, int left,
                                                            std::vector<int> uncovered) -> bool {
    if (uncovered.empty()) return true;
    if (left == 0) return false;
    for (int i = from; i < n; ++i) {
      int c = pool[i];
      std::vector<int> cl = g.neighbors(c);
      cl.push_back(c);
      std::sort(cl.begin(), cl.end());
      std::vector<int> rest;
      for (int u : uncovered)
        if (!std::binary_search(cl.begin(), cl.end(), u)) rest.push_back(u);
      if (rest.size() < uncovered.size() && rec(i + 1, left - 1, rest)) return true;
    }
    return false;
  };
  return rec(0, k, open);
}

}  // namespace

TEST_CASE("star center: a big neighborhood of leaves is undominatable") {
  std::vector<std::pair<int, int>> star;
  for (int i = 1; i <= 8; ++i) star.emplace_back(0, i);
  Graph g = Graph::from_edges(star);
  States st(g);
  Ball b(g, st, 0, 2);
  CHECK_FALSE(neighborhood_dominatable(b, 0, 7));  // each leaf only covers itself
  CHECK(neighborhood_dominatable(b, 0, 8));        // all leaves themselves
}

TEST_CASE("degree-0 vertex is dominatable by the empty set") {
  Graph g = Graph::from_edges({{1, 2}}, {0});
  States st(g);
  Ball b(g, st, 0, 2);
  CHECK(neighborhood_dominatable(b, 0, 0));
}

TEST_CASE("w^j in G(gamma,m): dominatable by exactly gamma vertices") {
  for (int gamma : {3, 4}) {
    Graph g = g_gamma_m(gamma, 6);
    States st(g);
    int wj = gamma;  // first w vertex
    Ball b(g, st, wj, 2);
    CHECK(neighborhood_dominatable(b, wj, gamma));
    CHECK_FALSE(neighborhood_dominatable(b, wj, gamma - 1));
  }
}

TEST_CASE("ball decision agrees with whole-graph brute force") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_planar(16, seed);
    States st(g);
    for (int v : g.vertices()) {
      Ball b(g, st, v, 2);
      for (int k : {1, 3}) {
        CHECK(neighborhood_dominatable(b, v, k) == brute_dominatable(g, v, k));
      }
    }
  }
}

TEST_CASE("phase1 on an edgeless graph selects nothing") {
  Graph g = Graph::from_edges({}, {0, 1, 2, 3});
  States st(g);
  RoundTrace trace;
  CHECK(phase1(g, st, preset_planar().params, trace).empty());
}

TEST_CASE("phase1 on G(gamma,m) with nn=2 selects every w^j") {
  ClassParams params = preset_planar(1.0).params;  // nn = 2, threshold 3
  Graph g = g_gamma_m(4, 8);
  States st(g);
  RoundTrace trace;
  std::vector<int> d1 = phase1(g, st, params, trace);
  for (int j = 0; j < 8; ++j) {
    int wj = 4 + j;
    CHECK(std::binary_search(d1.begin(), d1.end(), wj));
    CHECK(st.at(wj).color == Color::Green);
  }
}

TEST_CASE("phase1 charges 2 rounds plus a recolor") {
  Graph g = gen_planar(30, 3);
  States st(g);
  RoundTrace trace;
  phase1(g, st, preset_planar().params, trace);
  REQUIRE(trace.phases.size() == 2);
  CHECK(trace.phases[0] == std::pair<std::string, int>{"phase1", 2});
  CHECK(trace.phases[1] == std::pair<std::string, int>{"phase1_recolor", 1});
}

TEST_CASE("after phase1 every unselected vertex is dominatable") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = gen_planar(25, seed);
    States st(g);
    RoundTrace trace;
    ClassParams params = preset_planar().params;
    std::vector<int> d1 = phase1(g, st, params, trace);
    for (int v : g.vertices()) {
      if (std::binary_search(d1.begin(), d1.end(), v)) continue;
      CHECK(brute_dominatable(g, v, 2 * params.nn - 1));
    }
  }
}

TEST_CASE("locality: order-preserving relabeling relabels the output") {
  Graph g = gen_planar(22, 5);
  auto relabel = [](int v) { return 3 * v + 7; };
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(relabel(u), relabel(v));
  std::vector<int> iso;
  for (int v : g.vertices()) iso.push_back(relabel(v));
  Graph h = Graph::from_edges(edges, iso);

  ClassParams params = preset_planar().params;
  States sg(g), sh(h);
  RoundTrace tg, th;
  std::vector<int> dg = phase1(g, sg, params, tg);
  std::vector<int> dh = phase1(h, sh, params, th);
  std::vector<int> dg_relabeled;
  for (int v : dg) dg_relabeled.push_back(relabel(v));
  CHECK(dg_relabeled == dh);
  CHECK(tg.total() == th.total());
}
