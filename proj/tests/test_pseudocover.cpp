#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "domlocal/gen.hpp"
#include "domlocal/pseudocover.hpp"

using namespace domlocal;

namespace {

// kappa = 2, mu = 8, nu = 16: small enough to exercise the machinery on
// hand-built graphs.
ClassParams tiny_params() { return ClassParams{1, 1, 1, 2, 2, 1.0}; }

// Union of neighborhoods around a random start until the target size is hit;
// this is how the sampled W sets of the lambda-strong bound are drawn.
std::vector<int> sample_neighborhood_union(const Graph& g, Rng& rng, std::size_t want) {
  std::set<int> w;
  std::vector<int> order = g.vertices();
  std::size_t at = rng.below(order.size());
  for (std::size_t step = 0; step < order.size() && w.size() < want; ++step) {
    int v = order[(at + step) % order.size()];
    for (int u : g.neighbors(v)) w.insert(u);
  }
  return {w.begin(), w.end()};
}

}  // namespace

TEST_CASE("lambda-strong: star leaves qualify iff the target is small") {
  std::vector<std::pair<int, int>> star;
  for (int i = 1; i <= 6; ++i) star.emplace_back(0, i);
  Graph g = Graph::from_edges(star);
  ClassParams p = tiny_params();  // kappa 2
  SUBCASE("|W| = 2 <= kappa: every leaf in W qualifies") {
    auto strong = lambda_strong_vertices(g, {1, 2}, p);
    CHECK(std::binary_search(strong.begin(), strong.end(), 1));
    CHECK(std::binary_search(strong.begin(), strong.end(), 2));
  }
  SUBCASE("|W| = 4 > kappa: leaves hit only themselves and drop out") {
    auto strong = lambda_strong_vertices(g, {1, 2, 3, 4}, p);
    CHECK(strong == std::vector<int>{0});  // only the center
  }
}

TEST_CASE("lambda-strong: empty W qualifies everything (callers guard)") {
  Graph g = Graph::from_edges({{0, 1}});
  CHECK(lambda_strong_vertices(g, {}, tiny_params()).size() == 2);
}

TEST_CASE("lambda-strong count below kappa^2 on planar samples") {
  ClassParams p = preset_planar().params;  // kappa 6, mu 72
  Rng rng(42);
  int tested = 0;
  for (std::uint64_t seed = 1; seed <= 40 && tested < 25; ++seed) {
    Graph g = gen_planar(300, seed);
    auto w = sample_neighborhood_union(g, rng, p.mu());
    if (static_cast<long long>(w.size()) < p.mu()) continue;
    ++tested;
    auto strong = lambda_strong_vertices(g, w, p);
    CHECK(static_cast<long long>(strong.size()) <
          static_cast<long long>(p.kappa()) * p.kappa());
  }
  CHECK(tested >= 10);
}

TEST_CASE("from_cover: single covering vertex yields the singleton sequence") {
  std::vector<std::pair<int, int>> star;
  std::vector<int> w;
  for (int i = 1; i <= 20; ++i) {
    star.emplace_back(0, i);
    w.push_back(i);
  }
  Graph g = Graph::from_edges(star);
  PseudoCover pc = pseudocover_from_cover(g, w, {0}, tiny_params());
  CHECK(pc.sequence == std::vector<int>{0});
  CHECK(check_pseudocover(g, pc, tiny_params()));
}

TEST_CASE("from_cover: two balanced halves come out larger-first") {
  // center 100 covers 12 leaves, center 200 covers 10 leaves
  std::vector<std::pair<int, int>> e;
  std::vector<int> w;
  for (int i = 0; i < 12; ++i) {
    e.emplace_back(100, i);
    w.push_back(i);
  }
  for (int i = 20; i < 30; ++i) {
    e.emplace_back(200, i);
    w.push_back(i);
  }
  Graph g = Graph::from_edges(e);
  PseudoCover pc = pseudocover_from_cover(g, w, {200, 100}, tiny_params());
  CHECK(pc.sequence == std::vector<int>{100, 200});
  CHECK(check_pseudocover(g, pc, tiny_params()));
}

TEST_CASE("from_cover: violated preconditions are contract errors") {
  Graph g = Graph::from_edges({{0, 1}, {0, 2}});
  CHECK_THROWS_AS(pseudocover_from_cover(g, {1, 2}, {0}, tiny_params()), contract_error);  // |W| < nu
  std::vector<std::pair<int, int>> star;
  std::vector<int> w;
  for (int i = 1; i <= 20; ++i) {
    star.emplace_back(0, i);
    w.push_back(i);
  }
  Graph h = Graph::from_edges(star);
  CHECK_THROWS_AS(pseudocover_from_cover(h, w, {1}, tiny_params()), contract_error);  // no cover
}

TEST_CASE("from_cover satisfies all four clauses on random flower instances") {
  ClassParams p = tiny_params();
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    // two centers, each leaf attached to one or both: planar, |Z| = kappa
    int leaves = 16 + static_cast<int>(rng.below(20));
    std::vector<std::pair<int, int>> e;
    std::vector<int> w;
    for (int i = 0; i < leaves; ++i) {
      int which = static_cast<int>(rng.below(3));
      if (which == 0 || which == 2) e.emplace_back(1000, i);
      if (which == 1 || which == 2) e.emplace_back(2000, i);
      w.push_back(i);
    }
    Graph g = Graph::from_edges(e);
    PseudoCover pc = pseudocover_from_cover(g, w, {1000, 2000}, p);
    CHECK(check_pseudocover(g, pc, p));
  }
}

TEST_CASE("enumeration finds the covering singleton") {
  std::vector<std::pair<int, int>> star;
  std::vector<int> w;
  for (int i = 1; i <= 8; ++i) {  // |W| = mu exactly
    star.emplace_back(0, i);
    w.push_back(i);
  }
  Graph g = Graph::from_edges(star);
  auto covers = enumerate_pseudocovers(g, w, tiny_params());
  bool found = false;
  for (const auto& pc : covers)
    if (pc.sequence == std::vector<int>{0}) found = true;
  CHECK(found);
  for (const auto& pc : covers) CHECK(check_pseudocover(g, pc, tiny_params()));
}

TEST_CASE("every enumerated pseudo-cover passes the independent recheck") {
  ClassParams p = tiny_params();
  Rng rng(13);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_planar(60, seed, 0.1);
    auto w = sample_neighborhood_union(g, rng, 12);
    if (static_cast<long long>(w.size()) <= p.mu()) continue;
    auto covers = enumerate_pseudocovers(g, w, p);
    CHECK(static_cast<double>(covers.size()) < std::pow(p.kappa(), 2.0 * p.kappa()));
    for (const auto& pc : covers) CHECK(check_pseudocover(g, pc, p));
  }
}

TEST_CASE("greedy sequence appears among the enumerated pseudo-covers") {
  ClassParams p = tiny_params();
  std::vector<std::pair<int, int>> e;
  std::vector<int> w;
  for (int i = 0; i < 12; ++i) {
    e.emplace_back(100, i);
    w.push_back(i);
  }
  for (int i = 20; i < 30; ++i) {
    e.emplace_back(200, i);
    w.push_back(i);
  }
  Graph g = Graph::from_edges(e);
  PseudoCover greedy = pseudocover_from_cover(g, w, {100, 200}, p);
  auto covers = enumerate_pseudocovers(g, w, p);
  bool found = false;
  for (const auto& pc : covers)
    if (pc.sequence == greedy.sequence) found = true;
  CHECK(found);
}

TEST_CASE("enumeration cap aborts loudly") {
  std::vector<std::pair<int, int>> e;
  std::vector<int> w;
  for (int c = 100; c < 110; ++c)
    for (int i = 0; i < 20; ++i) e.emplace_back(c, i);
  for (int i = 0; i < 20; ++i) w.push_back(i);
  Graph g = Graph::from_edges(e);
  CHECK_THROWS_AS(enumerate_pseudocovers(g, w, tiny_params(), 3), search_aborted);
}
