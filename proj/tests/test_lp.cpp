#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "domlocal/gen.hpp"
#include "domlocal/lp.hpp"
#include "domlocal/oracle.hpp"
#include "domlocal/phase1.hpp"
#include "domlocal/phase2_k3t.hpp"

using namespace domlocal;

namespace {

double to_double(const Rational& q) { return static_cast<double>(q); }

std::vector<int> all_vertices(const Graph& g) { return g.vertices(); }

}  // namespace

TEST_CASE("reduce_representatives collapses twins and keeps R intact") {
  // R = {0}; leaves 10, 11, 12 all see exactly {0}: one representative stays
  Graph g = Graph::from_edges({{0, 10}, {0, 11}, {0, 12}});
  ReducedInstance red = reduce_representatives(g, {0});
  CHECK(red.graph.vertex_count() == 2);
  CHECK(red.graph.has_vertex(0));
  CHECK(red.graph.has_vertex(10));  // lowest id carries the set
  REQUIRE(red.representatives.count(10) == 1);
  CHECK(red.representatives.at(10) == std::vector<int>{10, 11, 12});
}

TEST_CASE("reduce_representatives drops non-R vertices with no red neighbors") {
  Graph g = Graph::from_edges({{0, 1}, {2, 3}});
  ReducedInstance red = reduce_representatives(g, {0});
  CHECK(red.graph.vertex_count() == 2);  // 0 and its representative 1
  CHECK_FALSE(red.graph.has_vertex(2));
  CHECK_FALSE(red.graph.has_vertex(3));
}

TEST_CASE("reduction preserves the optimal R-domination size") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = gen_planar(24, seed);
    // take every third vertex as R
    std::vector<int> r;
    for (int v : g.vertices())
      if (v % 3 == 0) r.push_back(v);
    ReducedInstance red = reduce_representatives(g, r);
    auto opt_full = exact_min_dominating_set(g, r);
    auto opt_red = exact_min_dominating_set(red.graph, r);
    CHECK(opt_full.size() == opt_red.size());
  }
}

TEST_CASE("select_high_degree picks exactly the vertices above the cutoff") {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 9; ++i) e.emplace_back(0, i);  // hub of degree 9
  e.emplace_back(1, 2);
  Graph g = Graph::from_edges(e);
  CHECK(select_high_degree(g, 8.5) == std::vector<int>{0});
  CHECK(select_high_degree(g, 9.0).empty());  // strict inequality
}

TEST_CASE("solver: single edge with both endpoints red has objective near 1") {
  Graph g = Graph::from_edges({{0, 1}});
  LpStats stats;
  FractionalAssignment x = solve_cover_lp_local(g, {0, 1}, 0.5, 10, nullptr, &stats);
  CHECK(lp_feasible(g, {0, 1}, x));
  CHECK(x.objective() <= 1.5 * to_double(exact_lp_opt(g, {0, 1})) + 1e-9);
}

TEST_CASE("solver: isolated red vertex must receive x = 1") {
  Graph g = Graph::from_edges({}, {5});
  FractionalAssignment x = solve_cover_lp_local(g, {5}, 1.0, 5, nullptr, nullptr);
  CHECK(x.at(5) == doctest::Approx(1.0));
}

TEST_CASE("solver rejects degrees above the promised bound") {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 12; ++i) e.emplace_back(0, i);
  Graph g = Graph::from_edges(e);
  CHECK_THROWS_AS(solve_cover_lp_local(g, all_vertices(g), 1.0, 5, nullptr, nullptr),
                  contract_error);
}

TEST_CASE("solver meets the (1+eps) certificate against the exact LP") {
  // the acceptance run does 100 instances; a fast cross-section here
  for (double eps : {0.2, 1.0}) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      Graph g = gen_planar(40, seed);
      double maxdeg = 0;
      for (int v : g.vertices()) maxdeg = std::max(maxdeg, static_cast<double>(g.degree(v)));
      LpStats stats;
      FractionalAssignment x =
          solve_cover_lp_local(g, g.vertices(), eps, maxdeg, nullptr, &stats);
      CHECK(lp_feasible(g, g.vertices(), x));
      double opt = to_double(exact_lp_opt(g, g.vertices()));
      CHECK(x.objective() <= (1.0 + eps) * opt + 1e-6);
      CHECK(stats.dual_bound <= opt + 1e-6);  // dual really is a lower bound
    }
  }
}

TEST_CASE("solver round charge is r^2 + 2r, a function of (max_degree, eps) only") {
  double maxdeg = 26040;  // the planar-preset degree cap
  double eps = 0.2;
  int r = static_cast<int>(std::ceil(std::log(maxdeg + 1.0) / std::log(1.0 + eps)));
  int expect = r * r + 2 * r;
  for (std::uint64_t seed : {1ull, 2ull}) {
    Graph g = gen_planar(30 * static_cast<int>(seed), seed);
    RoundTrace trace;
    solve_cover_lp_local(g, g.vertices(), eps, maxdeg, &trace, nullptr);
    REQUIRE(trace.phases.size() == 1);
    CHECK(trace.phases[0].second == expect);
  }
}

TEST_CASE("rounding: an integral x = 1 singleton survives unchanged") {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 5; ++i) e.emplace_back(0, i);
  Graph g = Graph::from_edges(e);
  FractionalAssignment x;
  x.values[0] = 1.0;
  CHECK(round_bansal_umboh(g, g.vertices(), x, 3) == std::vector<int>{0});
}

TEST_CASE("rounding: uniform 1/(2d+1) weights select everything at the threshold") {
  Graph g = Graph::from_edges({{0, 1}, {1, 2}, {2, 0}});  // triangle, d = 1
  FractionalAssignment x;
  for (int v : g.vertices()) x.values[v] = 1.0 / 3.0;
  std::vector<int> out = round_bansal_umboh(g, g.vertices(), x, 1);
  CHECK(out == std::vector<int>{0, 1, 2});
}

TEST_CASE("rounding postcondition: |H u U| <= (2d+1) * objective on solver output") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = gen_planar(35, seed);
    double maxdeg = 0;
    for (int v : g.vertices()) maxdeg = std::max(maxdeg, static_cast<double>(g.degree(v)));
    FractionalAssignment x = solve_cover_lp_local(g, g.vertices(), 0.5, maxdeg, nullptr, nullptr);
    int d = orient_min_out_degree(g).max_out_degree;
    std::vector<int> out = round_bansal_umboh(g, g.vertices(), x, std::max(d, 1));
    CHECK(dominates(g, out));
    CHECK(static_cast<double>(out.size()) <=
          (2.0 * std::max(d, 1) + 1.0) * x.objective() + 1e-6);
  }
}

TEST_CASE("planar preset degree cap is 26040 at eps = 1") {
  CHECK(preset_planar(1.0).gamma_cap() == doctest::Approx(26040.0));
}

TEST_CASE("phase3_lp end to end after phases 1-2 on planar instances") {
  ClassPreset preset = preset_planar();
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = gen_planar(60, seed);
    States st(g);
    RoundTrace trace;
    std::vector<int> d1 = phase1(g, st, preset.params, trace);
    std::vector<int> d2 = phase2_k3t(g, st, preset, trace);
    Phase3Report report;
    std::vector<int> d3 = phase3_lp(g, st, preset, trace, &report);
    CHECK(report.orientation_degree == 3);
    std::vector<int> all = d1;
    all.insert(all.end(), d2.begin(), d2.end());
    all.insert(all.end(), d3.begin(), d3.end());
    CHECK(dominates(g, all));
    // everything red before phase 3 must now be dominated and recolored
    CHECK(st.red_vertices().empty());
  }
}

TEST_CASE("phase3_lp charges the same rounds whether or not reds remain") {
  ClassPreset preset = preset_planar();
  auto run = [&](const Graph& g) {
    States st(g);
    RoundTrace trace;
    phase1(g, st, preset.params, trace);
    phase2_k3t(g, st, preset, trace);
    RoundTrace t3;
    phase3_lp(g, st, preset, t3);
    return t3.total();
  };
  Graph busy = gen_planar(60, 2);
  Graph empty_after = Graph::from_edges({}, {0});  // single green-to-be vertex
  CHECK(run(busy) == run(empty_after));
}
