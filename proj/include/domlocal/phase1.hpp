#pragma once

#include <algorithm>
#include <vector>

#include "domlocal/params.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

namespace detail {

// Exact bounded search: can `uncovered` be covered by at most k closed
// neighborhoods of vertices other than `banned`? Branches on the uncovered
// vertex with the fewest candidate dominators.
template <typename NbrFn>
bool coverable(NbrFn&& nbrs, std::vector<int> uncovered, int banned, int k) {
  if (uncovered.empty()) return true;
  if (k == 0) return false;
  // candidate dominators of u: u itself plus its neighbors, minus banned
  auto candidates = [&](int u) {
    std::vector<int> c = nbrs(u);
    c.insert(std::lower_bound(c.begin(), c.end(), u), u);
    c.erase(std::remove(c.begin(), c.end(), banned), c.end());
    return c;
  };
  int pick = uncovered[0];
  std::size_t fewest = SIZE_MAX;
  for (int u : uncovered) {
    std::size_t c = candidates(u).size();
    if (c < fewest) {
      fewest = c;
      pick = u;
    }
  }
  std::vector<int> cands = candidates(pick);
  // try high-coverage candidates first, smaller id on ties
  std::vector<std::pair<int, int>> ranked;
  for (int c : cands) {
    std::vector<int> closed = nbrs(c);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), c), c);
    int cover = 0;
    for (int u : uncovered)
      if (std::binary_search(closed.begin(), closed.end(), u)) ++cover;
    ranked.emplace_back(-cover, c);
  }
  std::sort(ranked.begin(), ranked.end());
  for (auto [negcover, c] : ranked) {
    std::vector<int> closed = nbrs(c);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), c), c);
    std::vector<int> rest;
    for (int u : uncovered)
      if (!std::binary_search(closed.begin(), closed.end(), u)) rest.push_back(u);
    if (coverable(nbrs, std::move(rest), banned, k - 1)) return true;
  }
  return false;
}

}  // namespace detail

// True iff some A with |A| <= k, v not in A, satisfies N(v) ⊆ N[A].
// All candidates lie within distance 2 of v, so a radius-2 ball suffices.
inline bool neighborhood_dominatable(const Ball& ball, int v, int k) {
  if (ball.radius() < 2) throw contract_error("neighborhood_dominatable needs a radius-2 ball");
  std::vector<int> open = ball.neighbors(v);
  if (open.empty()) return true;  // A = {} works
  if (k <= 0) return false;
  // Greedy first: cheap accept for the common case.
  {
    std::vector<int> uncovered = open;
    int used = 0;
    while (!uncovered.empty() && used < k) {
      int best = -1, bestcover = -1;
      // candidates: anything adjacent to an uncovered vertex, or that vertex itself
      std::vector<int> cands;
      for (int u : uncovered) {
        cands.push_back(u);
        for (int w : ball.neighbors(u)) cands.push_back(w);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (int c : cands) {
        if (c == v) continue;
        std::vector<int> closed = ball.neighbors(c);
        closed.insert(std::lower_bound(closed.begin(), closed.end(), c), c);
        int cover = 0;
        for (int u : uncovered)
          if (std::binary_search(closed.begin(), closed.end(), u)) ++cover;
        if (cover > bestcover) {
          bestcover = cover;
          best = c;
        }
      }
      std::vector<int> closed = ball.neighbors(best);
      closed.insert(std::lower_bound(closed.begin(), closed.end(), best), best);
      std::vector<int> rest;
      for (int u : uncovered)
        if (!std::binary_search(closed.begin(), closed.end(), u)) rest.push_back(u);
      uncovered = std::move(rest);
      ++used;
    }
    if (uncovered.empty()) return true;
  }
  auto nbrs = [&](int u) { return ball.neighbors(u); };
  return detail::coverable(nbrs, open, v, k);
}

// D1 = vertices whose open neighborhood cannot be dominated by 2*nn - 1
// others. Decided from radius-2 balls (2 rounds), then one recolor round.
inline std::vector<int> phase1(const Graph& g, States& states, const ClassParams& params,
                               RoundTrace& trace) {
  int k = 2 * params.nn - 1;
  auto picked = run_ball_phase(
      g, states, 2,
      [&](const Ball& ball) { return !neighborhood_dominatable(ball, ball.center(), k); },
      &trace, "phase1");
  std::vector<int> d1;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (picked[i]) d1.push_back(g.id_at(i));
  recolor_after_selection(g, states, d1, &trace, "phase1_recolor");
  return d1;
}

}  // namespace domlocal
