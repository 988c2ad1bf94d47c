#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "domlocal/params.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

struct GreedyIteration {
  int i = 0;        // residual degree targeted this iteration
  int picked = 0;   // |P_i|
  int red = 0;      // |R_i|, red count entering the iteration
};

// Closed-form size factor of the countdown greedy relative to the optimum:
// nabla0 * ln((2*delta_r - 4*nabla0 + 1) / (2*nabla0 + 1)) + 3*nabla0 + 1.
// Below delta_r = 3*nabla0 the log argument degenerates; the trivial bound
// |D3| <= |R| <= (delta_r + 1) * gamma_R applies instead.
inline double greedy_bound(int nabla0, long long delta_r) {
  if (delta_r < 3LL * nabla0) return static_cast<double>(delta_r + 1);
  return nabla0 * std::log((2.0 * delta_r - 4.0 * nabla0 + 1.0) / (2.0 * nabla0 + 1.0)) +
         3.0 * nabla0 + 1.0;
}

// Distributed simulation of the classical greedy: count i down from the cap;
// every RED vertex that sees a closed neighbor of residual degree exactly i
// picks the smallest-id such vertex, the picks form P_i, and a recolor
// follows. Two ball-rounds per i (degree exchange, election) plus the
// recolor. After iteration i no vertex may keep residual degree >= i; at
// i = 0 every surviving RED vertex picks itself, so domination is total.
inline std::vector<int> phase3_greedy(const Graph& g, States& states, long long cap,
                                      RoundTrace& trace,
                                      std::vector<GreedyIteration>* iterations = nullptr) {
  if (states.max_residual_degree() > cap)
    throw contract_error("phase3_greedy: cap below current max residual degree");
  std::vector<int> d3;
  std::vector<GreedyIteration> iters;
  for (long long i = cap; i >= 0; --i) {
    int red_now = static_cast<int>(states.red_vertices().size());
    long long mres = states.max_residual_degree();
    if (i > mres && i > 0) {
      // no vertex carries residual degree i, so no election can succeed;
      // charge the identical 3 rounds per skipped i without simulating
      long long skip = i - std::max(mres, 0LL);  // covers i down to mres+1
      trace.charge("phase3_greedy_skip_i" + std::to_string(i), static_cast<int>(3 * skip));
      for (long long j = i; j > i - skip; --j)
        iters.push_back({static_cast<int>(j), 0, red_now});
      i -= skip - 1;  // loop decrement lands on the first live degree
      continue;
    }
    auto picks = run_ball_phase(
        g, states, 2,
        [&](const Ball& ball) -> int {
          int v = ball.center();
          const NodeState& sv = ball.state(v);
          if (sv.color != Color::Red) return -1;
          int pick = -1;
          auto degree_of = [&](int u) {
            const NodeState& su = ball.state(u);
            if (su.color == Color::Green) return 0;
            return static_cast<int>(su.residual_neighbors.size());
          };
          if (degree_of(v) == i) pick = v;
          for (int u : ball.neighbors(v))
            if (degree_of(u) == i && (pick < 0 || u < pick)) pick = u;
          return pick;
        },
        &trace, "phase3_greedy_i" + std::to_string(i));
    std::vector<int> pi;
    for (int p : picks)
      if (p >= 0) pi.push_back(p);
    std::sort(pi.begin(), pi.end());
    pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
    recolor_after_selection(g, states, pi, &trace, "phase3_greedy_recolor");
    iters.push_back({static_cast<int>(i), static_cast<int>(pi.size()), red_now});
    d3.insert(d3.end(), pi.begin(), pi.end());
    if (i > 0 && states.max_residual_degree() >= i)
      throw contract_error("greedy countdown invariant broken at i=" + std::to_string(i));
  }
  if (!states.red_vertices().empty())
    throw contract_error("phase3_greedy left red vertices behind");
  // budget invariant: every pick retires a distinct red vertex, so the picks
  // made from iteration i onward never exceed the reds entering iteration i
  long long suffix = 0;
  for (auto it = iters.rbegin(); it != iters.rend(); ++it) {
    suffix += it->picked;
    if (suffix > it->red)
      throw contract_error("greedy budget invariant broken at i=" + std::to_string(it->i));
  }
  if (iterations) *iterations = iters;
  std::sort(d3.begin(), d3.end());
  return d3;
}

}  // namespace domlocal
