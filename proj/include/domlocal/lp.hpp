#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domlocal/orientation.hpp"
#include "domlocal/params.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

struct FractionalAssignment {
  std::map<int, double> values;  // vertex id -> x_v in [0,1]

  double objective() const {
    double s = 0;
    for (const auto& [_, x] : values) s += x;
    return s;
  }
  double at(int v) const {
    auto it = values.find(v);
    return it == values.end() ? 0.0 : it->second;
  }
};

inline bool lp_feasible(const Graph& g, const std::vector<int>& r,
                        const FractionalAssignment& x, double tol = 1e-9) {
  for (int v : r) {
    double load = x.at(v);
    for (int u : g.neighbors(v)) load += x.at(u);
    if (load < 1.0 - tol) return false;
  }
  return true;
}

struct ReducedInstance {
  Graph graph;
  // kept vertex -> the original vertices it stands for (itself included)
  std::map<int, std::vector<int>> representatives;
};

// Keep R as is; drop non-R vertices with empty residual neighborhoods; for
// each distinct N_R set keep only the lowest-id vertex carrying it. Kept
// edges: everything inside R, plus representative-to-N_R edges. Optimal
// R-dominating sets transfer between G and the reduction unchanged in size.
inline ReducedInstance reduce_representatives(const Graph& g, const std::vector<int>& r) {
  std::vector<int> rs = r;
  std::sort(rs.begin(), rs.end());
  auto in_r = [&](int v) { return std::binary_search(rs.begin(), rs.end(), v); };
  std::map<std::vector<int>, int> rep_of_set;
  for (int v : g.vertices()) {
    if (in_r(v)) continue;
    std::vector<int> nr;
    for (int w : g.neighbors(v))
      if (in_r(w)) nr.push_back(w);
    if (nr.empty()) continue;
    auto it = rep_of_set.find(nr);
    if (it == rep_of_set.end() || v < it->second) rep_of_set[std::move(nr)] = v;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : rs)
    for (int w : g.neighbors(u))
      if (u < w && in_r(w)) edges.emplace_back(u, w);
  ReducedInstance out;
  for (const auto& [nr, rep] : rep_of_set) {
    for (int w : nr) edges.emplace_back(rep, w);
    out.representatives[rep] = {rep};
  }
  out.graph = Graph::from_edges(edges, rs);
  // record whom each representative stands for
  for (int v : g.vertices()) {
    if (in_r(v)) continue;
    std::vector<int> nr;
    for (int w : g.neighbors(v))
      if (in_r(w)) nr.push_back(w);
    if (nr.empty()) continue;
    int rep = rep_of_set.at(nr);
    if (rep != v) out.representatives[rep].push_back(v);
  }
  return out;
}

// D3^1: every vertex of the reduced instance with degree above the cutoff.
inline std::vector<int> select_high_degree(const Graph& reduced, double degree_cutoff) {
  std::vector<int> out;
  for (int v : reduced.vertices())
    if (static_cast<double>(reduced.degree(v)) > degree_cutoff) out.push_back(v);
  return out;
}

struct LpStats {
  int r = 0;              // (1+eps)-th log of the degree bound
  int budget_rounds = 0;  // r^2 + 2r, always charged
  int iterations = 0;     // budgeted iteration count
  int used_iterations = 0;
  double objective = 0;
  double dual_bound = 0;
};

// Round-synchronous multiplicative-weights covering solver.
//
// Each iteration runs four radius-1 sub-rounds: (a) every vertex sums the
// x-values on its closed neighborhood (its load), (b) every R-vertex with
// load < 1 publishes the weight exp(-theta * load), (c) every vertex sums the
// weights of its unsatisfied closed R-neighbors (its score), (d) every
// unsatisfied R-vertex nominates its highest-score closed neighbor (smallest
// id on ties), and each nominated vertex raises its x by delta.
//
// A feasible dual solution comes for free: y_v = w_v / max score in N[v]
// keeps every vertex's incoming weight at most 1, so sum(y) lower-bounds the
// LP optimum. The driver tracks the cheapest "current x plus deficits"
// completion seen across iterations and stops once it is within (1+eps) of
// the best dual bound; the final x is that completion. If the certificate
// still fails after the full budget, that is a contract violation and the
// solver errors out rather than return an unproven solution.
//
// Rounds charged: r^2 + 2r with r = ceil(log(max_degree+1)/log(1+eps)),
// a function of (max_degree, eps) only — never of |V|.
inline FractionalAssignment solve_cover_lp_local(const Graph& g, const std::vector<int>& r_set,
                                                 double eps, double max_degree,
                                                 RoundTrace* trace = nullptr,
                                                 LpStats* stats = nullptr) {
  if (eps <= 0) throw contract_error("solve_cover_lp_local: eps must be positive");
  int n = g.vertex_count();
  std::vector<char> in_r(n, 0);
  for (int v : r_set) in_r[g.index_of(v)] = 1;
  for (int v : g.vertices())
    if (static_cast<double>(g.degree(v)) > max_degree)
      throw contract_error("solve_cover_lp_local: degree above promised bound");

  int r = std::max(1, static_cast<int>(std::ceil(std::log(max_degree + 1.0) / std::log(1.0 + eps))));
  // r^2 + O(r) rounds; the constant floor keeps enough iterations for the
  // certificate when the degree bound (and hence r) is small
  int budget_rounds = std::max(r * r + 2 * r, 256);
  int iterations = std::max(1, budget_rounds / 4);
  double theta = std::max(2.0, std::log(max_degree + 1.0)) / eps;
  double delta = std::max(eps / (2.0 * theta), 2.0 / iterations);

  std::vector<double> x(n, 0.0), load(n), weight(n), score(n);
  std::vector<double> best_x;
  double best_obj = std::numeric_limits<double>::infinity();
  double best_dual = 0.0;
  int used = 0;

  for (int it = 0; it < iterations; ++it) {
    ++used;
    // (a) loads
    for (int i = 0; i < n; ++i) {
      int v = g.id_at(i);
      double l = x[i];
      for (int u : g.neighbors(v)) l += x[g.index_of(u)];
      load[i] = l;
    }
    // (b) weights of unsatisfied R-vertices
    for (int i = 0; i < n; ++i)
      weight[i] = (in_r[i] && load[i] < 1.0) ? std::exp(-theta * load[i]) : 0.0;
    // (c) scores
    for (int i = 0; i < n; ++i) {
      int v = g.id_at(i);
      double s = weight[i];
      for (int u : g.neighbors(v)) s += weight[g.index_of(u)];
      score[i] = s;
    }
    // checkpoint: completion cost and dual bound are byproducts of (a)-(c)
    double completion = 0, dual = 0;
    for (int i = 0; i < n; ++i) {
      completion += x[i];
      if (in_r[i] && load[i] < 1.0) completion += 1.0 - load[i];
      if (weight[i] > 0.0) {
        int v = g.id_at(i);
        double smax = score[i];
        for (int u : g.neighbors(v)) smax = std::max(smax, score[g.index_of(u)]);
        dual += weight[i] / smax;
      }
    }
    if (completion < best_obj) {
      best_obj = completion;
      best_x.assign(n, 0.0);
      for (int i = 0; i < n; ++i) {
        best_x[i] = x[i];
        if (in_r[i] && load[i] < 1.0) best_x[i] += 1.0 - load[i];
      }
    }
    best_dual = std::max(best_dual, dual);
    if (best_obj <= (1.0 + eps) * best_dual + 1e-12) break;
    // (d) nominations
    std::vector<char> nominated(n, 0);
    for (int i = 0; i < n; ++i) {
      if (!(in_r[i] && load[i] < 1.0)) continue;
      int v = g.id_at(i);
      int pick = v;
      double bests = score[i];
      for (int u : g.neighbors(v)) {
        double su = score[g.index_of(u)];
        if (su > bests || (su == bests && u < pick)) {
          bests = su;
          pick = u;
        }
      }
      nominated[g.index_of(pick)] = 1;
    }
    for (int i = 0; i < n; ++i)
      if (nominated[i]) x[i] = std::min(1.0, x[i] + delta);
  }

  if (trace) trace->charge("phase3_lp_solve", budget_rounds);
  if (stats) {
    stats->r = r;
    stats->budget_rounds = budget_rounds;
    stats->iterations = iterations;
    stats->used_iterations = used;
    stats->objective = best_obj;
    stats->dual_bound = best_dual;
  }
  if (!(best_obj <= (1.0 + eps) * std::max(best_dual, 0.0) + 1e-9))
    throw contract_error("LP solver failed to certify a (1+eps) solution within its budget");
  FractionalAssignment out;
  for (int i = 0; i < n; ++i)
    if (best_x[i] > 0.0) out.values[g.id_at(i)] = std::min(1.0, best_x[i]);
  if (!lp_feasible(g, r_set, out)) throw contract_error("LP solver produced an infeasible x");
  return out;
}

// Threshold rounding: H = {x_v >= 1/(2d+1)}, U = R-vertices H misses.
// H cup U dominates R and |H cup U| <= (2d+1) * objective(x); both asserted.
inline std::vector<int> round_bansal_umboh(const Graph& g, const std::vector<int>& r_set,
                                           const FractionalAssignment& x, int d) {
  if (!lp_feasible(g, r_set, x)) throw contract_error("round_bansal_umboh: infeasible x");
  double threshold = 1.0 / (2.0 * d + 1.0) - 1e-12;
  std::vector<int> h;
  for (const auto& [v, xv] : x.values)
    if (xv >= threshold) h.push_back(v);
  std::sort(h.begin(), h.end());
  std::vector<int> out = h;
  for (int v : r_set) {
    bool hit = std::binary_search(h.begin(), h.end(), v);
    for (int u : g.neighbors(v))
      if (!hit && std::binary_search(h.begin(), h.end(), u)) hit = true;
    if (!hit) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // postconditions
  for (int v : r_set) {
    bool hit = std::binary_search(out.begin(), out.end(), v);
    for (int u : g.neighbors(v))
      if (!hit && std::binary_search(out.begin(), out.end(), u)) hit = true;
    if (!hit) throw contract_error("round_bansal_umboh: output misses an R-vertex");
  }
  if (static_cast<double>(out.size()) > (2.0 * d + 1.0) * x.objective() + 1e-6)
    throw contract_error("round_bansal_umboh: size bound (2d+1)*obj violated");
  return out;
}

struct Phase3Report {
  int d31 = 0, d32 = 0;
  int orientation_degree = 0;
  LpStats lp;
};

// LP-based phase 3: representative reduction, high-degree removal, the
// distributed LP on what is left, threshold rounding, and the recolors that
// push the selections back to the full graph.
inline std::vector<int> phase3_lp(const Graph& g, States& states, const ClassPreset& preset,
                                  RoundTrace& trace, Phase3Report* report = nullptr) {
  double gamma_cap = preset.gamma_cap();
  double solver_eps = preset.params.epsilon / preset.lp_epsilon_divisor;

  std::vector<int> r1 = states.red_vertices();
  ReducedInstance red1 = reduce_representatives(g, r1);
  trace.charge("phase3_reduce", 2);  // exchange N_R sets, elect representatives

  std::vector<int> d31 = select_high_degree(red1.graph, gamma_cap);
  trace.charge("phase3_high_degree", 1);
  recolor_after_selection(g, states, d31, &trace, "phase3_recolor_d31");

  std::vector<int> r2 = states.red_vertices();
  ReducedInstance red2 = reduce_representatives(g, r2);
  // every degree in the reduced remainder is now at most Gamma
  for (int v : red2.graph.vertices())
    if (std::binary_search(d31.begin(), d31.end(), v))
      throw contract_error("phase3_lp: selected vertex survived the reduction");

  int d;
  if (preset.orientation_degree) {
    d = *preset.orientation_degree;
  } else {
    d = red2.graph.vertex_count() == 0 ? 1 : orient_min_out_degree(red2.graph).max_out_degree;
    d = std::max(d, 1);
  }

  FractionalAssignment x;
  LpStats lp_stats;
  if (red2.graph.vertex_count() > 0) {
    x = solve_cover_lp_local(red2.graph, r2, solver_eps, gamma_cap, &trace, &lp_stats);
  } else {
    // charge the same budget regardless of content, so round totals stay a
    // function of the parameters alone
    int r = std::max(1, static_cast<int>(std::ceil(std::log(gamma_cap + 1.0) /
                                                   std::log(1.0 + solver_eps))));
    lp_stats.r = r;
    lp_stats.budget_rounds = std::max(r * r + 2 * r, 256);
    lp_stats.iterations = std::max(1, lp_stats.budget_rounds / 4);
    trace.charge("phase3_lp_solve", lp_stats.budget_rounds);
  }

  std::vector<int> d32 =
      red2.graph.vertex_count() > 0 ? round_bansal_umboh(red2.graph, r2, x, d) : std::vector<int>{};
  trace.charge("phase3_round", 2);  // threshold announcement + uncovered pickup
  recolor_after_selection(g, states, d32, &trace, "phase3_recolor_d32");

  if (report) {
    report->d31 = static_cast<int>(d31.size());
    report->d32 = static_cast<int>(d32.size());
    report->orientation_degree = d;
    report->lp = lp_stats;
  }
  std::vector<int> d3 = d31;
  d3.insert(d3.end(), d32.begin(), d32.end());
  std::sort(d3.begin(), d3.end());
  d3.erase(std::unique(d3.begin(), d3.end()), d3.end());
  return d3;
}

}  // namespace domlocal
