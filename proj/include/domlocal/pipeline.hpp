#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "domlocal/greedy.hpp"
#include "domlocal/lp.hpp"
#include "domlocal/phase1.hpp"
#include "domlocal/phase2_general.hpp"
#include "domlocal/phase2_k3t.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

enum class Phase3Kind { Lp, Greedy };

struct RunOptions {
  Phase3Kind phase3 = Phase3Kind::Lp;
  // Abort on violated class promises (residual cap, |B_v| size) instead of
  // recording a warning. Promises are not locally checkable, so warnings are
  // the default.
  bool strict = false;
  long long enumeration_cap = 10'000'000;
};

struct RunReport {
  std::string preset;
  int n = 0, m = 0;
  std::vector<int> d1, d2, d3;
  RoundTrace rounds;
  bool dominates = false;
  int max_residual_after_phase2 = 0;
  bool residual_cap_ok = true;
  int max_bv_size = 0;
  double epsilon = 0;
  std::string phase3;
  Phase3Report lp_report;
  std::vector<GreedyIteration> greedy_trace;
  std::vector<std::string> warnings;

  std::vector<int> dominating_set() const {
    std::vector<int> all = d1;
    all.insert(all.end(), d2.begin(), d2.end());
    all.insert(all.end(), d3.begin(), d3.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["preset"] = preset;
    j["n"] = n;
    j["m"] = m;
    j["epsilon"] = epsilon;
    j["phase3"] = phase3;
    j["D1"] = {{"size", d1.size()}, {"members", d1}};
    j["D2"] = {{"size", d2.size()}, {"members", d2}};
    j["D3"] = {{"size", d3.size()}, {"members", d3}};
    j["size"] = dominating_set().size();
    j["rounds"] = rounds.to_json();
    j["dominates"] = dominates;
    j["max_residual_after_phase2"] = max_residual_after_phase2;
    j["residual_cap_ok"] = residual_cap_ok;
    if (phase3 == "lp") {
      j["lp"] = {{"d31", lp_report.d31},
                 {"d32", lp_report.d32},
                 {"orientation_degree", lp_report.orientation_degree},
                 {"solver_r", lp_report.lp.r},
                 {"solver_rounds", lp_report.lp.budget_rounds},
                 {"solver_iterations_used", lp_report.lp.used_iterations},
                 {"objective", lp_report.lp.objective},
                 {"dual_bound", lp_report.lp.dual_bound}};
    } else {
      nlohmann::json tr = nlohmann::json::array();
      for (const auto& it : greedy_trace)
        tr.push_back({{"i", it.i}, {"picked", it.picked}, {"red", it.red}});
      j["greedy_trace"] = tr;
    }
    j["warnings"] = warnings;
    return j;
  }
};

// The full three-phase pipeline on one instance.
inline RunReport run_pipeline(const Graph& g, const ClassPreset& preset,
                              const RunOptions& opts = {}) {
  RunReport report;
  report.preset = preset.name;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.epsilon = preset.params.epsilon;
  report.phase3 = opts.phase3 == Phase3Kind::Lp ? "lp" : "greedy";

  States states(g);
  report.d1 = phase1(g, states, preset.params, report.rounds);

  if (preset.common_neighbor_threshold) {
    int max_bv = 0;
    report.d2 = phase2_k3t(g, states, preset, report.rounds, &max_bv);
    report.max_bv_size = max_bv;
    // On triangle-free planar inputs B_v beyond 3 witnesses a misclassified
    // input (it cannot happen on the promised class).
    if (max_bv > 3 && (preset.name == "triangle_free_planar" ||
                       preset.name == "bipartite_planar")) {
      std::string msg = "|B_v| = " + std::to_string(max_bv) + " > 3 on a " + preset.name +
                        " preset: input violates the class promise";
      if (opts.strict) throw contract_error(msg);
      report.warnings.push_back(msg);
    }
    // disjointness from D1 (selected vertices are green and never re-enter)
    for (int v : report.d2)
      if (std::binary_search(report.d1.begin(), report.d1.end(), v))
        throw contract_error("phase 2 re-selected a phase-1 vertex");
  } else if (preset.use_general_phase2) {
    report.d2 = phase2(g, states, preset.params, report.rounds, opts.enumeration_cap);
  } else {
    report.rounds.charge("phase2_skipped", 0);  // D2 = {} for this class
  }

  auto [cap_ok, max_res] = residual_cap_check(states, preset);
  report.max_residual_after_phase2 = max_res;
  report.residual_cap_ok = cap_ok;
  if (!cap_ok) {
    std::string msg = "residual degree " + std::to_string(max_res) + " exceeds the class cap " +
                      std::to_string(preset.residual_cap);
    if (opts.strict) throw contract_error(msg);
    report.warnings.push_back(msg);
  }

  if (opts.phase3 == Phase3Kind::Lp) {
    report.d3 = phase3_lp(g, states, preset, report.rounds, &report.lp_report);
  } else {
    long long cap = std::max<long long>(preset.residual_cap, max_res);
    report.d3 = phase3_greedy(g, states, cap, report.rounds, &report.greedy_trace);
  }

  report.dominates = dominates(g, report.dominating_set());
  if (!report.dominates)
    throw contract_error("pipeline output does not dominate the graph");
  return report;
}

}  // namespace domlocal
