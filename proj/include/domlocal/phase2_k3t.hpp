#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "domlocal/params.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

// Specialized phase 2 for K_{3,t}-free inputs: v joins W when some other
// vertex z shares at least `threshold` residual neighbors with it, and then
// contributes {v} plus all such z. Any qualifying z has a common residual
// neighbor with v, so it lives in N^2[v]: 2 ball-rounds, plus one recolor.
//
// On triangle-free planar inputs |B_v| <= 3 must hold for every selected v;
// a larger B_v witnesses a misclassified input. Class promises are not
// locally checkable, so by default this warns through *bv_violations;
// strict mode (in the pipeline) turns it into an error.
inline std::vector<int> phase2_k3t(const Graph& g, States& states, const ClassPreset& preset,
                                   RoundTrace& trace, int* max_bv_size = nullptr) {
  if (!preset.common_neighbor_threshold)
    throw contract_error("phase2_k3t called on a preset without a threshold");
  int threshold = *preset.common_neighbor_threshold;
  if (max_bv_size) *max_bv_size = 0;
  auto per_center = run_ball_phase(
      g, states, 2,
      [&](const Ball& ball) -> std::vector<int> {
        int v = ball.center();
        const NodeState& sv = ball.state(v);
        if (sv.color == Color::Green) return {};
        const std::vector<int>& rv = sv.residual_neighbors;
        if (static_cast<int>(rv.size()) < threshold) return {};
        // candidates z: anything sharing a residual neighbor with v
        std::vector<int> cands;
        for (int r : rv)
          for (int z : ball.neighbors(r))
            if (z != v) cands.push_back(z);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        std::vector<int> bv;
        for (int z : cands) {
          const NodeState& sz = ball.state(z);
          if (sz.color == Color::Green) continue;
          const std::vector<int>& rz = sz.residual_neighbors;
          int common = 0;
          for (int r : rv)
            if (std::binary_search(rz.begin(), rz.end(), r)) ++common;
          if (common >= threshold) bv.push_back(z);
        }
        if (bv.empty()) return {};
        bv.push_back(v);  // v is in W
        std::sort(bv.begin(), bv.end());
        return bv;
      },
      &trace, "phase2_k3t");
  std::vector<int> d2;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& contrib = per_center[i];
    if (!contrib.empty() && max_bv_size)
      *max_bv_size = std::max(*max_bv_size, static_cast<int>(contrib.size()) - 1);
    for (int v : contrib) d2.push_back(v);
  }
  std::sort(d2.begin(), d2.end());
  d2.erase(std::unique(d2.begin(), d2.end()), d2.end());
  recolor_after_selection(g, states, d2, &trace, "phase2_recolor");
  return d2;
}

// Max residual degree against the preset's guaranteed cap. A false result on
// a correctly classified input is a bug or a misclassified input; the caller
// decides whether to warn or abort.
inline std::pair<bool, int> residual_cap_check(const States& states, const ClassPreset& preset) {
  int maxdeg = states.max_residual_degree();
  return {maxdeg <= preset.residual_cap, maxdeg};
}

}  // namespace domlocal
