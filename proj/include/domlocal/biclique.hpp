#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "domlocal/graph.hpp"

namespace domlocal {

// True iff K_{s,t} occurs as a subgraph (not necessarily induced).
// Enumerates the s-side in increasing id order, keeping the common
// neighborhood of the chosen vertices; a branch dies as soon as fewer than t
// candidates remain on the other side. Intended for desk-scale graphs.
// Exceeding `node_cap` search nodes raises search_aborted, never a wrong
// answer.
inline bool contains_biclique(const Graph& g, int s, int t,
                              long long node_cap = 50'000'000) {
  if (s < 1 || s > t) throw contract_error("contains_biclique: need 1 <= s <= t");
  long long nodes = 0;
  std::vector<int> chosen;

  // common = ⋂ N(chosen); the t-side must avoid the chosen vertices.
  auto usable = [&](const std::vector<int>& common) {
    int c = static_cast<int>(common.size());
    for (int x : chosen)
      if (std::binary_search(common.begin(), common.end(), x)) --c;
    return c;
  };

  std::function<bool(const std::vector<int>&)> grow =
      [&](const std::vector<int>& common) -> bool {
    if (++nodes > node_cap) throw search_aborted("biclique search exceeded node cap");
    if (usable(common) < t) return false;
    if (static_cast<int>(chosen.size()) == s) return true;
    // Next s-side vertex must be adjacent to the eventual t-side, so it is
    // enough to try neighbors of current common-neighborhood members; with
    // nothing chosen yet, try every vertex of sufficient degree.
    int last = chosen.empty() ? -1 : chosen.back();
    if (chosen.empty()) {
      for (int z : g.vertices()) {
        if (g.degree(z) < t) continue;
        chosen.push_back(z);
        if (grow(g.neighbors(z))) return true;
        chosen.pop_back();
      }
      return false;
    }
    std::vector<int> cands;
    for (int w : common)
      for (int z : g.neighbors(w))
        if (z > last) cands.push_back(z);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int z : cands) {
      const auto& nz = g.neighbors(z);
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), nz.begin(), nz.end(),
                            std::back_inserter(next));
      chosen.push_back(z);
      bool found = grow(next);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };

  return grow(g.vertices());
}

}  // namespace domlocal
