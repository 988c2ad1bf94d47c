#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "domlocal/graph.hpp"

namespace domlocal {

// RED: still needs to be dominated. YELLOW: dominated, not selected.
// GREEN: selected into the output set.
enum class Color { Red, Yellow, Green };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Yellow: return "yellow";
    case Color::Green: return "green";
  }
  return "?";
}

struct NodeState {
  Color color = Color::Red;
  std::vector<int> residual_neighbors;  // N(v) restricted to RED vertices, sorted
  // Phase-local scratch. A tiny flat map: phases keep at most a handful of
  // keys, so linear scans beat hashing.
  std::vector<std::pair<std::string, double>> scratch;

  double get(const std::string& key, double fallback = 0.0) const {
    for (const auto& [k, v] : scratch)
      if (k == key) return v;
    return fallback;
  }
  void set(const std::string& key, double value) {
    for (auto& [k, v] : scratch)
      if (k == key) {
        v = value;
        return;
      }
    scratch.emplace_back(key, value);
  }
};

// Per-vertex states, indexed by the graph's internal vertex order.
class States {
 public:
  explicit States(const Graph& g) : g_(&g), states_(g.vertex_count()) {
    for (int i = 0; i < g.vertex_count(); ++i)
      states_[i].residual_neighbors = g.neighbors(g.id_at(i));
  }

  const Graph& graph() const { return *g_; }
  NodeState& at(int id) { return states_[g_->index_of(id)]; }
  const NodeState& at(int id) const { return states_[g_->index_of(id)]; }

  std::vector<int> red_vertices() const {
    std::vector<int> out;
    for (int v : g_->vertices())
      if (at(v).color == Color::Red) out.push_back(v);
    return out;
  }

  int residual_degree(int id) const {
    const NodeState& st = at(id);
    // Selected vertices are done; later phases treat their residual degree as 0.
    if (st.color == Color::Green) return 0;
    return static_cast<int>(st.residual_neighbors.size());
  }

  int max_residual_degree() const {
    int best = 0;
    for (int v : g_->vertices()) best = std::max(best, residual_degree(v));
    return best;
  }

 private:
  const Graph* g_;
  std::vector<NodeState> states_;
};

// Locality ledger: every phase logs the rounds it consumed. For a fixed
// preset the total must be a function of the parameters only, never of |V|.
struct RoundTrace {
  std::vector<std::pair<std::string, int>> phases;

  void charge(const std::string& phase, int rounds) { phases.emplace_back(phase, rounds); }

  int total() const {
    int t = 0;
    for (const auto& [_, r] : phases) t += r;
    return t;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [name, r] : phases) arr.push_back({{"phase", name}, {"rounds", r}});
    return {{"phases", arr}, {"total", total()}};
  }
};

// What a node can see after `radius` rounds: the subgraph induced on its
// distance-<=radius ball, with the state snapshot taken at phase start.
// Lookups outside the ball fail loudly; that is the locality enforcement.
class Ball {
 public:
  Ball(const Graph& g, const States& snapshot, int center, int radius)
      : g_(&g), snap_(&snapshot), center_(center), radius_(radius) {
    std::vector<int> frontier{center};
    members_.push_back(center);
    for (int d = 0; d < radius; ++d) {
      std::vector<int> next;
      for (int v : frontier)
        for (int w : g.neighbors(v)) next.push_back(w);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      std::vector<int> fresh;
      std::set_difference(next.begin(), next.end(), members_.begin(), members_.end(),
                          std::back_inserter(fresh));
      if (fresh.empty()) break;
      std::vector<int> merged;
      std::merge(members_.begin(), members_.end(), fresh.begin(), fresh.end(),
                 std::back_inserter(merged));
      members_ = std::move(merged);
      frontier = std::move(fresh);
    }
  }

  int center() const { return center_; }
  int radius() const { return radius_; }
  const std::vector<int>& members() const { return members_; }

  bool contains(int id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
  }

  const NodeState& state(int id) const {
    require(id);
    return snap_->at(id);
  }

  // Neighbors of `id` visible inside the ball. For any id at distance
  // < radius from the center this is the full neighborhood.
  std::vector<int> neighbors(int id) const {
    require(id);
    std::vector<int> out;
    const auto& nbrs = g_->neighbors(id);
    std::set_intersection(nbrs.begin(), nbrs.end(), members_.begin(), members_.end(),
                          std::back_inserter(out));
    return out;
  }

 private:
  void require(int id) const {
    if (!contains(id))
      throw locality_error("vertex " + std::to_string(id) + " outside radius-" +
                           std::to_string(radius_) + " ball of " + std::to_string(center_));
  }

  const Graph* g_;
  const States* snap_;
  int center_, radius_;
  std::vector<int> members_;
};

// One synchronous phase: every node evaluates `program` on its radius-ball
// snapshot; results are buffered and returned together, so intra-phase
// ordering cannot leak. Charges exactly `radius` rounds.
template <typename Program>
auto run_ball_phase(const Graph& g, const States& snapshot, int radius, Program&& program,
                    RoundTrace* trace = nullptr, const std::string& phase_name = "") {
  using Result = decltype(program(std::declval<const Ball&>()));
  std::vector<Result> results;
  results.reserve(g.vertex_count());
  for (int v : g.vertices()) {
    Ball ball(g, snapshot, v, radius);
    results.push_back(program(static_cast<const Ball&>(ball)));
  }
  if (trace) trace->charge(phase_name.empty() ? "ball_phase" : phase_name, radius);
  return results;
}

// Selected vertices turn GREEN, their RED neighbors YELLOW, and every
// residual neighborhood is recomputed against the surviving RED set.
// One round: each vertex tells its neighbors whether it was selected.
inline void recolor_after_selection(const Graph& g, States& states,
                                    const std::vector<int>& selected,
                                    RoundTrace* trace = nullptr,
                                    const std::string& phase_name = "recolor") {
  for (int v : selected) {
    if (!g.has_vertex(v)) throw contract_error("selected vertex not in graph");
    states.at(v).color = Color::Green;
  }
  for (int v : selected)
    for (int w : g.neighbors(v))
      if (states.at(w).color == Color::Red) states.at(w).color = Color::Yellow;
  for (int v : g.vertices()) {
    std::vector<int> residual;
    for (int w : g.neighbors(v))
      if (states.at(w).color == Color::Red) residual.push_back(w);
    states.at(v).residual_neighbors = std::move(residual);
  }
  if (trace) trace->charge(phase_name, 1);
}

inline bool dominates(const Graph& g, const std::vector<int>& set) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (int v : set) {
    covered[g.index_of(v)] = 1;
    for (int w : g.neighbors(v)) covered[g.index_of(w)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace domlocal
