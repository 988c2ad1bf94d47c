#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "domlocal/pseudocover.hpp"
#include "domlocal/runtime.hpp"

namespace domlocal {

namespace detail {

// Witness-size threshold for position i (1-based): kappa^(s-i) * (t+s-i+(s-i)*nu).
inline long long dom_seq_threshold(const ClassParams& params, int i) {
  long long k = params.kappa(), p = 1;
  for (int j = 0; j < params.s - i; ++j) p *= k;
  return p * (params.t + params.s - i + static_cast<long long>(params.s - i) * params.nu());
}

template <typename NbrFn, typename ResFn>
std::vector<int> members_of_pseudocovers(NbrFn&& nbrs, ResFn&& residual, int x,
                                         const ClassParams& params, long long cap) {
  std::vector<int> w = residual(x);
  if (static_cast<long long>(w.size()) <= params.mu()) return {};
  std::vector<PseudoCover> covers;
  std::vector<int> seq;
  long long nodes = 0;
  enumerate_pseudocovers_impl(nbrs, w, params, cap, nodes, seq, covers, w);
  std::vector<int> out;
  for (const auto& pc : covers)
    for (int v : pc.sequence) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Enumerate the maximal domination sequences starting at `start` under the
// maximal-witness rule (B_1 = N_R(v_1), B_i = N_R(v_i) cap B_{i-1}; taking
// B_i maximal is equivalent to the existential form because the size
// constraint is monotone). Returns the endpoints; sets *overlong if a
// sequence reaches length s, which cannot happen on K_{s,t}-free inputs.
template <typename NbrFn, typename ResFn>
void maximal_sequence_endpoints(NbrFn&& nbrs, ResFn&& residual, int start,
                                const ClassParams& params, long long cap,
                                std::vector<int>& endpoints, bool* overlong) {
  std::vector<int> b1 = residual(start);
  std::sort(b1.begin(), b1.end());
  if (static_cast<long long>(b1.size()) < dom_seq_threshold(params, 1)) return;

  std::vector<int> used{start};
  std::function<void(int, const std::vector<int>&, int)> dfs = [&](int last,
                                                                   const std::vector<int>& b,
                                                                   int depth) {
    if (depth >= params.s) {  // thresholds are undefined past s; cannot extend
      if (overlong) *overlong = true;
      endpoints.push_back(last);
      return;
    }
    bool extended = false;
    for (int z : members_of_pseudocovers(nbrs, residual, last, params, cap)) {
      if (std::find(used.begin(), used.end(), z) != used.end()) continue;
      std::vector<int> nz = residual(z);
      std::sort(nz.begin(), nz.end());
      std::vector<int> bnext;
      std::set_intersection(b.begin(), b.end(), nz.begin(), nz.end(),
                            std::back_inserter(bnext));
      if (static_cast<long long>(bnext.size()) < dom_seq_threshold(params, depth + 1)) continue;
      extended = true;
      used.push_back(z);
      dfs(z, bnext, depth + 1);
      used.pop_back();
    }
    if (!extended) endpoints.push_back(last);
  };
  dfs(start, b1, 1);
}

}  // namespace detail

// Endpoints of the maximal domination sequences rooted at `start`, computed
// on the full graph (test hook; phase2 runs the same logic inside balls).
inline std::vector<int> max_dom_sequence_endpoints(const Graph& g, const States& states,
                                                   int start, const ClassParams& params,
                                                   long long cap = 10'000'000,
                                                   bool* overlong = nullptr) {
  auto nbrs = [&](int v) { return g.neighbors(v); };
  auto residual = [&](int v) {
    const NodeState& st = states.at(v);
    return st.color == Color::Green ? std::vector<int>{} : st.residual_neighbors;
  };
  std::vector<int> endpoints;
  detail::maximal_sequence_endpoints(nbrs, residual, start, params, cap, endpoints, overlong);
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
  return endpoints;
}

// General phase 2: D2 = the union, over all vertices v, of the endpoints of
// the maximal domination sequences of v. A sequence has length < s and hops
// between pseudo-cover members at distance <= 2 from the previous vertex, so
// radius 2(s-1)+2 suffices to see every endpoint and its residual data.
// Afterwards every residual degree is below delta_r (asserted).
inline std::vector<int> phase2(const Graph& g, States& states, const ClassParams& params,
                               RoundTrace& trace, long long cap = 10'000'000,
                               bool* overlong = nullptr) {
  int radius = 2 * (params.s - 1) + 2;
  auto per_center = run_ball_phase(
      g, states, radius,
      [&](const Ball& ball) {
        auto nbrs = [&](int v) { return ball.neighbors(v); };
        auto residual = [&](int v) {
          const NodeState& st = ball.state(v);
          return st.color == Color::Green ? std::vector<int>{} : st.residual_neighbors;
        };
        std::vector<int> endpoints;
        detail::maximal_sequence_endpoints(nbrs, residual, ball.center(), params, cap, endpoints,
                                           overlong);
        return endpoints;
      },
      &trace, "phase2");
  std::vector<int> d2;
  for (const auto& eps : per_center)
    for (int v : eps) d2.push_back(v);
  std::sort(d2.begin(), d2.end());
  d2.erase(std::unique(d2.begin(), d2.end()), d2.end());
  recolor_after_selection(g, states, d2, &trace, "phase2_recolor");
  long long cap_now = params.delta_r();
  for (int v : g.vertices())
    if (states.residual_degree(v) >= cap_now)
      throw contract_error("residual degree " + std::to_string(states.residual_degree(v)) +
                           " >= delta_r after phase 2");
  return d2;
}

}  // namespace domlocal
