#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "domlocal/graph.hpp"

namespace domlocal {
namespace detail {

// Dinic max-flow on small integer networks. Used for the exact
// minimum-out-degree orientation and the exact densest-subgraph oracle.
struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit Dinic(int n) : g(n) {}

  void add_edge(int a, int b, long long cap) {
    g[a].push_back({b, cap, static_cast<int>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
  }

  bool bfs(int s, int t) {
    level.assign(g.size(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = it[v]; i < static_cast<int>(g[v].size()); ++i) {
      Arc& a = g[v][i];
      if (a.cap > 0 && level[a.to] == level[v] + 1) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it.assign(g.size(), 0);
      long long f;
      while ((f = dfs(s, t, LLONG_MAX)) > 0) flow += f;
    }
    return flow;
  }
};

}  // namespace detail

struct Orientation {
  // unordered edge (min,max) -> (tail, head)
  std::map<std::pair<int, int>, std::pair<int, int>> direction;
  int max_out_degree = 0;
};

// Exact minimum achievable maximum out-degree, by binary search on the target
// degree d with a flow feasibility check: every edge must be assigned to one
// endpoint, endpoints take at most d edges each. The degeneracy heuristic is
// not enough here: the rounding factor 2d+1 depends directly on d.
inline Orientation orient_min_out_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw contract_error("orient_min_out_degree: empty graph");
  auto edge_list = g.edges();
  int n = g.vertex_count(), m = static_cast<int>(edge_list.size());
  // Network layout: 0 = source, 1..m = edges, m+1..m+n = vertices, m+n+1 = sink.
  auto build = [&](int d) {
    detail::Dinic net(m + n + 2);
    for (int e = 0; e < m; ++e) {
      net.add_edge(0, 1 + e, 1);
      net.add_edge(1 + e, m + 1 + g.index_of(edge_list[e].first), 1);
      net.add_edge(1 + e, m + 1 + g.index_of(edge_list[e].second), 1);
    }
    for (int i = 0; i < n; ++i) net.add_edge(m + 1 + i, m + n + 1, d);
    return net;
  };
  auto feasible = [&](int d) {
    detail::Dinic net = build(d);
    return net.max_flow(0, m + n + 1) == m;
  };
  int hi = degeneracy_order(g).second;  // a degeneracy ordering achieves this
  int lo = 0;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  detail::Dinic net = build(lo);
  long long pushed = net.max_flow(0, m + n + 1);
  if (pushed != m) throw contract_error("orientation flow infeasible at optimum");
  Orientation ori;
  std::map<int, int> outdeg;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edge_list[e];
    int tail = -1;
    for (const auto& arc : net.g[1 + e])
      if (arc.to != 0 && arc.cap == 0) {  // saturated edge->vertex arc
        tail = g.id_at(arc.to - m - 1);
        break;
      }
    if (tail < 0) throw contract_error("unassigned edge in orientation flow");
    int head = tail == u ? v : u;
    ori.direction[{std::min(u, v), std::max(u, v)}] = {tail, head};
    ori.max_out_degree = std::max(ori.max_out_degree, ++outdeg[tail]);
  }
  return ori;
}

}  // namespace domlocal
