#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "domlocal/graph.hpp"
#include "domlocal/orientation.hpp"

namespace domlocal {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

struct DsSearch {
  const Graph& g;
  long long budget;
  long long nodes = 0;
  std::vector<char> is_target;       // by index: must be dominated
  std::vector<int> best;             // best solution so far (ids)
  std::vector<int> chosen;

  DsSearch(const Graph& g_, long long budget_) : g(g_), budget(budget_) {}

  std::vector<int> closed(int v) const {
    std::vector<int> c = g.neighbors(v);
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
    return c;
  }

  // Undominated targets under `dominated` flags.
  std::vector<int> undominated(const std::vector<char>& dominated) const {
    std::vector<int> out;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (is_target[i] && !dominated[i]) out.push_back(g.id_at(i));
    return out;
  }

  int cover_count(int c, const std::vector<char>& dominated) const {
    int k = 0;
    for (int u : closed(c)) {
      int ui = g.index_of(u);
      if (is_target[ui] && !dominated[ui]) ++k;
    }
    return k;
  }

  void greedy_seed(std::vector<char> dominated) {
    std::vector<int> sol;
    while (true) {
      std::vector<int> un = undominated(dominated);
      if (un.empty()) break;
      int bestc = -1, bestk = -1;
      for (int c : g.vertices()) {
        int k = cover_count(c, dominated);
        if (k > bestk) {
          bestk = k;
          bestc = c;
        }
      }
      sol.push_back(bestc);
      for (int u : closed(bestc)) dominated[g.index_of(u)] = 1;
    }
    best = sol;
  }

  // Lower bound: greedily pack undominated targets with pairwise disjoint
  // closed neighborhoods; each needs its own dominator.
  int packing_bound(const std::vector<char>& dominated) const {
    std::vector<char> blocked(g.vertex_count(), 0);
    int lb = 0;
    std::vector<std::pair<int, int>> order;  // (closed degree, id)
    for (int i = 0; i < g.vertex_count(); ++i)
      if (is_target[i] && !dominated[i])
        order.emplace_back(g.degree(g.id_at(i)), g.id_at(i));
    std::sort(order.begin(), order.end());
    for (auto [_, u] : order) {
      bool free = true;
      for (int w : closed(u))
        if (blocked[g.index_of(w)]) {
          free = false;
          break;
        }
      if (!free) continue;
      ++lb;
      // block everything a dominator of u could also cover: N^2[u] suffices,
      // but blocking N[u] already forces distinct dominators only if
      // dominator neighborhoods are disjoint; block N[w] for w in N[u].
      for (int w : closed(u))
        for (int z : closed(w)) blocked[g.index_of(z)] = 1;
    }
    return lb;
  }

  void dfs(std::vector<char> dominated) {
    if (++nodes > budget) throw search_aborted("dominating-set search exceeded node budget");
    std::vector<int> un = undominated(dominated);
    if (un.empty()) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    if (chosen.size() + packing_bound(dominated) >= best.size()) return;
    // branch on the undominated target with the fewest candidate dominators
    int pick = un[0];
    std::size_t fewest = SIZE_MAX;
    for (int u : un) {
      std::size_t c = closed(u).size();
      if (c < fewest) {
        fewest = c;
        pick = u;
      }
    }
    std::vector<std::pair<int, int>> ranked;  // (-coverage, id)
    for (int c : closed(pick)) ranked.emplace_back(-cover_count(c, dominated), c);
    std::sort(ranked.begin(), ranked.end());
    for (auto [_, c] : ranked) {
      std::vector<char> next = dominated;
      for (int u : closed(c)) next[g.index_of(u)] = 1;
      chosen.push_back(c);
      dfs(std::move(next));
      chosen.pop_back();
    }
  }
};

}  // namespace detail

// Exact minimum set Z with R subset of N[Z], by branch and bound: branch on
// the undominated vertex with the fewest candidate dominators, prune with a
// greedy incumbent and a disjoint-neighborhood packing bound. Past `budget`
// search nodes the search aborts loudly; callers skip, never fabricate.
inline std::vector<int> exact_min_dominating_set(const Graph& g, const std::vector<int>& r,
                                                 long long budget = 100'000'000) {
  detail::DsSearch search(g, budget);
  search.is_target.assign(g.vertex_count(), 0);
  for (int v : r) search.is_target[g.index_of(v)] = 1;
  std::vector<char> dominated(g.vertex_count(), 0);
  search.greedy_seed(dominated);
  search.dfs(dominated);
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

inline int exact_gamma(const Graph& g, long long budget = 100'000'000) {
  return static_cast<int>(exact_min_dominating_set(g, g.vertices(), budget).size());
}

// Exact optimum of the R-domination LP (min sum x, closed-neighborhood loads
// >= 1 on R, x >= 0), solved in rational arithmetic via the dual: maximize
// sum y over R subject to, for every vertex u, sum of y over N[u] cap R <= 1.
// The dual has an all-slack feasible basis, so plain simplex with Bland's
// rule needs no phase 1 and cannot cycle.
inline Rational exact_lp_opt(const Graph& g, const std::vector<int>& r) {
  int m = static_cast<int>(r.size());  // dual variables
  if (m == 0) return 0;
  int n = g.vertex_count();  // dual constraints
  std::vector<int> rs = r;
  std::sort(rs.begin(), rs.end());
  // tableau rows: n constraints + objective row; cols: m vars + n slacks + rhs
  int cols = m + n + 1;
  std::vector<std::vector<Rational>> t(n + 1, std::vector<Rational>(cols, 0));
  for (int i = 0; i < n; ++i) {
    int u = g.id_at(i);
    std::vector<int> cl = g.neighbors(u);
    cl.insert(std::lower_bound(cl.begin(), cl.end(), u), u);
    for (int j = 0; j < m; ++j)
      if (std::binary_search(cl.begin(), cl.end(), rs[j])) t[i][j] = 1;
    t[i][m + i] = 1;
    t[i][cols - 1] = 1;
  }
  for (int j = 0; j < m; ++j) t[n][j] = -1;  // maximize sum y
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = m + i;
  while (true) {
    int pivot_col = -1;
    for (int j = 0; j < cols - 1; ++j)
      if (t[n][j] < 0) {
        pivot_col = j;
        break;
      }
    if (pivot_col < 0) break;
    int pivot_row = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < n; ++i) {
      if (t[i][pivot_col] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][pivot_col];
      if (pivot_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[pivot_row])) {
        pivot_row = i;
        best_ratio = ratio;
      }
    }
    if (pivot_row < 0) throw contract_error("exact_lp_opt: unbounded dual (impossible)");
    Rational p = t[pivot_row][pivot_col];
    for (int j = 0; j < cols; ++j) t[pivot_row][j] /= p;
    for (int i = 0; i <= n; ++i) {
      if (i == pivot_row) continue;
      Rational f = t[i][pivot_col];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[pivot_row][j];
    }
    basis[pivot_row] = pivot_col;
  }
  return t[n][cols - 1];
}

// Exact max subgraph density max |E(H)|/|V(H)| via Dinkelbach iteration on
// the standard edge/vertex flow network: density > p/q iff the min cut
// separating all edge nodes is below q*m.
inline Rational exact_nabla0(const Graph& g) {
  auto edges = g.edges();
  long long n = g.vertex_count(), m = static_cast<long long>(edges.size());
  if (m == 0) return 0;
  // Extract a densest subgraph at guess p/q (density strictly greater than
  // p/q exists iff maxflow < q*m); returns its vertex set.
  auto denser_than = [&](long long p, long long q) -> std::vector<int> {
    detail::Dinic net(static_cast<int>(2 + m + n));
    // 0 = source, 1..m = edges, m+1..m+n = vertices, last not needed; sink = 1+m+n
    int sink = static_cast<int>(1 + m + n);
    for (long long e = 0; e < m; ++e) {
      net.add_edge(0, static_cast<int>(1 + e), q);
      net.add_edge(static_cast<int>(1 + e), static_cast<int>(1 + m + g.index_of(edges[e].first)),
                   std::numeric_limits<long long>::max() / 4);
      net.add_edge(static_cast<int>(1 + e), static_cast<int>(1 + m + g.index_of(edges[e].second)),
                   std::numeric_limits<long long>::max() / 4);
    }
    for (long long i = 0; i < n; ++i)
      net.add_edge(static_cast<int>(1 + m + i), sink, p);
    long long flow = net.max_flow(0, sink);
    if (flow >= q * m) return {};
    // source side of the min cut = the denser subgraph
    std::vector<int> side;
    std::vector<char> seen(2 + m + n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (const auto& arc : net.g[v])
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          bfs.push(arc.to);
        }
    }
    for (long long i = 0; i < n; ++i)
      if (seen[1 + m + i]) side.push_back(g.id_at(static_cast<int>(i)));
    return side;
  };
  long long p = 0, q = 1;  // current best density p/q (start: beat density 0)
  Rational best = 0;
  while (true) {
    std::vector<int> h = denser_than(p, q);
    if (h.empty()) break;
    Graph sub = induced_subgraph(g, h);
    Rational density(sub.edge_count(), sub.vertex_count());
    if (density <= best) break;
    best = density;
    p = sub.edge_count();
    q = sub.vertex_count();
  }
  return best;
}

namespace detail {

inline boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> to_boost(
    const Graph& g) {
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> b(g.vertex_count());
  for (auto [u, v] : g.edges()) boost::add_edge(g.index_of(u), g.index_of(v), b);
  return b;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
  if (g.vertex_count() <= 4) return true;
  auto b = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

// Outerplanar iff the graph stays planar after adding one vertex adjacent to
// everything.
inline bool is_outerplanar(const Graph& g) {
  if (g.vertex_count() <= 3) return true;
  auto b = detail::to_boost(g);
  auto apex = boost::add_vertex(b);
  for (int i = 0; i < g.vertex_count(); ++i) boost::add_edge(apex, i, b);
  return boost::boyer_myrvold_planarity_test(b);
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (side[i] >= 0) continue;
    side[i] = 0;
    std::queue<int> q;
    q.push(i);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(g.id_at(v))) {
        int wi = g.index_of(w);
        if (side[wi] < 0) {
          side[wi] = 1 - side[v];
          q.push(wi);
        } else if (side[wi] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Length of the shortest cycle; INT_MAX on forests. BFS from every vertex.
inline int girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  int n = g.vertex_count();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (2 * dist[v] >= best) break;
      for (int w : g.neighbors(g.id_at(v))) {
        int wi = g.index_of(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[v] + 1;
          parent[wi] = v;
          q.push(wi);
        } else if (wi != parent[v]) {
          best = std::min(best, dist[v] + dist[wi] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace domlocal
