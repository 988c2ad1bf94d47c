#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

#include "domlocal/base.hpp"
#include "domlocal/graph.hpp"

namespace domlocal {

namespace detail {

inline std::pair<int, int> norm_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

// Random planar triangulation: start from a triangle, repeatedly place the
// next vertex inside a uniformly chosen face.
inline std::set<std::pair<int, int>> random_triangulation(int n, Rng& rng) {
  std::set<std::pair<int, int>> edges;
  if (n >= 2) edges.insert({0, 1});
  if (n >= 3) {
    edges.insert({0, 2});
    edges.insert({1, 2});
  }
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    std::size_t f = rng.below(faces.size());
    auto [a, b, c] = faces[f];
    edges.insert(norm_edge(v, a));
    edges.insert(norm_edge(v, b));
    edges.insert(norm_edge(v, c));
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return edges;
}

inline Graph from_edge_set(const std::set<std::pair<int, int>>& edges, int n) {
  std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Graph::from_edges(list, all);
}

// One cycle of length < 5 as an edge list, or empty if none.
inline std::vector<std::pair<int, int>> find_short_cycle(const Graph& g) {
  for (auto [u, v] : g.edges()) {  // triangle through edge (u,v)
    const auto& nu = g.neighbors(u);
    for (int w : g.neighbors(v))
      if (w != u && std::binary_search(nu.begin(), nu.end(), w))
        return {norm_edge(u, v), norm_edge(v, w), norm_edge(w, u)};
  }
  for (int u : g.vertices()) {  // 4-cycle u-a-x-b with a,b in N(u)
    const auto& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i)
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        int a = nu[i], b = nu[j];
        const auto& na = g.neighbors(a);
        for (int x : g.neighbors(b))
          if (x != u && std::binary_search(na.begin(), na.end(), x))
            return {norm_edge(u, a), norm_edge(a, x), norm_edge(x, b), norm_edge(b, u)};
      }
  }
  return {};
}

}  // namespace detail

// Random maximal planar graph thinned by independent edge deletions.
inline Graph gen_planar(int n, std::uint64_t seed, double p_delete = 0.3) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);
  auto edges = detail::random_triangulation(n, rng);
  std::set<std::pair<int, int>> kept;
  for (const auto& e : edges)
    if (!rng.chance(p_delete)) kept.insert(e);
  return detail::from_edge_set(kept, n);
}

// Subdividing every edge once kills all triangles and preserves planarity.
// The output has base_n + base_m vertices.
inline Graph gen_triangle_free_planar(int n, std::uint64_t seed) {
  Graph base = gen_planar(n, seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> all(base.vertex_count());
  for (int i = 0; i < base.vertex_count(); ++i) all[i] = i;
  int next = base.vertex_count();
  for (auto [u, v] : base.edges()) {
    edges.emplace_back(u, next);
    edges.emplace_back(next, v);
    all.push_back(next);
    ++next;
  }
  return Graph::from_edges(edges, all);
}

// Random subgraph of a roughly square grid.
inline Graph gen_bipartite_planar(int n, std::uint64_t seed, double p_keep = 0.7) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x8cb92ba72f3d8dd7ull);
  int w = 1;
  while (w * w < n) ++w;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    int x = v % w, y = v / w;
    if (x + 1 < w && v + 1 < n && rng.chance(p_keep)) edges.emplace_back(v, v + 1);
    if (v + w < n && rng.chance(p_keep)) edges.emplace_back(v, v + w);
    (void)y;
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Graph::from_edges(edges, all);
}

// Planar with girth at least 5: thin a random triangulation, then delete a
// random edge from every cycle of length under 5 until none remains.
inline Graph gen_girth5_planar(int n, std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  Graph g = gen_planar(n, seed);
  auto initial = g.edges();
  std::set<std::pair<int, int>> edges(initial.begin(), initial.end());
  while (true) {
    Graph cur = detail::from_edge_set(edges, n);
    auto cyc = detail::find_short_cycle(cur);
    if (cyc.empty()) return cur;
    edges.erase(cyc[rng.below(cyc.size())]);
  }
}

// Random maximal outerplanar graph (a randomly triangulated polygon) thinned
// by edge deletions; subgraphs of outerplanar graphs stay outerplanar.
inline Graph gen_outerplanar(int n, std::uint64_t seed, double p_delete = 0.3) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xda942042e4dd58b5ull);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.insert({i, i + 1});
  if (n >= 3) edges.insert({0, n - 1});
  // random triangulation of the polygon by chords
  std::vector<std::pair<int, int>> stack;
  if (n >= 4) stack.emplace_back(0, n - 1);
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    int k = i + 1 + static_cast<int>(rng.below(j - i - 1));
    if (k - i >= 2) edges.insert({i, k});
    if (j - k >= 2) edges.insert({k, j});
    stack.emplace_back(i, k);
    stack.emplace_back(k, j);
  }
  std::set<std::pair<int, int>> kept;
  for (const auto& e : edges)
    if (!rng.chance(p_delete)) kept.insert(e);
  return detail::from_edge_set(kept, n);
}

// The lower-bound family: vertices v_i (i <= gamma), w^j (j <= m), s_i^j;
// edges {v_1, w^j}, {w^j, s_i^j}, {v_i, s_i^j}. Ids: v_i = i-1,
// w^j = gamma+j-1, s_i^j = gamma+m+(j-1)*gamma+(i-1).
inline Graph g_gamma_m(int gamma, int m) {
  if (gamma < 1 || m < 1) throw contract_error("g_gamma_m: gamma, m >= 1 required");
  std::vector<std::pair<int, int>> edges;
  auto v = [&](int i) { return i - 1; };
  auto w = [&](int j) { return gamma + j - 1; };
  auto s = [&](int i, int j) { return gamma + m + (j - 1) * gamma + (i - 1); };
  for (int j = 1; j <= m; ++j) {
    edges.emplace_back(v(1), w(j));
    for (int i = 1; i <= gamma; ++i) {
      edges.emplace_back(w(j), s(i, j));
      edges.emplace_back(v(i), s(i, j));
    }
  }
  return Graph::from_edges(edges);
}

// Erdos-Renyi G(n, d/n).
inline Graph gen_sparse_er(int n, double d, std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x6a09e667f3bcc909ull);
  double p = std::min(1.0, d / std::max(1, n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Graph::from_edges(edges, all);
}

}  // namespace domlocal
