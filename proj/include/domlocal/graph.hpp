#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "domlocal/base.hpp"

namespace domlocal {

// Immutable undirected simple graph with stable non-negative integer vertex
// ids. Ids double as the LOCAL-model unique identifiers; every tie in the
// system breaks toward the smaller id.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& isolated = {}) {
    Graph g;
    std::vector<int> ids;
    for (auto [u, v] : edges) {
      if (u == v) throw parse_error("self-loop on vertex " + std::to_string(u));
      if (u < 0 || v < 0) throw parse_error("negative vertex id");
      ids.push_back(u);
      ids.push_back(v);
    }
    for (int v : isolated) {
      if (v < 0) throw parse_error("negative vertex id");
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    g.ids_ = std::move(ids);
    g.index_.reserve(g.ids_.size());
    for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_[g.ids_[i]] = static_cast<int>(i);
    g.adj_.assign(g.ids_.size(), {});
    for (auto [u, v] : edges) {
      g.adj_[g.index_.at(u)].push_back(v);
      g.adj_[g.index_.at(v)].push_back(u);
    }
    g.edge_count_ = 0;
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      g.edge_count_ += static_cast<int>(nbrs.size());
    }
    g.edge_count_ /= 2;
    return g;
  }

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return edge_count_; }

  const std::vector<int>& vertices() const { return ids_; }

  bool has_vertex(int id) const { return index_.count(id) != 0; }

  int index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw contract_error("unknown vertex id " + std::to_string(id));
    return it->second;
  }

  int id_at(int index) const { return ids_[index]; }

  const std::vector<int>& neighbors(int id) const { return adj_[index_of(id)]; }

  int degree(int id) const { return static_cast<int>(neighbors(id).size()); }

  bool has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nbrs = adj_[index_of(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u : ids_)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<int> ids_;  // sorted
  std::unordered_map<int, int> index_;
  std::vector<std::vector<int>> adj_;  // sorted neighbor ids, by internal index
  int edge_count_ = 0;
};

// Edge-list text format: one "u v" pair per line, '#' comment lines,
// optional "v <id>" lines declaring isolated vertices.
inline Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> isolated;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& what) {
      throw parse_error("line " + std::to_string(lineno) + ": " + what);
    };
    std::string stripped = line;
    auto pos = stripped.find('#');
    if (pos != std::string::npos) stripped.resize(pos);
    std::istringstream ss(stripped);
    std::string first;
    if (!(ss >> first)) continue;  // blank or comment-only
    if (first == "v") {
      long long id;
      std::string extra;
      if (!(ss >> id) || id < 0 || (ss >> extra)) fail("expected 'v <id>'");
      isolated.push_back(static_cast<int>(id));
      continue;
    }
    long long u, v;
    std::string extra;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      u = -1;
    }
    if (u < 0 || !(ss >> v) || v < 0 || (ss >> extra)) fail("expected two vertex ids");
    if (u == v) fail("self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(edges, isolated);
}

inline void save_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (int v : g.vertices())
    if (g.degree(v) == 0) out << "v " << v << '\n';
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw parse_error("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<int> isolated;
  if (j.contains("vertices")) isolated = j["vertices"].get<std::vector<int>>();
  Graph g = Graph::from_edges(edges, isolated);
  if (j.contains("n") && j["n"].get<int>() != g.vertex_count())
    throw parse_error("vertex count mismatch in graph JSON");
  return g;
}

// Repeatedly remove a minimum-degree vertex (smallest id on ties).
// Returns the removal order and the degeneracy = max degree at removal time.
inline std::pair<std::vector<int>, int> degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n), order;
  order.reserve(n);
  std::vector<char> removed(n, 0);
  int maxdeg = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(g.id_at(i));
    maxdeg = std::max(maxdeg, deg[i]);
  }
  // Bucket queue over degrees; vertices scanned in id order within a bucket.
  std::vector<std::vector<int>> bucket(maxdeg + 1);
  for (int i = 0; i < n; ++i) bucket[deg[i]].push_back(i);
  std::vector<std::size_t> cursor(maxdeg + 1, 0);
  int degeneracy = 0, low = 0;
  for (int step = 0; step < n; ++step) {
    if (low > 0) --low;  // a removal can lower a neighbor's degree by one
    int pick = -1;
    for (int d = low; d <= maxdeg; ++d) {
      auto& b = bucket[d];
      while (cursor[d] < b.size()) {
        int i = b[cursor[d]];
        if (!removed[i] && deg[i] == d) {
          pick = i;
          break;
        }
        ++cursor[d];  // stale entry
      }
      if (pick >= 0) {
        low = d;
        break;
      }
    }
    removed[pick] = 1;
    ++cursor[low];
    degeneracy = std::max(degeneracy, deg[pick]);
    order.push_back(g.id_at(pick));
    for (int w : g.neighbors(g.id_at(pick))) {
      int wi = g.index_of(w);
      if (!removed[wi]) bucket[--deg[wi]].push_back(wi);
    }
  }
  return {order, degeneracy};
}

// Subgraph induced on `keep` (ids outside g are rejected).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::pair<int, int>> edges;
  for (int u : sorted)
    for (int v : g.neighbors(u))
      if (u < v && std::binary_search(sorted.begin(), sorted.end(), v)) edges.emplace_back(u, v);
  return Graph::from_edges(edges, sorted);
}

}  // namespace domlocal
