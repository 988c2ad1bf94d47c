#pragma once

#include <algorithm>
#include <vector>

#include "domlocal/graph.hpp"
#include "domlocal/params.hpp"

namespace domlocal {

// Target set plus an ordered sequence of covering vertices. The clauses, for
// W_i = W minus the closed neighborhoods of the first i-1 sequence members:
//   (1) m <= kappa
//   (2) each v_i is lambda-strong for W_i  (kappa * |N[v_i] cap W_i| >= |W_i|)
//   (3) |N[v_i] cap W_i| >= mu
//   (4) at most nu of W survives the whole sequence
struct PseudoCover {
  std::vector<int> target;    // W, sorted
  std::vector<int> sequence;  // (v_1, ..., v_m)
};

namespace detail {

inline std::vector<int> closed_neighborhood_of(const std::vector<int>& open, int v) {
  std::vector<int> closed = open;
  auto it = std::lower_bound(closed.begin(), closed.end(), v);
  if (it == closed.end() || *it != v) closed.insert(it, v);
  return closed;
}

template <typename NbrFn>
int closed_intersection_size(NbrFn&& nbrs, int z, const std::vector<int>& w) {
  std::vector<int> closed = closed_neighborhood_of(nbrs(z), z);
  int c = 0;
  for (int x : w)
    if (std::binary_search(closed.begin(), closed.end(), x)) ++c;
  return c;
}

template <typename NbrFn>
std::vector<int> remove_closed(NbrFn&& nbrs, int z, const std::vector<int>& w) {
  std::vector<int> closed = closed_neighborhood_of(nbrs(z), z);
  std::vector<int> rest;
  for (int x : w)
    if (!std::binary_search(closed.begin(), closed.end(), x)) rest.push_back(x);
  return rest;
}

// Depth-first enumeration of every sequence satisfying the four clauses.
// Extensions must be lambda-strong with closed intersection >= mu, so
// candidates always lie in the closed neighborhood of the remaining target.
template <typename NbrFn>
void enumerate_pseudocovers_impl(NbrFn&& nbrs, const std::vector<int>& remaining,
                                 const ClassParams& params, long long cap, long long& nodes,
                                 std::vector<int>& seq, std::vector<PseudoCover>& out,
                                 const std::vector<int>& target) {
  if (++nodes > cap)
    throw search_aborted("pseudo-cover enumeration exceeded " + std::to_string(cap) + " nodes");
  long long k = params.kappa();
  if (!seq.empty() && static_cast<long long>(remaining.size()) <= params.nu())
    out.push_back({target, seq});
  if (static_cast<long long>(seq.size()) >= k) return;
  std::vector<int> cands;
  for (int w : remaining) {
    cands.push_back(w);
    for (int z : nbrs(w)) cands.push_back(z);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (int z : cands) {
    long long hit = closed_intersection_size(nbrs, z, remaining);
    if (hit < params.mu()) continue;
    if (k * hit < static_cast<long long>(remaining.size())) continue;  // not lambda-strong
    seq.push_back(z);
    enumerate_pseudocovers_impl(nbrs, remove_closed(nbrs, z, remaining), params, cap, nodes, seq,
                                out, target);
    seq.pop_back();
  }
}

}  // namespace detail

// Exactly { z : kappa * |N[z] cap W| >= |W| }, exact integer comparison.
// Callers guard with |W| >= mu; on empty W everything qualifies vacuously.
inline std::vector<int> lambda_strong_vertices(const Graph& g, const std::vector<int>& w,
                                               const ClassParams& params) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  long long k = params.kappa();
  std::vector<int> out;
  for (int z : g.vertices()) {
    auto nbrs = [&](int v) { return g.neighbors(v); };
    if (k * detail::closed_intersection_size(nbrs, z, sorted) >=
        static_cast<long long>(sorted.size()))
      out.push_back(z);
  }
  return out;
}

inline bool check_pseudocover(const Graph& g, const PseudoCover& pc, const ClassParams& params) {
  auto nbrs = [&](int v) { return g.neighbors(v); };
  long long k = params.kappa();
  if (static_cast<long long>(pc.sequence.size()) > k) return false;
  std::vector<int> remaining = pc.target;
  std::sort(remaining.begin(), remaining.end());
  for (int v : pc.sequence) {
    long long hit = detail::closed_intersection_size(nbrs, v, remaining);
    if (hit < params.mu()) return false;
    if (k * hit < static_cast<long long>(remaining.size())) return false;
    remaining = detail::remove_closed(nbrs, v, remaining);
  }
  return static_cast<long long>(remaining.size()) <= params.nu();
}

// All pseudo-covers of W. Aborts loudly past `cap` search nodes; never
// truncates silently.
inline std::vector<PseudoCover> enumerate_pseudocovers(const Graph& g, const std::vector<int>& w,
                                                       const ClassParams& params,
                                                       long long cap = 10'000'000) {
  std::vector<int> target = w;
  std::sort(target.begin(), target.end());
  auto nbrs = [&](int v) { return g.neighbors(v); };
  std::vector<PseudoCover> out;
  std::vector<int> seq;
  long long nodes = 0;
  detail::enumerate_pseudocovers_impl(nbrs, target, params, cap, nodes, seq, out, target);
  return out;
}

// Greedy construction: order Z by largest closed intersection with the
// still-uncovered part of W (smaller id on ties), keep the maximal prefix
// whose members stay lambda-strong with intersection >= mu. Given the
// preconditions the remainder is guaranteed to shrink to at most nu.
inline PseudoCover pseudocover_from_cover(const Graph& g, const std::vector<int>& w,
                                          const std::vector<int>& z, const ClassParams& params) {
  std::vector<int> target = w;
  std::sort(target.begin(), target.end());
  if (static_cast<long long>(target.size()) < params.nu())
    throw contract_error("pseudocover_from_cover: |W| < nu");
  if (static_cast<long long>(z.size()) > params.kappa())
    throw contract_error("pseudocover_from_cover: |Z| > kappa");
  auto nbrs = [&](int v) { return g.neighbors(v); };
  {
    std::vector<int> rest = target;
    for (int zv : z) rest = detail::remove_closed(nbrs, zv, rest);
    if (!rest.empty()) throw contract_error("pseudocover_from_cover: Z does not cover W");
  }
  std::vector<int> pool = z, seq;
  std::sort(pool.begin(), pool.end());
  std::vector<int> remaining = target;
  long long k = params.kappa();
  while (!pool.empty()) {
    int best = -1;
    long long besthit = -1;
    for (int c : pool) {
      long long hit = detail::closed_intersection_size(nbrs, c, remaining);
      if (hit > besthit) {
        besthit = hit;
        best = c;
      }
    }
    if (besthit < params.mu()) break;
    if (k * besthit < static_cast<long long>(remaining.size())) break;
    seq.push_back(best);
    pool.erase(std::find(pool.begin(), pool.end(), best));
    remaining = detail::remove_closed(nbrs, best, remaining);
  }
  if (static_cast<long long>(remaining.size()) > params.nu())
    throw contract_error("pseudocover_from_cover: remainder exceeds nu (should be impossible)");
  return {target, seq};
}

}  // namespace domlocal
