// Straight enumerations of connected unit interval graphs.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "robinsonian/core_graph.hpp"
#include "robinsonian/lexbfs.hpp"
#include "robinsonian/weak_order.hpp"

namespace robinsonian {

namespace detail {

inline bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.size();
}

/// Straight enumeration of a connected graph, or nullopt when it is not a
/// unit interval graph. Two Lex-BFS+ sweeps from `sigma` give an order in
/// which every closed neighborhood must be an interval; the blocks are the
/// runs of vertices with the same interval.
inline std::optional<WeakLinearOrder> straight_enumeration_connected(const Graph& g,
                                                                     std::span<const Vertex> sigma) {
  const int n = g.size();
  if (n == 0) return WeakLinearOrder{};
  if (n == 1) return WeakLinearOrder::single_block({0});
  auto plus = lex_bfs_plus(g, sigma);
  auto order = lex_bfs_plus(g, plus);

  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::size_t> starts;
  int prev_lo = -1, prev_hi = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int lo = i, hi = i;
    for (Vertex u : g.neighbors(v)) {
      lo = std::min(lo, rank[u]);
      hi = std::max(hi, rank[u]);
    }
    if (hi - lo != g.degree(v)) return std::nullopt;
    if (lo != prev_lo || hi != prev_hi) starts.push_back(static_cast<std::size_t>(i));
    prev_lo = lo;
    prev_hi = hi;
  }
  return WeakLinearOrder(std::move(order), std::move(starts));
}

}  // namespace detail

/// Straight enumeration of a connected graph starting from the Lex-BFS order
/// `sigma`. Throws not_connected on disconnected input.
inline std::optional<WeakLinearOrder> straight_enumeration(const Graph& g,
                                                           std::span<const Vertex> sigma) {
  if (!detail::is_connected(g)) throw Error(Errc::not_connected, "straight enumeration needs a connected graph");
  return detail::straight_enumeration_connected(g, sigma);
}

/// Classes of vertices with identical closed neighborhoods, ordered by their
/// smallest member.
inline std::vector<std::vector<Vertex>> blocks_of(const Graph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<Vertex> closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    classes[closed].push_back(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace robinsonian
