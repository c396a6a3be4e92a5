// Brute-force ground truth for small instances. None of this is used by the
// recognizer itself.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "robinsonian/core_graph.hpp"
#include "robinsonian/lexbfs.hpp"
#include "robinsonian/straight_enum.hpp"
#include "robinsonian/weak_order.hpp"

namespace robinsonian {

using PermutationSet = std::vector<std::vector<Vertex>>;

inline constexpr int kDefaultCap = 8;

namespace detail {

inline std::vector<std::int64_t> dense(const SimilarityMatrix& a) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  std::vector<std::int64_t> m(n * n, 0);
  for (const auto& e : a.edges()) {
    m[e.u * n + e.v] = e.w.ticks;
    m[e.v * n + e.u] = e.w.ticks;
  }
  return m;
}

inline bool robinson_dense(const std::vector<std::int64_t>& m, std::size_t n, std::span<const Vertex> pi) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ik = m[pi[i] * n + pi[k]];
        if (ik > m[pi[i] * n + pi[j]] || ik > m[pi[j] * n + pi[k]]) return false;
      }
  return true;
}

inline void check_cap(int n, int cap) {
  if (n > cap)
    throw Error(Errc::too_large, "brute force limited to " + std::to_string(cap) + " vertices, got " +
                                     std::to_string(n));
}

}  // namespace detail

/// A_ik <= min(A_ij, A_jk) for all i < j < k in the order pi (identity when
/// pi is empty).
inline bool is_robinson(const SimilarityMatrix& a, std::span<const Vertex> pi = {}) {
  const int n = a.size();
  std::vector<Vertex> order;
  if (pi.empty() && n > 0) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    pi = order;
  }
  detail::require_permutation(pi, n);
  return detail::robinson_dense(detail::dense(a), static_cast<std::size_t>(n), pi);
}

/// Every Robinson ordering of A, in lexicographic order.
inline PermutationSet brute_force(const SimilarityMatrix& a, int cap = kDefaultCap) {
  const int n = a.size();
  detail::check_cap(n, cap);
  auto m = detail::dense(a);
  std::vector<Vertex> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  PermutationSet out;
  do {
    if (detail::robinson_dense(m, static_cast<std::size_t>(n), pi)) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

/// Some order satisfies: x < y < z and {x,z} an edge imply {x,y} and {y,z}
/// are edges.
inline bool is_unit_interval_bf(const Graph& g, int cap = kDefaultCap) {
  const int n = g.size();
  detail::check_cap(n, cap);
  std::vector<char> adj(static_cast<std::size_t>(n * n), 0);
  for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;
  std::vector<Vertex> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      for (int k = i + 2; ok && k < n; ++k) {
        if (!adj[pi[i] * n + pi[k]]) continue;
        for (int j = i + 1; j < k; ++j)
          if (!adj[pi[i] * n + pi[j]] || !adj[pi[j] * n + pi[k]]) {
            ok = false;
            break;
          }
      }
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

/// Checks that phi is a straight enumeration of g: its blocks are exactly the
/// classes of vertices with equal closed neighborhoods, and every closed
/// neighborhood is a union of consecutive blocks.
inline bool verify_straight_enumeration(const Graph& g, const WeakLinearOrder& phi) {
  const int n = g.size();
  if (phi.size() != static_cast<std::size_t>(n)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (!phi.contains(v)) return false;

  std::vector<std::vector<Vertex>> mine = phi.blocks();
  for (auto& b : mine) std::sort(b.begin(), b.end());
  std::sort(mine.begin(), mine.end());
  if (mine != blocks_of(g)) return false;

  for (Vertex v = 0; v < n; ++v) {
    std::size_t lo = phi.block_of(v), hi = lo;
    std::size_t members = 1;
    for (Vertex u : g.neighbors(v)) {
      lo = std::min(lo, phi.block_of(u));
      hi = std::max(hi, phi.block_of(u));
      ++members;
    }
    std::size_t span = phi.block_start(hi) + phi.block_size(hi) - phi.block_start(lo);
    if (span != members) return false;
  }
  return true;
}

/// Connected components of g, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex u : g.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// True when every vertex of `earlier` is in a block of psi no later than
/// every vertex of `later`.
inline bool precedes(const WeakLinearOrder& psi, std::span<const Vertex> earlier,
                     std::span<const Vertex> later) {
  std::size_t latest = 0;
  for (Vertex v : earlier) latest = std::max(latest, psi.block_of(v));
  for (Vertex v : later)
    if (psi.block_of(v) < latest) return false;
  return true;
}

inline bool is_compatible_component_order(const WeakLinearOrder& psi,
                                          const std::vector<std::vector<Vertex>>& components) {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!precedes(psi, components[i], components[j])) return false;
  return true;
}

/// Some order of the connected components of g is psi-compatible, found by
/// trying all of them.
inline bool component_order_exists_bf(const Graph& g, const WeakLinearOrder& psi, int cap = kDefaultCap) {
  auto comps = connected_components(g);
  detail::check_cap(static_cast<int>(comps.size()), cap);
  std::vector<std::size_t> idx(comps.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<std::vector<Vertex>> ordered;
    for (auto i : idx) ordered.push_back(comps[i]);
    if (is_compatible_component_order(psi, ordered)) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace robinsonian
