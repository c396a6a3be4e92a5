// Lexicographic breadth-first search by partition refinement, the Lex-BFS+
// sweep, and the component-ordering search (CO-Lex-BFS) that orders the
// connected components of a graph compatibly with a weak linear order.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "robinsonian/core_graph.hpp"
#include "robinsonian/weak_order.hpp"

namespace robinsonian {

namespace detail {

inline void require_permutation(std::span<const Vertex> order, int n) {
  if (order.size() != static_cast<std::size_t>(n))
    throw Error(Errc::bad_permutation, "order must list every vertex once");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw Error(Errc::bad_permutation, "order must list every vertex once");
    seen[v] = 1;
  }
}

/// Lex-BFS over `g` where ties between equally labelled vertices go to the
/// vertex that comes first in `initial`. Unvisited vertices live in one
/// doubly linked list, grouped into contiguous classes of equal label; the
/// class with the largest label is at the front. Visiting p moves each
/// unvisited neighbor to a new class right before its old one. Neighbors are
/// scanned in `initial` order, which keeps every class sorted by that order.
///
/// `visit(p, labelled)` is called for every vertex in visiting order;
/// `labelled` is false when p had no visited neighbor. Returning false stops
/// the search.
template <class Visit>
void lex_bfs_run(const Graph& g, std::span<const Vertex> initial, Visit&& visit) {
  const int n = g.size();
  if (n == 0) return;

  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + static_cast<std::size_t>(g.degree(v));
  std::vector<Vertex> by_rank(offsets[n]);
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (Vertex v : initial)
      for (Vertex u : g.neighbors(v)) by_rank[fill[u]++] = v;
  }

  constexpr int kNone = -1;
  std::vector<int> next(static_cast<std::size_t>(n)), prev(static_cast<std::size_t>(n));
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0), labelled(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    prev[initial[i]] = i == 0 ? kNone : initial[i - 1];
    next[initial[i]] = i + 1 == n ? kNone : initial[i + 1];
  }
  int head = initial[0];

  // Class records. first_of[c] is kNone once the class is empty.
  std::vector<int> first_of{head};
  std::vector<int> split_into{kNone};
  std::vector<int> split_round{-1};

  auto unlink = [&](int v) {
    if (prev[v] != kNone) next[prev[v]] = next[v]; else head = next[v];
    if (next[v] != kNone) prev[next[v]] = prev[v];
  };
  auto insert_before = [&](int v, int at) {
    prev[v] = prev[at];
    next[v] = at;
    if (prev[at] != kNone) next[prev[at]] = v; else head = v;
    prev[at] = v;
  };
  auto drop_front = [&](int v) {
    int c = cls[v];
    if (first_of[c] == v) first_of[c] = (next[v] != kNone && cls[next[v]] == c) ? next[v] : kNone;
  };

  for (int round = 0; round < n; ++round) {
    int p = head;
    drop_front(p);
    unlink(p);
    visited[p] = 1;
    if (!visit(p, labelled[p] != 0)) return;

    for (std::size_t i = offsets[p]; i < offsets[p + 1]; ++i) {
      int w = by_rank[i];
      if (visited[w]) continue;
      labelled[w] = 1;
      int old = cls[w];
      if (split_round[old] != round) {
        split_round[old] = round;
        split_into[old] = static_cast<int>(first_of.size());
        first_of.push_back(kNone);
        split_into.push_back(kNone);
        split_round.push_back(-1);
      }
      int fresh = split_into[old];
      if (first_of[old] == w) {
        // w already sits right after the members of `fresh`.
        drop_front(w);
      } else {
        unlink(w);
        insert_before(w, first_of[old]);
      }
      cls[w] = fresh;
      if (first_of[fresh] == kNone) first_of[fresh] = w;
    }
  }
}

}  // namespace detail

/// Lex-BFS from `start`; remaining ties go to the smaller vertex id.
inline std::vector<Vertex> lex_bfs(const Graph& g, Vertex start) {
  if (g.size() == 0) return {};
  if (start < 0 || start >= g.size()) throw Error(Errc::bad_permutation, "start vertex out of range");
  std::vector<Vertex> initial{start};
  for (Vertex v = 0; v < g.size(); ++v)
    if (v != start) initial.push_back(v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(g.size()));
  detail::lex_bfs_run(g, initial, [&](Vertex p, bool) {
    order.push_back(p);
    return true;
  });
  return order;
}

/// Lex-BFS+: ties go to the vertex occurring last in `previous`, so the
/// sweep starts at the last vertex of `previous`.
inline std::vector<Vertex> lex_bfs_plus(const Graph& g, std::span<const Vertex> previous) {
  detail::require_permutation(previous, g.size());
  std::vector<Vertex> initial(previous.rbegin(), previous.rend());
  std::vector<Vertex> order;
  order.reserve(previous.size());
  detail::lex_bfs_run(g, initial, [&](Vertex p, bool) {
    order.push_back(p);
    return true;
  });
  return order;
}

struct ComponentOrdering {
  /// Connected components V_1, ..., V_c in the returned order; each lists
  /// its vertices in visiting order.
  std::vector<std::vector<Vertex>> components;
  /// Vertex order visiting the components contiguously, in component order.
  std::vector<Vertex> sigma;
  /// Indices of the first and last blocks of psi meeting each component.
  std::vector<std::size_t> first_block;
  std::vector<std::size_t> last_block;
};

/// Finds the connected components of `g` and orders them so that
/// V_1 <=_psi ... <=_psi V_c. Returns nullopt when no such order exists.
/// Ties in the search go to the vertex that comes first in psi's tau.
inline std::optional<ComponentOrdering> co_lex_bfs(const Graph& g, const WeakLinearOrder& psi) {
  const int n = g.size();
  if (psi.size() != static_cast<std::size_t>(n))
    throw Error(Errc::vertex_set_mismatch, "psi must order the vertices of the graph");
  for (Vertex v = 0; v < n; ++v)
    if (!psi.contains(v)) throw Error(Errc::vertex_set_mismatch, "psi must order the vertices of the graph");

  struct Record {
    std::vector<Vertex> vertices;
    std::size_t first = 0;
    std::size_t last = 0;
    int prev = -1;
    int next = -1;
  };
  std::vector<Record> records;
  int list_head = -1;
  int list_tail = -1;
  bool failed = false;

  // Checks run on every completed component: inner blocks must be covered,
  // and the component must fit after the tail component or right before it.
  auto complete = [&](std::size_t index) {
    Record& r = records[index];
    std::size_t lo = psi.position(r.vertices.front());
    std::size_t hi = lo;
    for (Vertex v : r.vertices) {
      lo = std::min(lo, psi.position(v));
      hi = std::max(hi, psi.position(v));
    }
    r.first = psi.block_of(psi.tau()[lo]);
    r.last = psi.block_of(psi.tau()[hi]);
    if (r.last > r.first + 1) {
      std::size_t inner = 0;
      for (Vertex v : r.vertices) {
        std::size_t b = psi.block_of(v);
        if (b > r.first && b < r.last) ++inner;
      }
      if (inner != psi.block_start(r.last) - psi.block_start(r.first + 1)) return false;
    }
    int self = static_cast<int>(index);
    if (list_tail == -1) {
      list_head = list_tail = self;
      return true;
    }
    Record& tail = records[list_tail];
    // Swap when r lies in the first block of a tail that reaches further.
    // If the tail also stays inside that block, both orders are compatible
    // and discovery order is kept.
    if (r.first == r.last && r.first == tail.first && tail.last != tail.first) {
      r.prev = tail.prev;
      r.next = list_tail;
      if (tail.prev != -1) records[tail.prev].next = self; else list_head = self;
      tail.prev = self;
      return true;
    }
    if (r.first < tail.last) return false;
    r.prev = list_tail;
    tail.next = self;
    list_tail = self;
    return true;
  };

  detail::lex_bfs_run(g, psi.tau(), [&](Vertex p, bool labelled) {
    if (!labelled) {
      if (!records.empty() && !complete(records.size() - 1)) {
        failed = true;
        return false;
      }
      records.emplace_back();
    }
    records.back().vertices.push_back(p);
    return true;
  });
  if (failed) return std::nullopt;
  if (!records.empty() && !complete(records.size() - 1)) return std::nullopt;

  ComponentOrdering out;
  out.sigma.reserve(static_cast<std::size_t>(n));
  for (int i = list_head; i != -1; i = records[i].next) {
    out.sigma.insert(out.sigma.end(), records[i].vertices.begin(), records[i].vertices.end());
    out.first_block.push_back(records[i].first);
    out.last_block.push_back(records[i].last);
    out.components.push_back(std::move(records[i].vertices));
  }
  return out;
}

}  // namespace robinsonian
