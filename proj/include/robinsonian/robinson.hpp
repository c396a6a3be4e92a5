// Recursive recognition of Robinsonian similarity matrices.
//
// robinson(A, psi) returns a weak linear order Phi whose compatible linear
// orders are exactly the Robinson orderings of A compatible with psi. The
// recursion works level by level: order the connected components of the
// support graph, find each component's straight enumeration, refine it into
// psi, zero the smallest entries and recurse. The recursion is driven by an
// explicit work stack, so deep inputs do not exhaust the call stack.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robinsonian/core_graph.hpp"
#include "robinsonian/lexbfs.hpp"
#include "robinsonian/straight_enum.hpp"
#include "robinsonian/weak_order.hpp"

namespace robinsonian {

enum class Stage { component_ordering, straight_enumeration, refinement };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::component_ordering: return "component ordering";
    case Stage::straight_enumeration: return "straight enumeration";
    case Stage::refinement: return "refinement";
  }
  return "?";
}

/// Why a matrix was rejected, and the vertices of the subproblem that failed.
struct Rejection {
  Stage stage = Stage::component_ordering;
  std::vector<Vertex> vertices;
};

template <class T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(Rejection r) : data_(std::move(r)) {}

  bool ok() const noexcept { return data_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& { return std::get<0>(data_); }
  T& value() & { return std::get<0>(data_); }
  T&& value() && { return std::get<0>(std::move(data_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Rejection& rejection() const { return std::get<1>(data_); }

 private:
  std::variant<T, Rejection> data_;
};

struct NodeStat {
  int depth = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<Weight> stripped;  // level removed in each component that had edges
};

/// Depth counts the nested calls that saw at least one edge, so an edgeless
/// matrix has depth 0 and a binary matrix depth 1. `levels` is the number of
/// distinct nonzero off-diagonal values and bounds `depth`.
struct RecursionStats {
  int depth = 0;
  std::size_t nodes = 0;
  std::size_t levels = 0;
  std::vector<NodeStat> per_node;
};

struct ComponentTrace {
  std::vector<Vertex> vertices;
  WeakLinearOrder enumeration;  // phi
  WeakLinearOrder refinement;   // Phi restricted to the component
  bool reversed = false;        // refinement used the reverse of phi
  std::optional<Weight> stripped;
};

/// One recursive call, with every vertex given by its id in the input matrix.
struct NodeTrace {
  int depth = 0;
  std::vector<Vertex> vertices;
  WeakLinearOrder psi;
  std::vector<ComponentTrace> components;
};

namespace detail {

// How a component sits in the blocks of the parent's psi.
enum class Placement {
  spanning,  // meets at least two blocks
  alone,     // the only component inside its block
  grouped,   // one of several components inside the same block
};

// Output of the recursion kept as a tree. A component entry lists either
// its final blocks (when nothing is left to recurse on) or the component
// entries of its recursive call.
struct ArenaEntry {
  bool is_block = false;
  std::vector<Vertex> block;
  Placement placement = Placement::alone;
  std::size_t group = 0;
  std::vector<int> children;
};

struct Arena {
  std::vector<ArenaEntry> entries;
  int root = -1;
};

struct Task {
  int depth = 1;
  int anchor = -1;
  // Local ids are positions in psi's tau, so psi here is given by its
  // block starts alone.
  std::vector<Vertex> to_global;
  std::vector<std::size_t> psi_starts;
  std::vector<WeightedEdge> edges;
};

inline WeakLinearOrder identity_order(std::size_t k, std::vector<std::size_t> starts) {
  std::vector<Vertex> tau(k);
  for (std::size_t i = 0; i < k; ++i) tau[i] = static_cast<Vertex>(i);
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

class Recognizer {
 public:
  Recognizer(Arena& arena, RecursionStats& stats, std::vector<NodeTrace>* trace)
      : arena_(arena), stats_(stats), trace_(trace) {}

  std::optional<Rejection> run(const SimilarityMatrix& a, const WeakLinearOrder& psi) {
    const int n = a.size();
    if (psi.size() != static_cast<std::size_t>(n))
      throw Error(Errc::vertex_set_mismatch, "psi must order every vertex of the matrix");
    for (Vertex v = 0; v < n; ++v)
      if (!psi.contains(v)) throw Error(Errc::vertex_set_mismatch, "psi must order every vertex of the matrix");

    stats_ = {};
    stats_.levels = distinct_weight_count(a);
    arena_.entries.clear();
    arena_.entries.push_back({});
    arena_.root = 0;

    Task root;
    root.anchor = 0;
    root.to_global.assign(psi.tau().begin(), psi.tau().end());
    for (std::size_t b = 0; b < psi.block_count(); ++b) root.psi_starts.push_back(psi.block_start(b));
    root.edges.reserve(a.edge_count());
    for (const auto& e : a.edges())
      root.edges.push_back({static_cast<Vertex>(psi.position(e.u)), static_cast<Vertex>(psi.position(e.v)), e.w});

    std::vector<Task> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      if (auto r = process(task, stack)) return r;
    }
    return std::nullopt;
  }

 private:
  int add_entry(ArenaEntry e, int parent) {
    int id = static_cast<int>(arena_.entries.size());
    arena_.entries.push_back(std::move(e));
    arena_.entries[parent].children.push_back(id);
    return id;
  }

  std::vector<Vertex> to_globals(const Task& task, std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(task.to_global[v]);
    return out;
  }

  std::optional<Rejection> process(const Task& task, std::vector<Task>& stack) {
    const std::size_t k = task.to_global.size();
    if (!task.edges.empty()) {
      ++stats_.nodes;
      stats_.depth = std::max(stats_.depth, task.depth);
    }
    NodeStat node{task.depth, k, task.edges.size(), 0, {}};

    WeakLinearOrder psi = identity_order(k, task.psi_starts);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(task.edges.size());
    for (const auto& e : task.edges) pairs.emplace_back(e.u, e.v);
    Graph g(static_cast<int>(k), pairs);

    auto co = co_lex_bfs(g, psi);
    if (!co) return Rejection{Stage::component_ordering, task.to_global};
    const std::size_t c = co->components.size();
    node.components = c;

    // Component-local ids are ranks in sigma.
    std::vector<int> comp_of(k), local_id(k);
    for (std::size_t w = 0; w < c; ++w)
      for (std::size_t i = 0; i < co->components[w].size(); ++i) {
        comp_of[co->components[w][i]] = static_cast<int>(w);
        local_id[co->components[w][i]] = static_cast<int>(i);
      }

    // psi restricted to each component: scanning node ids ascending visits
    // vertices in psi order.
    std::vector<std::vector<Vertex>> comp_tau(c);
    std::vector<std::vector<std::size_t>> comp_starts(c);
    std::vector<std::size_t> last_block(c, static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < k; ++v) {
      int w = comp_of[v];
      std::size_t b = psi.block_of(static_cast<Vertex>(v));
      if (b != last_block[w]) {
        comp_starts[w].push_back(comp_tau[w].size());
        last_block[w] = b;
      }
      comp_tau[w].push_back(local_id[v]);
    }

    std::vector<std::vector<WeightedEdge>> comp_edges(c);
    for (const auto& e : task.edges)
      comp_edges[comp_of[e.u]].push_back({local_id[e.u], local_id[e.v], e.w});

    std::vector<std::size_t> inside(psi.block_count(), 0);
    for (std::size_t w = 0; w < c; ++w)
      if (co->first_block[w] == co->last_block[w]) ++inside[co->first_block[w]];

    NodeTrace* trace_node = nullptr;
    if (trace_) {
      trace_->push_back({task.depth, task.to_global,
                         relabel(psi, task.to_global), {}});
      trace_node = &trace_->back();
    }

    std::vector<Task> children;
    for (std::size_t w = 0; w < c; ++w) {
      const auto& members = co->components[w];
      ArenaEntry entry;
      if (co->first_block[w] != co->last_block[w]) {
        entry.placement = Placement::spanning;
      } else if (inside[co->first_block[w]] == 1) {
        entry.placement = Placement::alone;
      } else {
        entry.placement = Placement::grouped;
        entry.group = co->first_block[w];
      }
      int id = add_entry(std::move(entry), task.anchor);

      auto global_members = to_globals(task, members);
      if (members.size() == 1) {
        ArenaEntry leaf;
        leaf.is_block = true;
        leaf.block = global_members;
        add_entry(std::move(leaf), id);
        if (trace_node) {
          auto single = WeakLinearOrder::single_block(global_members);
          trace_node->components.push_back({global_members, single, single, false, std::nullopt});
        }
        continue;
      }

      const int size = static_cast<int>(members.size());
      std::vector<std::pair<Vertex, Vertex>> local_pairs;
      local_pairs.reserve(comp_edges[w].size());
      for (const auto& e : comp_edges[w]) local_pairs.emplace_back(e.u, e.v);
      Graph gw(size, local_pairs);
      std::vector<Vertex> sigma(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) sigma[i] = i;

      auto phi = straight_enumeration_connected(gw, sigma);
      if (!phi) return Rejection{Stage::straight_enumeration, global_members};
      WeakLinearOrder psi_w(std::move(comp_tau[w]), std::move(comp_starts[w]));
      bool reversed = false;
      auto refined = refine(psi_w, *phi);
      if (!refined) {
        refined = refine(psi_w, reverse(*phi));
        reversed = true;
      }
      if (!refined) return Rejection{Stage::refinement, global_members};

      Weight lowest = comp_edges[w].front().w;
      for (const auto& e : comp_edges[w]) lowest = std::min(lowest, e.w);
      node.stripped.push_back(lowest);

      std::vector<Vertex> member_globals(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) member_globals[i] = task.to_global[members[i]];

      if (trace_node) {
        trace_node->components.push_back({global_members, relabel(*phi, member_globals),
                                          relabel(*refined, member_globals), reversed, lowest});
      }

      std::vector<WeightedEdge> kept;
      for (const auto& e : comp_edges[w])
        if (e.w != lowest)
          kept.push_back({static_cast<Vertex>(refined->position(e.u)),
                          static_cast<Vertex>(refined->position(e.v)), e.w});

      if (kept.empty()) {
        for (std::size_t b = 0; b < refined->block_count(); ++b) {
          ArenaEntry block;
          block.is_block = true;
          for (Vertex v : refined->block(b)) block.block.push_back(member_globals[v]);
          add_entry(std::move(block), id);
        }
        continue;
      }

      Task child;
      child.depth = task.depth + 1;
      child.anchor = id;
      child.to_global.reserve(static_cast<std::size_t>(size));
      for (Vertex v : refined->tau()) child.to_global.push_back(member_globals[v]);
      for (std::size_t b = 0; b < refined->block_count(); ++b) child.psi_starts.push_back(refined->block_start(b));
      child.edges = std::move(kept);
      children.push_back(std::move(child));
    }

    if (!task.edges.empty()) stats_.per_node.push_back(std::move(node));
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    return std::nullopt;
  }

  Arena& arena_;
  RecursionStats& stats_;
  std::vector<NodeTrace>* trace_;
};

/// Blocks of the arena in left-to-right order.
inline WeakLinearOrder flatten(const Arena& arena) {
  std::vector<Vertex> tau;
  std::vector<std::size_t> starts;
  std::vector<std::pair<int, std::size_t>> stack{{arena.root, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& entry = arena.entries[id];
    if (next == entry.children.size()) {
      stack.pop_back();
      continue;
    }
    int child = entry.children[next++];
    const auto& ce = arena.entries[child];
    if (ce.is_block) {
      starts.push_back(tau.size());
      tau.insert(tau.end(), ce.block.begin(), ce.block.end());
    } else {
      stack.emplace_back(child, 0);
    }
  }
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

}  // namespace detail

/// Weak linear order Phi such that the Robinson orderings of A compatible
/// with psi are exactly the linear orders compatible with Phi; a Rejection
/// when there is none. psi must order all vertices of A.
inline Result<WeakLinearOrder> robinson(const SimilarityMatrix& a, const WeakLinearOrder& psi,
                                        RecursionStats* stats = nullptr,
                                        std::vector<NodeTrace>* trace = nullptr) {
  detail::Arena arena;
  RecursionStats local;
  RecursionStats& s = stats ? *stats : local;
  if (trace) trace->clear();
  detail::Recognizer rec(arena, s, trace);
  if (auto r = rec.run(a, psi)) return *r;
  return detail::flatten(arena);
}

inline WeakLinearOrder trivial_order(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  return WeakLinearOrder::single_block(std::move(all));
}

/// A Robinson ordering of A, or a Rejection. Vertices that the recognizer
/// leaves tied are listed by ascending label.
inline Result<std::vector<Vertex>> robinsonian_order(const SimilarityMatrix& a,
                                                     RecursionStats* stats = nullptr) {
  auto phi = robinson(a, trivial_order(a.size()), stats);
  if (!phi) return phi.rejection();
  std::vector<Vertex> pi;
  pi.reserve(phi->size());
  for (std::size_t b = 0; b < phi->block_count(); ++b) {
    auto first = pi.insert(pi.end(), phi->block(b).begin(), phi->block(b).end());
    std::sort(first, pi.end(), [&](Vertex x, Vertex y) { return a.label(x) < a.label(y); });
  }
  return pi;
}

/// Records every recursive call made while recognizing A.
inline std::vector<NodeTrace> recursion_trace(const SimilarityMatrix& a) {
  std::vector<NodeTrace> trace;
  robinson(a, trivial_order(a.size()), nullptr, &trace);
  return trace;
}

}  // namespace robinsonian
