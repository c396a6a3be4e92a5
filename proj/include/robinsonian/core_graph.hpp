// Sparse symmetric nonnegative matrices, their support and level graphs.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robinsonian {

using Vertex = int;
using VertexSubset = std::vector<Vertex>;

enum class Errc {
  malformed_input,
  asymmetric_input,
  negative_entry,
  no_edges,
  not_connected,
  vertex_set_mismatch,
  overlapping_supports,
  bad_permutation,
  too_large,
  unknown_format,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Matrix entries are integer ticks so that level graphs can rely on exact
// equality of entries. Scaling from the input text happens in matrix_io.
struct Weight {
  std::int64_t ticks = 0;

  constexpr auto operator<=>(const Weight&) const = default;
};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w;

  constexpr bool operator==(const WeightedEdge&) const = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Weight w;
};

/// Unweighted simple graph in compressed adjacency form. Neighbor lists are
/// sorted ascending.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw Error(Errc::malformed_input, "negative vertex count");
    std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw Error(Errc::malformed_input, "invalid edge {" + std::to_string(u) + "," +
                                               std::to_string(v) + "}");
      ++degree[u];
      ++degree[v];
    }
    std::vector<std::size_t> unsorted_offsets(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) unsorted_offsets[v + 1] = unsorted_offsets[v] + degree[v];
    std::vector<Vertex> unsorted(unsorted_offsets[n]);
    std::vector<std::size_t> fill(unsorted_offsets.begin(), unsorted_offsets.end() - 1);
    for (auto [u, v] : edges) {
      unsorted[fill[u]++] = v;
      unsorted[fill[v]++] = u;
    }
    // Transposing the unsorted lists by scanning sources in ascending order
    // yields sorted lists in O(n + m).
    offsets_ = unsorted_offsets;
    adjacency_.resize(unsorted.size());
    fill.assign(offsets_.begin(), offsets_.end() - 1);
    for (int u = 0; u < n; ++u) {
      for (std::size_t i = unsorted_offsets[u]; i < unsorted_offsets[u + 1]; ++i) {
        adjacency_[fill[unsorted[i]]++] = u;
      }
    }
    for (int v = 0; v < n; ++v) {
      auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      if (std::adjacent_find(first, last) != last)
        throw Error(Errc::malformed_input, "duplicate edge at vertex " + std::to_string(v));
    }
  }

  int size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Symmetric nonnegative matrix stored as its strictly positive off-diagonal
/// entries. The diagonal is not represented. Each vertex carries an external
/// label (1-based by default) that survives restriction.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  SimilarityMatrix(int n, std::vector<WeightedEdge> edges, std::vector<int> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 0) throw Error(Errc::malformed_input, "negative vertex count");
    if (labels_.empty()) {
      labels_.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) labels_[i] = i + 1;
    } else if (labels_.size() != static_cast<std::size_t>(n)) {
      throw Error(Errc::malformed_input, "label map size does not match vertex count");
    }
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw Error(Errc::malformed_input, "edge endpoint out of range");
      if (e.u == e.v) throw Error(Errc::malformed_input, "diagonal entries are not stored");
      if (e.w.ticks <= 0) throw Error(Errc::negative_entry, "stored weights must be positive");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw Error(Errc::malformed_input, "pair {" + std::to_string(edges_[i].u + 1) + "," +
                                               std::to_string(edges_[i].v + 1) +
                                               "} listed twice");
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v): visiting them in that order leaves every
    // list sorted by neighbor except for the back-references, so sort once.
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = {e.v, e.w};
      adjacency_[fill[e.v]++] = {e.u, e.w};
    }
    for (int v = 0; v < n; ++v) {
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
  }

  int size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  int label(Vertex v) const { return labels_[v]; }
  std::span<const int> labels() const noexcept { return labels_; }

  /// Entry A_xy; absent pairs and the diagonal read as zero.
  Weight at(Vertex x, Vertex y) const {
    if (x == y) return {};
    auto nb = neighbors(x);
    auto it = std::lower_bound(nb.begin(), nb.end(), y,
                               [](const Neighbor& a, Vertex b) { return a.vertex < b; });
    if (it != nb.end() && it->vertex == y) return it->w;
    return {};
  }

  bool operator==(const SimilarityMatrix& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
  }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<int> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

inline Graph support_graph(const SimilarityMatrix& a) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(a.edge_count());
  for (const auto& e : a.edges()) pairs.emplace_back(e.u, e.v);
  return Graph(a.size(), pairs);
}

/// Graph with edges {x,y} such that A_xy >= threshold.
inline Graph level_graph(const SimilarityMatrix& a, Weight threshold) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : a.edges())
    if (e.w >= threshold) pairs.emplace_back(e.u, e.v);
  return Graph(a.size(), pairs);
}

/// Principal submatrix A[U]. Vertex i of the result is U[i]; labels follow.
inline SimilarityMatrix restrict(const SimilarityMatrix& a, std::span<const Vertex> subset) {
  std::vector<int> local(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex v = subset[i];
    if (v < 0 || v >= a.size()) throw Error(Errc::malformed_input, "subset vertex out of range");
    if (local[v] != -1) throw Error(Errc::malformed_input, "subset has duplicate vertices");
    local[v] = static_cast<int>(i);
  }
  std::vector<WeightedEdge> kept;
  std::vector<int> labels;
  labels.reserve(subset.size());
  for (Vertex v : subset) {
    labels.push_back(a.label(v));
    for (const auto& nb : a.neighbors(v)) {
      if (local[nb.vertex] != -1 && local[v] < local[nb.vertex])
        kept.push_back({local[v], local[nb.vertex], nb.w});
    }
  }
  return SimilarityMatrix(static_cast<int>(subset.size()), std::move(kept), std::move(labels));
}

/// Sorted distinct stored weights (the positive levels of the matrix).
inline std::vector<Weight> distinct_weights(const SimilarityMatrix& a) {
  std::vector<Weight> ws;
  ws.reserve(a.edge_count());
  for (const auto& e : a.edges()) ws.push_back(e.w);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

inline std::size_t distinct_weight_count(const SimilarityMatrix& a) {
  return distinct_weights(a).size();
}

struct StrippedMatrix {
  SimilarityMatrix matrix;
  Weight min_weight;
};

/// Zeroes every entry equal to the smallest stored weight.
inline StrippedMatrix strip_min(const SimilarityMatrix& a) {
  if (a.edge_count() == 0) throw Error(Errc::no_edges, "strip_min needs at least one edge");
  Weight lowest = a.edges().front().w;
  for (const auto& e : a.edges()) lowest = std::min(lowest, e.w);
  std::vector<WeightedEdge> kept;
  for (const auto& e : a.edges())
    if (e.w != lowest) kept.push_back(e);
  std::vector<int> labels(a.labels().begin(), a.labels().end());
  return {SimilarityMatrix(a.size(), std::move(kept), std::move(labels)), lowest};
}

}  // namespace robinsonian
