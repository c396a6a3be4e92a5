// Weak linear orders (ordered partitions) and the order algebra used by the
// recognizer: common refinement, reversal, restriction, concatenation.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robinsonian/core_graph.hpp"

namespace robinsonian {

/// Ordered partition (B_1, ..., B_p) of a vertex set, stored as a linear order
/// tau compatible with it plus the positions where blocks start. Every block
/// is a contiguous interval of tau, so block membership is a position lookup.
class WeakLinearOrder {
 public:
  WeakLinearOrder() = default;

  /// `block_starts` lists the first tau position of every block, ascending,
  /// beginning with 0. An empty tau takes an empty `block_starts`.
  WeakLinearOrder(std::vector<Vertex> tau, std::vector<std::size_t> block_starts)
      : tau_(std::move(tau)), starts_(std::move(block_starts)) {
    if (tau_.empty() != starts_.empty() || (!starts_.empty() && starts_.front() != 0))
      throw Error(Errc::malformed_input, "block starts must begin at position 0");
    for (std::size_t i = 1; i < starts_.size(); ++i)
      if (starts_[i] <= starts_[i - 1] || starts_[i] >= tau_.size())
        throw Error(Errc::malformed_input, "blocks must be nonempty and ascending");
    starts_.push_back(tau_.size());
    index();
  }

  static WeakLinearOrder from_blocks(const std::vector<std::vector<Vertex>>& blocks) {
    std::vector<Vertex> tau;
    std::vector<std::size_t> starts;
    for (const auto& b : blocks) {
      if (b.empty()) throw Error(Errc::malformed_input, "empty block");
      starts.push_back(tau.size());
      tau.insert(tau.end(), b.begin(), b.end());
    }
    return WeakLinearOrder(std::move(tau), std::move(starts));
  }

  static WeakLinearOrder single_block(std::vector<Vertex> vertices) {
    std::vector<std::size_t> starts;
    if (!vertices.empty()) starts.push_back(0);
    return WeakLinearOrder(std::move(vertices), std::move(starts));
  }

  static WeakLinearOrder linear(std::vector<Vertex> order) {
    std::vector<std::size_t> starts(order.size());
    for (std::size_t i = 0; i < starts.size(); ++i) starts[i] = i;
    return WeakLinearOrder(std::move(order), std::move(starts));
  }

  std::size_t size() const noexcept { return tau_.size(); }
  bool empty() const noexcept { return tau_.empty(); }
  std::size_t block_count() const noexcept { return starts_.size() - 1; }
  std::span<const Vertex> tau() const noexcept { return tau_; }

  std::size_t block_start(std::size_t b) const { return starts_[b]; }
  std::size_t block_size(std::size_t b) const { return starts_[b + 1] - starts_[b]; }
  std::span<const Vertex> block(std::size_t b) const {
    return {tau_.data() + starts_[b], block_size(b)};
  }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < position_of_.size() && position_of_[v] >= 0;
  }
  std::size_t position(Vertex v) const { return static_cast<std::size_t>(position_of_[v]); }
  std::size_t block_of(Vertex v) const { return block_of_position_[position(v)]; }

  std::vector<std::vector<Vertex>> blocks() const {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t b = 0; b < block_count(); ++b)
      out.emplace_back(block(b).begin(), block(b).end());
    return out;
  }

  bool is_linear() const noexcept { return block_count() == size(); }

  /// Equal when the blocks agree as sets, in the same order.
  bool operator==(const WeakLinearOrder& other) const {
    if (size() != other.size() || block_count() != other.block_count()) return false;
    for (std::size_t b = 0; b < block_count(); ++b) {
      if (block_size(b) != other.block_size(b)) return false;
      for (Vertex v : block(b))
        if (!other.contains(v) || other.block_of(v) != b) return false;
    }
    return true;
  }

 private:
  void index() {
    Vertex largest = -1;
    for (Vertex v : tau_) {
      if (v < 0) throw Error(Errc::malformed_input, "negative vertex id");
      largest = std::max(largest, v);
    }
    position_of_.assign(static_cast<std::size_t>(largest + 1), -1);
    block_of_position_.resize(tau_.size());
    for (std::size_t b = 0; b + 1 < starts_.size(); ++b) {
      for (std::size_t i = starts_[b]; i < starts_[b + 1]; ++i) {
        if (position_of_[tau_[i]] >= 0)
          throw Error(Errc::malformed_input, "vertex " + std::to_string(tau_[i]) + " repeated");
        position_of_[tau_[i]] = static_cast<std::ptrdiff_t>(i);
        block_of_position_[i] = b;
      }
    }
  }

  std::vector<Vertex> tau_;
  std::vector<std::size_t> starts_{0};
  std::vector<std::size_t> block_of_position_;
  std::vector<std::ptrdiff_t> position_of_;
};

inline bool same_vertex_set(const WeakLinearOrder& a, const WeakLinearOrder& b) {
  if (a.size() != b.size()) return false;
  for (Vertex v : a.tau())
    if (!b.contains(v)) return false;
  return true;
}

/// Common refinement psi ^ phi, or nullopt when the two orders are not
/// compatible. Peels the blocks of phi from the left; the part of psi that
/// is still unpeeled is always (tail of one block, all later blocks), so each
/// peel costs O(|C|).
inline std::optional<WeakLinearOrder> refine(const WeakLinearOrder& psi,
                                             const WeakLinearOrder& phi) {
  if (!same_vertex_set(psi, phi))
    throw Error(Errc::vertex_set_mismatch, "refine needs orders over the same vertex set");
  if (psi.empty()) return psi;

  std::vector<Vertex> tau;
  std::vector<std::size_t> starts;
  tau.reserve(psi.size());
  std::size_t front = 0;                     // first psi block meeting W
  std::size_t front_left = psi.block_size(0);  // its vertices still in W
  std::vector<std::vector<Vertex>> buckets;

  for (std::size_t c = 0; c < phi.block_count(); ++c) {
    auto peel = phi.block(c);
    std::size_t last = front;
    for (Vertex v : peel) last = std::max(last, psi.block_of(v));

    std::size_t below = 0;
    for (Vertex v : peel)
      if (psi.block_of(v) < last) ++below;
    std::size_t needed =
        last == front ? 0 : front_left + psi.block_start(last) - psi.block_start(front + 1);
    if (below != needed) return std::nullopt;

    buckets.assign(last - front + 1, {});
    for (Vertex v : peel) buckets[psi.block_of(v) - front].push_back(v);
    for (const auto& bucket : buckets) {
      if (bucket.empty()) continue;
      starts.push_back(tau.size());
      tau.insert(tau.end(), bucket.begin(), bucket.end());
    }

    std::size_t last_left =
        (last == front ? front_left : psi.block_size(last)) - buckets.back().size();
    if (last_left == 0) {
      front = last + 1;
      front_left = front < psi.block_count() ? psi.block_size(front) : 0;
    } else {
      front = last;
      front_left = last_left;
    }
  }
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

inline WeakLinearOrder reverse(const WeakLinearOrder& psi) {
  std::vector<Vertex> tau(psi.tau().rbegin(), psi.tau().rend());
  std::vector<std::size_t> starts;
  starts.reserve(psi.block_count());
  for (std::size_t b = psi.block_count(); b-- > 0;)
    starts.push_back(psi.size() - psi.block_start(b) - psi.block_size(b));
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

/// psi[U]: blocks intersected with U, empty intersections dropped.
inline WeakLinearOrder restrict_order(const WeakLinearOrder& psi, std::span<const Vertex> subset) {
  std::vector<Vertex> tau(subset.begin(), subset.end());
  for (Vertex v : tau)
    if (!psi.contains(v))
      throw Error(Errc::vertex_set_mismatch, "vertex " + std::to_string(v) + " not ordered");
  std::sort(tau.begin(), tau.end(),
            [&](Vertex a, Vertex b) { return psi.position(a) < psi.position(b); });
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < tau.size(); ++i)
    if (i == 0 || psi.block_of(tau[i]) != psi.block_of(tau[i - 1])) starts.push_back(i);
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

inline WeakLinearOrder concatenate(std::span<const WeakLinearOrder> parts) {
  std::vector<Vertex> tau;
  std::vector<std::size_t> starts;
  for (const auto& part : parts) {
    for (std::size_t b = 0; b < part.block_count(); ++b) starts.push_back(tau.size() + part.block_start(b));
    tau.insert(tau.end(), part.tau().begin(), part.tau().end());
  }
  try {
    return WeakLinearOrder(std::move(tau), std::move(starts));
  } catch (const Error&) {
    throw Error(Errc::overlapping_supports, "concatenated orders must have disjoint supports");
  }
}

/// True iff no pair is strictly ordered one way by psi and the other by pi.
inline bool is_compatible(const WeakLinearOrder& psi, std::span<const Vertex> pi) {
  if (pi.size() != psi.size())
    throw Error(Errc::vertex_set_mismatch, "linear order has the wrong size");
  std::vector<char> seen(psi.size(), 0);
  std::size_t previous = 0;
  bool ok = true;
  for (Vertex v : pi) {
    if (!psi.contains(v) || seen[psi.position(v)])
      throw Error(Errc::vertex_set_mismatch, "not a linear order of the same vertex set");
    seen[psi.position(v)] = 1;
    if (psi.block_of(v) < previous) ok = false;
    previous = psi.block_of(v);
  }
  return ok;
}

/// Renames vertex v to names[v].
inline WeakLinearOrder relabel(const WeakLinearOrder& psi, std::span<const int> names) {
  std::vector<Vertex> tau;
  tau.reserve(psi.size());
  for (Vertex v : psi.tau()) tau.push_back(names[v]);
  std::vector<std::size_t> starts;
  for (std::size_t b = 0; b < psi.block_count(); ++b) starts.push_back(psi.block_start(b));
  return WeakLinearOrder(std::move(tau), std::move(starts));
}

/// Renders `({a,b},{c},...)`; vertices inside a block are listed ascending.
inline std::string to_string(const WeakLinearOrder& psi) {
  std::string out = "(";
  for (std::size_t b = 0; b < psi.block_count(); ++b) {
    std::vector<Vertex> members(psi.block(b).begin(), psi.block(b).end());
    std::sort(members.begin(), members.end());
    if (b > 0) out += ',';
    out += '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(members[i]);
    }
    out += '}';
  }
  return out + ")";
}

}  // namespace robinsonian
