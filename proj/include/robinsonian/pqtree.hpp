// PQ-trees encoding every Robinson ordering of a matrix, plus canonical
// form, lazy frontier enumeration, counting and text formats.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "robinsonian/core_graph.hpp"
#include "robinsonian/robinson.hpp"
#include "robinsonian/weak_order.hpp"

namespace robinsonian {

/// Rooted ordered tree. Leaves carry vertex labels; the children of a P-node
/// may be permuted freely and those of a Q-node only reversed.
class PQTree {
 public:
  enum class Kind { leaf, p, q };

  PQTree() : kind_(Kind::q) {}

  static PQTree leaf(int label) {
    PQTree t;
    t.kind_ = Kind::leaf;
    t.label_ = label;
    return t;
  }
  static PQTree p(std::vector<PQTree> children) { return node(Kind::p, std::move(children)); }
  static PQTree q(std::vector<PQTree> children) { return node(Kind::q, std::move(children)); }

  Kind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept { return kind_ == Kind::leaf; }
  int label() const noexcept { return label_; }
  const std::vector<PQTree>& children() const noexcept { return children_; }
  std::vector<PQTree>& children() noexcept { return children_; }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t total = 0;
    for (const auto& c : children_) total += c.leaf_count();
    return total;
  }

  /// Leaf labels left to right.
  std::vector<int> leaves() const {
    std::vector<int> out;
    collect(out);
    return out;
  }

  int min_label() const {
    if (is_leaf()) return label_;
    int best = std::numeric_limits<int>::max();
    for (const auto& c : children_) best = std::min(best, c.min_label());
    return best;
  }

  bool operator==(const PQTree& other) const {
    return kind_ == other.kind_ && label_ == other.label_ && children_ == other.children_;
  }

 private:
  static PQTree node(Kind k, std::vector<PQTree> children) {
    PQTree t;
    t.kind_ = k;
    t.children_ = std::move(children);
    return t;
  }

  void collect(std::vector<int>& out) const {
    if (is_leaf()) {
      out.push_back(label_);
      return;
    }
    for (const auto& c : children_) c.collect(out);
  }

  Kind kind_;
  int label_ = 0;
  std::vector<PQTree> children_;
};

/// Drops single-child nodes, turns two-child Q-nodes into P-nodes (the two
/// encode the same orders), sorts P-children by smallest leaf label and
/// orients each Q-node so its first child has a smaller minimum label than
/// its last child.
inline PQTree canonicalize(const PQTree& t) {
  if (t.is_leaf()) return t;
  std::vector<PQTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  if (kids.size() == 1) return std::move(kids.front());
  if (kids.empty()) return t;

  if (t.kind() == PQTree::Kind::p || kids.size() == 2) {
    std::sort(kids.begin(), kids.end(),
              [](const PQTree& a, const PQTree& b) { return a.min_label() < b.min_label(); });
    return PQTree::p(std::move(kids));
  }
  if (kids.front().min_label() > kids.back().min_label()) std::reverse(kids.begin(), kids.end());
  return PQTree::q(std::move(kids));
}

/// Number of leaf orders the tree encodes: k! per P-node with k children
/// and 2 per Q-node with at least two children.
inline boost::multiprecision::cpp_int count_orders(const PQTree& t) {
  boost::multiprecision::cpp_int total = 1;
  if (t.is_leaf()) return total;
  const std::size_t k = t.children().size();
  if (t.kind() == PQTree::Kind::p) {
    for (std::size_t i = 2; i <= k; ++i) total *= i;
  } else if (k >= 2) {
    total *= 2;
  }
  for (const auto& c : t.children()) total *= count_orders(c);
  return total;
}

/// Enumerates the frontier one order at a time. Each internal node is a
/// digit of a mixed-radix counter: a child permutation for a P-node, an
/// orientation for a Q-node.
class FrontierStream {
 public:
  explicit FrontierStream(const PQTree& t) : tree_(canonicalize(t)) { index(tree_); }
  FrontierStream(const FrontierStream&) = delete;
  FrontierStream& operator=(const FrontierStream&) = delete;

  std::optional<std::vector<int>> next() {
    if (done_) return std::nullopt;
    std::vector<int> out;
    out.reserve(tree_.leaf_count());
    emit(tree_, out);
    advance();
    return out;
  }

 private:
  struct Digit {
    const PQTree* node = nullptr;
    std::vector<std::size_t> perm;
    bool reversed = false;
  };

  void index(const PQTree& t) {
    if (t.is_leaf()) return;
    Digit d;
    d.node = &t;
    for (std::size_t i = 0; i < t.children().size(); ++i) d.perm.push_back(i);
    slot_[&t] = digits_.size();
    digits_.push_back(std::move(d));
    for (const auto& c : t.children()) index(c);
  }

  void emit(const PQTree& t, std::vector<int>& out) const {
    if (t.is_leaf()) {
      out.push_back(t.label());
      return;
    }
    const Digit& d = digits_[slot_.at(&t)];
    const std::size_t k = t.children().size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i;
      if (t.kind() == PQTree::Kind::p) j = d.perm[i];
      else if (d.reversed) j = k - 1 - i;
      emit(t.children()[j], out);
    }
  }

  void advance() {
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
      if (it->node->kind() == PQTree::Kind::p) {
        if (std::next_permutation(it->perm.begin(), it->perm.end())) return;
      } else if (it->node->children().size() >= 2) {
        it->reversed = !it->reversed;
        if (it->reversed) return;
      }
    }
    done_ = true;
  }

  PQTree tree_;
  std::vector<Digit> digits_;
  std::map<const PQTree*, std::size_t> slot_;
  bool done_ = false;
};

/// Every order of the frontier; meant for small trees.
inline std::vector<std::vector<int>> frontier(const PQTree& t) {
  std::vector<std::vector<int>> out;
  FrontierStream stream(t);
  while (auto order = stream.next()) out.push_back(std::move(*order));
  return out;
}

namespace detail {

inline PQTree block_tree(const std::vector<Vertex>& block, const SimilarityMatrix& a) {
  if (block.size() == 1) return PQTree::leaf(a.label(block.front()));
  std::vector<PQTree> leaves;
  for (Vertex v : block) leaves.push_back(PQTree::leaf(a.label(v)));
  return PQTree::p(std::move(leaves));
}

// Children of the Q-node of component entry `id`. Spanning components are
// spliced in, lone components become one child, and components sharing a
// block are gathered under one P-node at the first member's position.
inline std::vector<PQTree> component_children(const Arena& arena, int id, const SimilarityMatrix& a) {
  const auto& entry = arena.entries[id];
  std::map<std::size_t, std::vector<int>> groups;
  for (int c : entry.children) {
    const auto& ce = arena.entries[c];
    if (!ce.is_block && ce.placement == Placement::grouped) groups[ce.group].push_back(c);
  }
  std::vector<PQTree> out;
  for (int c : entry.children) {
    const auto& ce = arena.entries[c];
    if (ce.is_block) {
      out.push_back(block_tree(ce.block, a));
      continue;
    }
    switch (ce.placement) {
      case Placement::spanning: {
        auto sub = component_children(arena, c, a);
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
      case Placement::alone:
        out.push_back(PQTree::q(component_children(arena, c, a)));
        break;
      case Placement::grouped: {
        auto& members = groups[ce.group];
        if (members.empty() || members.front() != c) break;
        std::vector<PQTree> kids;
        for (int m : members) kids.push_back(PQTree::q(component_children(arena, m, a)));
        out.push_back(PQTree::p(std::move(kids)));
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// PQ-tree of all Robinson orderings of A compatible with psi, in canonical
/// form, or the Rejection of the recognizer.
inline Result<PQTree> robinson_pq(const SimilarityMatrix& a, const WeakLinearOrder& psi,
                                  RecursionStats* stats = nullptr) {
  detail::Arena arena;
  RecursionStats local;
  detail::Recognizer rec(arena, stats ? *stats : local, nullptr);
  if (auto r = rec.run(a, psi)) return *r;
  PQTree raw = PQTree::q(detail::component_children(arena, arena.root, a));
  PQTree tree = canonicalize(raw);
  if (tree.leaf_count() != static_cast<std::size_t>(a.size()))
    throw Error(Errc::malformed_input, "internal error: PQ-tree lost leaves");
  return tree;
}

inline Result<PQTree> robinsonian_pq(const SimilarityMatrix& a, RecursionStats* stats = nullptr) {
  return robinson_pq(a, trivial_order(a.size()), stats);
}

enum class Format { bracket, json, dot };

inline Format parse_format(std::string_view name) {
  if (name == "bracket") return Format::bracket;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  throw Error(Errc::unknown_format, "unknown format '" + std::string(name) + "'");
}

namespace detail {

inline void write_bracket(const PQTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(t.label());
    return;
  }
  const bool p = t.kind() == PQTree::Kind::p;
  out += p ? "P(" : "Q[";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i > 0) out += ',';
    write_bracket(t.children()[i], out);
  }
  out += p ? ')' : ']';
}

inline nlohmann::json to_json(const PQTree& t) {
  if (t.is_leaf()) return {{"type", "leaf"}, {"label", t.label()}};
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : t.children()) kids.push_back(to_json(c));
  return {{"type", t.kind() == PQTree::Kind::p ? "P" : "Q"}, {"children", std::move(kids)}};
}

inline int write_dot(const PQTree& t, std::ostringstream& out, int& counter) {
  int self = counter++;
  if (t.is_leaf()) {
    out << "  n" << self << " [label=\"" << t.label() << "\", shape=plaintext];\n";
    return self;
  }
  const bool p = t.kind() == PQTree::Kind::p;
  out << "  n" << self << " [label=\"" << (p ? 'P' : 'Q') << "\", shape="
      << (p ? "circle" : "box") << "];\n";
  for (const auto& c : t.children()) {
    int child = write_dot(c, out, counter);
    out << "  n" << self << " -> n" << child << ";\n";
  }
  return self;
}

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  PQTree parse() {
    PQTree t = node();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::malformed_input, "bracket form, offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  PQTree node() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == 'P' || c == 'Q') {
      ++pos_;
      skip();
      char open = c == 'P' ? '(' : '[';
      char close = c == 'P' ? ')' : ']';
      if (pos_ >= text_.size() || text_[pos_] != open) fail(std::string("expected '") + open + "'");
      ++pos_;
      std::vector<PQTree> kids;
      skip();
      if (pos_ < text_.size() && text_[pos_] == close) {
        ++pos_;
      } else {
        while (true) {
          kids.push_back(node());
          skip();
          if (pos_ >= text_.size()) fail("unexpected end");
          if (text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (text_[pos_] == close) {
            ++pos_;
            break;
          }
          fail(std::string("expected ',' or '") + close + "'");
        }
      }
      return c == 'P' ? PQTree::p(std::move(kids)) : PQTree::q(std::move(kids));
    }
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected a leaf label");
    return PQTree::leaf(std::stoi(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline PQTree from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(Errc::malformed_input, "JSON node needs a string 'type'");
  const auto type = j["type"].get<std::string>();
  if (type == "leaf") {
    if (!j.contains("label") || !j["label"].is_number_integer())
      throw Error(Errc::malformed_input, "JSON leaf needs an integer 'label'");
    return PQTree::leaf(j["label"].get<int>());
  }
  if (type != "P" && type != "Q") throw Error(Errc::malformed_input, "unknown JSON node type '" + type + "'");
  if (!j.contains("children") || !j["children"].is_array())
    throw Error(Errc::malformed_input, "JSON node needs a 'children' array");
  std::vector<PQTree> kids;
  for (const auto& c : j["children"]) kids.push_back(from_json(c));
  return type == "P" ? PQTree::p(std::move(kids)) : PQTree::q(std::move(kids));
}

}  // namespace detail

inline std::string serialize(const PQTree& t, Format format) {
  switch (format) {
    case Format::bracket: {
      std::string out;
      detail::write_bracket(t, out);
      return out;
    }
    case Format::json:
      return detail::to_json(t).dump();
    case Format::dot: {
      std::ostringstream out;
      out << "digraph pqtree {\n";
      int counter = 0;
      detail::write_dot(t, out, counter);
      out << "}\n";
      return out.str();
    }
  }
  throw Error(Errc::unknown_format, "unknown format");
}

inline PQTree parse_bracket(std::string_view text) { return detail::BracketParser(text).parse(); }

inline PQTree parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_input, std::string("JSON: ") + e.what());
  }
  return detail::from_json(j);
}

inline PQTree parse(std::string_view text, Format format) {
  switch (format) {
    case Format::bracket: return parse_bracket(text);
    case Format::json: return parse_json(text);
    case Format::dot: break;
  }
  throw Error(Errc::unknown_format, "DOT output cannot be parsed back");
}

}  // namespace robinsonian
