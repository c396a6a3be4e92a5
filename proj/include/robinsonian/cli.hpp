// Command-line front end. main_entry is separate from main so tests can
// drive it with string streams.
//
// Exit codes: 0 success / Robinson, 1 not Robinsonian / not Robinson,
// 2 malformed input or flags.

#pragma once

#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "robinsonian/matrix_io.hpp"
#include "robinsonian/oracle.hpp"
#include "robinsonian/pqtree.hpp"
#include "robinsonian/robinson.hpp"

namespace robinsonian::cli {

struct CommandConfig {
  std::string command;
  std::string input;
  LoadOptions load;
  std::string format = "bracket";
  std::string perm;
  int cap = kDefaultCap;
};

namespace detail {

inline std::string stats_line(const RecursionStats& s, const SimilarityMatrix& a) {
  return "d=" + std::to_string(s.depth) + " L=" + std::to_string(s.levels) +
         " n=" + std::to_string(a.size()) + " m=" + std::to_string(a.edge_count());
}

inline void print_labels(std::ostream& out, const SimilarityMatrix& a, const std::vector<Vertex>& order) {
  for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << a.label(order[i]);
  out << '\n';
}

inline void print_rejection(std::ostream& out, const Rejection& r) {
  out << "NOT ROBINSONIAN (stage: " << to_string(r.stage) << ")\n";
}

// "--perm 2,1,3" in input labels, mapped to vertex ids.
inline std::vector<Vertex> parse_perm(const std::string& text, const SimilarityMatrix& a) {
  std::vector<Vertex> by_label;
  for (Vertex v = 0; v < a.size(); ++v) {
    int l = a.label(v);
    if (l >= static_cast<int>(by_label.size())) by_label.resize(static_cast<std::size_t>(l) + 1, -1);
    by_label[l] = v;
  }
  std::vector<Vertex> pi;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    int label = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec != std::errc() || ptr != token.data() + token.size() || label < 0 ||
        label >= static_cast<int>(by_label.size()) || by_label[label] < 0)
      throw Error(Errc::bad_permutation, "--perm: '" + token + "' is not a vertex label");
    pi.push_back(by_label[label]);
    pos = comma + 1;
  }
  robinsonian::detail::require_permutation(pi, a.size());
  return pi;
}

}  // namespace detail

inline int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const SimilarityMatrix a = load_matrix_file(config.input, config.load);

    if (config.command == "recognize" || config.command == "stats") {
      RecursionStats stats;
      auto result = robinsonian_order(a, &stats);
      if (!result) {
        detail::print_rejection(out, result.rejection());
        return 1;
      }
      if (config.command == "recognize") {
        detail::print_labels(out, a, *result);
        out << detail::stats_line(stats, a) << '\n';
      } else {
        out << detail::stats_line(stats, a) << " nodes=" << stats.nodes << '\n';
        for (const auto& node : stats.per_node)
          out << "depth=" << node.depth << " vertices=" << node.vertices << " edges=" << node.edges
              << " components=" << node.components << '\n';
      }
      return 0;
    }

    if (config.command == "pqtree") {
      const Format format = parse_format(config.format);
      auto tree = robinsonian_pq(a);
      if (!tree) {
        detail::print_rejection(out, tree.rejection());
        return 1;
      }
      out << serialize(*tree, format);
      if (format != Format::dot) out << '\n';
      return 0;
    }

    if (config.command == "check") {
      std::vector<Vertex> pi;
      if (!config.perm.empty()) pi = detail::parse_perm(config.perm, a);
      bool ok = is_robinson(a, pi);
      out << (ok ? "ROBINSON" : "NOT ROBINSON") << '\n';
      return ok ? 0 : 1;
    }

    if (config.command == "oracle") {
      auto orders = brute_force(a, config.cap);
      for (const auto& pi : orders) detail::print_labels(out, a, pi);
      out << orders.size() << " Robinson orderings\n";
      return orders.empty() ? 1 : 0;
    }

    err << "error: unknown command '" << config.command << "'\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize Robinsonian similarity matrices"};
  app.require_subcommand(1);
  CommandConfig config;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "matrix file (dense or sparse text)")->required();
    sub->add_flag("--dissimilarity", config.load.dissimilarity, "input is a dissimilarity; use a_max - d");
    sub->add_flag("--shift", config.load.shift, "subtract the smallest off-diagonal value");
    sub->add_option_function<double>(
        "--quantize", [&](const double& eps) { config.load.quantize = eps; },
        "round values to multiples of this step");
  };

  auto* recognize = app.add_subcommand("recognize", "print a Robinson ordering and recursion stats");
  add_input(recognize);
  auto* pqtree = app.add_subcommand("pqtree", "print the PQ-tree of all Robinson orderings");
  add_input(pqtree);
  pqtree->add_option("--format", config.format, "bracket, json or dot")
      ->check(CLI::IsMember({"bracket", "json", "dot"}));
  auto* check = app.add_subcommand("check", "test whether a given order is Robinson");
  add_input(check);
  check->add_option("--perm", config.perm, "comma-separated labels (default: input order)");
  auto* oracle = app.add_subcommand("oracle", "list all Robinson orderings by brute force");
  add_input(oracle);
  oracle->add_option("--cap", config.cap, "largest n accepted")->check(CLI::Range(0, 12));
  auto* stats = app.add_subcommand("stats", "print recursion statistics");
  add_input(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }
  for (auto* sub : {recognize, pqtree, check, oracle, stats})
    if (sub->parsed()) config.command = sub->get_name();
  return run(config, out, err);
}

}  // namespace robinsonian::cli
