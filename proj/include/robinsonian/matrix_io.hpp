// Text formats for similarity matrices.
//
// Dense form: n rows of n values separated by whitespace or commas.
// Sparse form: a header line "n m" followed by m lines "i j w" with
// 1 <= i, j <= n, i != j. Lines starting with '#' are comments.
//
// Values are converted to integer ticks. By default every value must be an
// exact decimal literal and all values share the finest decimal scale that
// occurs in the input. With a quantization step eps, value x maps to
// round(x / eps) ticks.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "robinsonian/core_graph.hpp"

namespace robinsonian {

struct LoadOptions {
  bool dissimilarity = false;  // use a_max - d on off-diagonal pairs
  bool shift = false;          // subtract the smallest off-diagonal value
  std::optional<double> quantize;
};

namespace detail {

struct TextLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> tokenize(std::istream& in) {
  std::vector<TextLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    for (char& c : raw)
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream fields(raw);
    TextLine line{number, {}};
    std::string token;
    while (fields >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void malformed(std::size_t line, const std::string& what) {
  throw Error(Errc::malformed_input, "line " + std::to_string(line) + ": " + what);
}

// A parsed numeric literal before it is put on the common tick scale.
struct Literal {
  std::int64_t mantissa = 0;
  int fraction_digits = 0;
  double approx = 0.0;
};

inline Literal parse_literal(const std::string& token, std::size_t line, bool exact) {
  Literal lit;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, lit.approx);
  if (ec != std::errc() || ptr != last || !std::isfinite(lit.approx))
    malformed(line, "cannot parse value '" + token + "'");
  if (!exact) return lit;

  std::size_t i = 0;
  bool negative = false;
  if (token[i] == '+' || token[i] == '-') negative = token[i++] == '-';
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < token.size(); ++i) {
    char c = token[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9')
      malformed(line, "value '" + token + "' is not an exact decimal (use --quantize)");
    seen_digit = true;
    if (lit.mantissa > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
      malformed(line, "value '" + token + "' has too many digits (use --quantize)");
    lit.mantissa = lit.mantissa * 10 + (c - '0');
    if (seen_point) ++lit.fraction_digits;
  }
  if (!seen_digit) malformed(line, "cannot parse value '" + token + "'");
  if (negative) lit.mantissa = -lit.mantissa;
  return lit;
}

inline std::int64_t to_ticks(const Literal& lit, int scale, std::optional<double> quantize,
                             std::size_t line) {
  if (quantize) {
    double q = std::round(lit.approx / *quantize);
    if (!(std::fabs(q) < 4.0e18)) malformed(line, "value too large for quantization step");
    return static_cast<std::int64_t>(q);
  }
  __int128 t = lit.mantissa;
  for (int k = lit.fraction_digits; k < scale; ++k) {
    t *= 10;
    if (t > std::numeric_limits<std::int64_t>::max() / 4 ||
        t < -(std::numeric_limits<std::int64_t>::max() / 4))
      malformed(line, "values span too many decimal places (use --quantize)");
  }
  return static_cast<std::int64_t>(t);
}

struct PairValue {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t ticks = 0;
};

inline SimilarityMatrix finish(int n, std::vector<PairValue> pairs, const LoadOptions& options) {
  const std::size_t all_pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const bool has_absent = pairs.size() < all_pairs;
  std::int64_t absent_value = 0;

  if (options.dissimilarity && n > 1) {
    std::int64_t a_max = has_absent ? absent_value : std::numeric_limits<std::int64_t>::min();
    for (const auto& p : pairs) a_max = std::max(a_max, p.ticks);
    for (auto& p : pairs) p.ticks = a_max - p.ticks;
    absent_value = a_max - absent_value;
  }
  if (options.shift && n > 1) {
    std::int64_t lowest = has_absent ? absent_value : std::numeric_limits<std::int64_t>::max();
    for (const auto& p : pairs) lowest = std::min(lowest, p.ticks);
    for (auto& p : pairs) p.ticks -= lowest;
    absent_value -= lowest;
  }
  if (absent_value != 0 && has_absent) {
    std::vector<char> present(all_pairs, 0);
    auto index = [n](Vertex u, Vertex v) {
      return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(n) - u - 1) / 2 +
             static_cast<std::size_t>(v - u - 1);
    };
    for (const auto& p : pairs) present[index(p.u, p.v)] = 1;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!present[index(u, v)]) pairs.push_back({u, v, absent_value});
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.ticks < 0)
      throw Error(Errc::negative_entry, "negative entry at pair {" + std::to_string(p.u + 1) +
                                            "," + std::to_string(p.v + 1) +
                                            "} (use --shift)");
    if (p.ticks > 0) edges.push_back({p.u, p.v, Weight{p.ticks}});
  }
  return SimilarityMatrix(n, std::move(edges));
}

inline bool looks_sparse(const std::vector<TextLine>& lines) {
  if (lines.front().tokens.size() != 2) return false;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].tokens.size() != 3) return false;
  return true;
}

inline int parse_count(const std::string& token, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 ||
      value > std::numeric_limits<int>::max())
    malformed(line, std::string("invalid ") + what + " '" + token + "'");
  return static_cast<int>(value);
}

inline SimilarityMatrix parse_sparse(const std::vector<TextLine>& lines,
                                     const LoadOptions& options) {
  const auto& header = lines.front();
  int n = parse_count(header.tokens[0], header.number, "vertex count");
  int m = parse_count(header.tokens[1], header.number, "edge count");
  if (static_cast<std::size_t>(m) != lines.size() - 1)
    malformed(header.number, "header announces " + std::to_string(m) + " entries but " +
                                 std::to_string(lines.size() - 1) + " follow");
  const bool exact = !options.quantize;
  std::vector<Literal> literals;
  int scale = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    literals.push_back(parse_literal(lines[k].tokens[2], lines[k].number, exact));
    scale = std::max(scale, literals.back().fraction_digits);
  }
  std::vector<PairValue> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    int i = parse_count(line.tokens[0], line.number, "row index");
    int j = parse_count(line.tokens[1], line.number, "column index");
    if (i < 1 || j < 1 || i > n || j > n) malformed(line.number, "index out of range");
    if (i == j) malformed(line.number, "diagonal entries are not allowed in sparse form");
    if (i > j) std::swap(i, j);
    pairs.push_back({i - 1, j - 1, to_ticks(literals[k - 1], scale, options.quantize, line.number)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PairValue& a, const PairValue& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t k = 1; k < pairs.size(); ++k)
    if (pairs[k].u == pairs[k - 1].u && pairs[k].v == pairs[k - 1].v)
      throw Error(Errc::malformed_input, "pair {" + std::to_string(pairs[k].u + 1) + "," +
                                             std::to_string(pairs[k].v + 1) + "} listed twice");
  return finish(n, std::move(pairs), options);
}

inline SimilarityMatrix parse_dense(const std::vector<TextLine>& lines, const LoadOptions& options) {
  const std::size_t n = lines.size();
  for (const auto& line : lines)
    if (line.tokens.size() != n)
      malformed(line.number, "expected " + std::to_string(n) + " values, found " +
                                 std::to_string(line.tokens.size()));
  const bool exact = !options.quantize;
  std::vector<Literal> literals(n * n);
  int scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      literals[i * n + j] = parse_literal(lines[i].tokens[j], lines[i].number, exact);
      scale = std::max(scale, literals[i * n + j].fraction_digits);
    }
  std::vector<PairValue> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& upper = literals[i * n + j];
      const auto& lower = literals[j * n + i];
      std::int64_t up = to_ticks(upper, scale, options.quantize, lines[i].number);
      bool symmetric = options.quantize
                           ? std::fabs(upper.approx - lower.approx) <= *options.quantize
                           : up == to_ticks(lower, scale, options.quantize, lines[j].number);
      if (!symmetric)
        throw Error(Errc::asymmetric_input,
                    "line " + std::to_string(lines[j].number) + ": entry (" +
                        std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") differs from (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");
      pairs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), up});
    }
  return finish(static_cast<int>(n), std::move(pairs), options);
}

}  // namespace detail

inline SimilarityMatrix load_matrix(std::istream& in, const LoadOptions& options = {}) {
  if (options.quantize && !(*options.quantize > 0.0))
    throw Error(Errc::malformed_input, "quantization step must be positive");
  auto lines = detail::tokenize(in);
  if (lines.empty()) throw Error(Errc::malformed_input, "empty input");
  if (detail::looks_sparse(lines)) return detail::parse_sparse(lines, options);
  return detail::parse_dense(lines, options);
}

inline SimilarityMatrix parse_matrix(std::string_view text, const LoadOptions& options = {}) {
  std::istringstream in{std::string(text)};
  return load_matrix(in, options);
}

inline SimilarityMatrix load_matrix_file(const std::filesystem::path& path,
                                         const LoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_input, "cannot open " + path.string());
  return load_matrix(in, options);
}

/// Sparse text form of a matrix, readable by load_matrix.
inline std::string format_sparse(const SimilarityMatrix& a) {
  std::ostringstream out;
  out << a.size() << ' ' << a.edge_count() << '\n';
  for (const auto& e : a.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w.ticks << '\n';
  return out.str();
}

}  // namespace robinsonian
