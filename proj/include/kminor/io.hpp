#pragma once

// Text formats.
//
// Edge list:
//   # comment lines anywhere, blank lines ignored
//   <n> <m>
//   <u> <v>          (m lines, 0-based ids)
//
// Certificate:
//   minor-order <k>
//   d <int>
//   seed <int>
//   mode <best-effort|guarantee>
//   branch <i>: <v1> <v2> ...   (k lines, i = 0..k-1, ascending ids)
//
// Random graphs come from gnp_generate, which walks the pairs (i, j), i < j,
// in lexicographic order and keeps each one when the next mt19937_64 draw,
// mapped to [0, 1) through its top 53 bits, is below p.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/graph.hpp"
#include "kminor/pipeline.hpp"
#include "kminor/random.hpp"

namespace kminor {

namespace detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    const auto body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    out.push_back({number, body});
  }
  return out;
}

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view word, std::size_t line, std::string_view what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    parse_fail(line, "expected " + std::string(what) + ", got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) detail::parse_fail(1, "missing header '<n> <m>'");
  const auto header = detail::split_words(lines.front().text);
  if (header.size() != 2) detail::parse_fail(lines.front().number, "header must be '<n> <m>'");
  const auto n = detail::parse_int<std::uint32_t>(header[0], lines.front().number, "vertex count");
  const auto m = detail::parse_int<std::size_t>(header[1], lines.front().number, "edge count");

  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, body] = lines[i];
    if (i > m) {
      detail::parse_fail(number, "edge count mismatch: header declares " + std::to_string(m) +
                                     " edges, found more");
    }
    const auto words = detail::split_words(body);
    if (words.size() != 2) detail::parse_fail(number, "edge line must be '<u> <v>'");
    const auto u = detail::parse_int<Vertex>(words[0], number, "vertex id");
    const auto v = detail::parse_int<Vertex>(words[1], number, "vertex id");
    if (u >= n || v >= n) {
      detail::parse_fail(number, "vertex id out of range: " + std::to_string(std::max(u, v)) +
                                     " >= " + std::to_string(n));
    }
    if (u == v) detail::parse_fail(number, "self-loop on vertex " + std::to_string(u));
    if (!g.add_edge(u, v)) {
      detail::parse_fail(number, "duplicate edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ")");
    }
  }
  if (g.edge_count() != m) {
    const std::size_t at = lines.back().number;
    detail::parse_fail(at, "edge count mismatch: header declares " + std::to_string(m) +
                               " edges, found " + std::to_string(g.edge_count()));
  }
  return g;
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline MinorCertificate parse_certificate(std::string_view text) {
  const auto lines = detail::content_lines(text);
  auto keyed = [&](std::size_t index, std::string_view key) {
    if (index >= lines.size()) {
      detail::parse_fail(lines.empty() ? 1 : lines.back().number + 1,
                         "missing '" + std::string(key) + "' line");
    }
    const auto words = detail::split_words(lines[index].text);
    if (words.size() != 2 || words[0] != key) {
      detail::parse_fail(lines[index].number, "expected '" + std::string(key) + " <value>'");
    }
    return words[1];
  };

  MinorCertificate cert;
  const auto k = detail::parse_int<std::size_t>(keyed(0, "minor-order"), lines[0].number, "order");
  cert.d = detail::parse_int<unsigned>(keyed(1, "d"), lines[1].number, "integer d");
  cert.seed = detail::parse_int<std::uint64_t>(keyed(2, "seed"), lines[2].number, "integer seed");
  const auto mode_word = keyed(3, "mode");
  const auto mode = parse_mode(mode_word);
  if (!mode) detail::parse_fail(lines[3].number, "unknown mode '" + std::string(mode_word) + "'");
  cert.mode = *mode;

  for (std::size_t i = 4; i < lines.size(); ++i) {
    const auto [number, body] = lines[i];
    const auto colon = body.find(':');
    const auto head = detail::split_words(body.substr(0, colon));
    if (colon == std::string_view::npos || head.size() != 2 || head[0] != "branch") {
      detail::parse_fail(number, "expected 'branch <i>: <ids>'");
    }
    const auto index = detail::parse_int<std::size_t>(head[1], number, "branch index");
    if (index != cert.branch_sets.size()) {
      detail::parse_fail(number, "branch index " + std::to_string(index) + " out of sequence");
    }
    VertexSet set;
    for (auto word : detail::split_words(body.substr(colon + 1))) {
      const auto v = detail::parse_int<Vertex>(word, number, "vertex id");
      if (!set.empty() && v <= set.back()) detail::parse_fail(number, "ids must be ascending");
      set.push_back(v);
    }
    cert.branch_sets.push_back(std::move(set));
  }
  if (cert.branch_sets.size() != k) {
    detail::parse_fail(lines.back().number, "minor-order " + std::to_string(k) + " but " +
                                                std::to_string(cert.branch_sets.size()) +
                                                " branch lines");
  }
  return cert;
}

inline std::string emit_certificate(const MinorCertificate& cert) {
  std::ostringstream out;
  out << "minor-order " << cert.order() << '\n'
      << "d " << cert.d << '\n'
      << "seed " << cert.seed << '\n'
      << "mode " << to_string(cert.mode) << '\n';
  for (std::size_t i = 0; i < cert.branch_sets.size(); ++i) {
    out << "branch " << i << ':';
    for (Vertex v : normalized(cert.branch_sets[i])) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

/// G(n, p) with pair order and draw mapping as documented at the top.
inline Graph gnp_generate(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorKind::invalid_argument, "edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.unit() < p) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::invalid_argument, "write to '" + path + "' failed");
}

}  // namespace kminor
