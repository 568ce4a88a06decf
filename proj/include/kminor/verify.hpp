#pragma once

// Certificate checking and exact Hadwiger numbers for tiny graphs. Nothing in
// here reuses the extraction machinery: the checks walk the graph's adjacency
// directly so that a bug upstream cannot hide itself.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/graph.hpp"

namespace kminor {

enum class ViolationKind { overlap, disconnected_branch, missing_adjacency };

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::disconnected_branch: return "disconnected-branch";
    case ViolationKind::missing_adjacency: return "missing-adjacency";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;  // offending branch indices

  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

namespace detail {

inline bool induces_connected(const Graph& g, const VertexSet& set, std::vector<char>& scratch) {
  if (set.empty()) return false;
  for (Vertex v : set) scratch[v] = 1;
  std::vector<Vertex> stack{set.front()};
  scratch[set.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (scratch[w] == 1) {
        scratch[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v : set) scratch[v] = 0;
  return reached == set.size();
}

}  // namespace detail

/// Reports every violation, not just the first. An empty branch set counts
/// as disconnected.
inline VerificationReport verify_certificate(const Graph& g,
                                             const std::vector<VertexSet>& branch_sets) {
  std::vector<VertexSet> sets;
  sets.reserve(branch_sets.size());
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    for (Vertex v : branch_sets[i]) {
      if (v >= g.vertex_count()) {
        fail(ErrorKind::malformed_certificate, "branch " + std::to_string(i) + " names vertex " +
                                                   std::to_string(v) + " but the graph has " +
                                                   std::to_string(g.vertex_count()));
      }
    }
    sets.push_back(normalized(branch_sets[i]));
  }

  VerificationReport report;
  const std::size_t k = sets.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (intersection_size(sets[i], sets[j]) > 0) {
        report.violations.push_back({ViolationKind::overlap, {i, j}});
      }
    }
  }

  std::vector<char> scratch(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!detail::induces_connected(g, sets[i], scratch)) {
      report.violations.push_back({ViolationKind::disconnected_branch, {i}});
    }
  }

  std::vector<char> touched(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(touched.begin(), touched.end(), 0);
    for (Vertex v : sets[i]) {
      for (Vertex w : g.neighbors(v)) touched[w] = 1;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool joined =
          std::any_of(sets[j].begin(), sets[j].end(), [&](Vertex w) { return touched[w] != 0; });
      if (!joined) report.violations.push_back({ViolationKind::missing_adjacency, {i, j}});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

inline constexpr std::size_t exhaustive_vertex_cap = 12;

namespace detail {

// Assigns vertices in id order to "unused" or a branch label. A new label
// may only be opened as the next unused label, which removes the k!
// relabelings of each assignment.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, std::size_t k)
      : g_(g), k_(k), label_(g.vertex_count(), unused), scratch_(g.vertex_count(), 0) {}

  std::optional<std::vector<VertexSet>> run() {
    if (assign(0, 0)) return witness_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t unused = static_cast<std::size_t>(-1);

  bool assign(Vertex v, std::size_t opened) {
    const std::size_t n = g_.vertex_count();
    if (opened + (n - v) < k_) return false;
    if (v == n) return opened == k_ && accept();
    for (std::size_t l = 0; l < opened; ++l) {
      label_[v] = l;
      if (assign(v + 1, opened)) return true;
    }
    if (opened < k_) {
      label_[v] = opened;
      if (assign(v + 1, opened + 1)) return true;
    }
    label_[v] = unused;
    return assign(v + 1, opened);
  }

  bool accept() {
    std::vector<VertexSet> sets(k_);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (label_[v] != unused) sets[label_[v]].push_back(v);
    }
    for (const auto& s : sets) {
      if (!induces_connected(g_, s, scratch_)) return false;
    }
    std::vector<char> seen(k_ * k_, 0);
    std::size_t pairs = 0;
    for (auto [u, w] : g_.edges()) {
      const std::size_t a = label_[u];
      const std::size_t b = label_[w];
      if (a == unused || b == unused || a == b) continue;
      if (!seen[a * k_ + b]) {
        seen[a * k_ + b] = seen[b * k_ + a] = 1;
        ++pairs;
      }
    }
    if (pairs != k_ * (k_ - 1) / 2) return false;
    witness_ = std::move(sets);
    return true;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::size_t> label_;
  std::vector<char> scratch_;
  std::vector<VertexSet> witness_;
};

inline void check_exhaustive_cap(const Graph& g) {
  if (g.vertex_count() > exhaustive_vertex_cap) {
    fail(ErrorKind::size_cap_exceeded,
         std::to_string(g.vertex_count()) + " vertices; exhaustive search is limited to " +
             std::to_string(exhaustive_vertex_cap));
  }
}

}  // namespace detail

/// Exhaustive search for a K_k minor; returns a witness family when found.
inline std::optional<std::vector<VertexSet>> find_complete_minor(const Graph& g, std::size_t k) {
  detail::check_exhaustive_cap(g);
  if (k == 0) return std::vector<VertexSet>{};
  if (k > g.vertex_count() || g.edge_count() < k * (k - 1) / 2) return std::nullopt;
  return detail::MinorSearch(g, k).run();
}

inline bool has_complete_minor(const Graph& g, std::size_t k) {
  return find_complete_minor(g, k).has_value();
}

/// Largest k with a K_k minor, optionally capped at max_order.
inline std::size_t hadwiger_number(const Graph& g,
                                   std::optional<std::size_t> max_order = std::nullopt) {
  detail::check_exhaustive_cap(g);
  const std::size_t limit = std::min(g.vertex_count(), max_order.value_or(g.vertex_count()));
  std::size_t best = 0;
  while (best < limit && has_complete_minor(g, best + 1)) ++best;
  return best;
}

}  // namespace kminor
