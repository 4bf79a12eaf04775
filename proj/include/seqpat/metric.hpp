#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqpat/core.hpp"

namespace seqpat {

/// Number of indices whose k elements are not all identical.
std::size_t sequence_distance(const SequenceSet& set);

/// Number of constant cross sections.
std::size_t constant_count(const SequenceSet& set);

/// Differ at every coordinate. Throws ShapeMismatch on unequal widths.
bool incompatible(const CrossSection& lhs, const CrossSection& rhs);

/// Identical or incompatible: exactly the pairs one permutation tuple can make
/// constant simultaneously. Throws ShapeMismatch on unequal widths.
bool connected(const CrossSection& lhs, const CrossSection& rhs);

/// Distinct cross sections of a set, weighted by multiplicity, with an edge
/// between every incompatible pair. A maximum-weight clique is a largest set of
/// indices that can be made constant together.
class ConnectivityGraph {
public:
  struct Vertex {
    CrossSection section;
    std::size_t multiplicity;
  };

  ConnectivityGraph(std::vector<Vertex> vertices, int level);

  [[nodiscard]] std::span<const Vertex> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const noexcept { return adjacency_[u * vertices_.size() + v]; }
  [[nodiscard]] std::size_t total_weight() const noexcept;

private:
  std::vector<Vertex> vertices_;
  std::vector<bool> adjacency_;
  int level_;
};

/// Vertices appear in order of first occurrence.
ConnectivityGraph build_connectivity_graph(const SequenceSet& set);

struct Clique {
  std::vector<std::size_t> vertices;
  std::size_t weight = 0;
};

/// Exact maximum-weight clique by branch and bound. Vertices are explored by
/// descending weight; a branch is pruned when the current weight plus the
/// heaviest candidates that could still fit (at most `level` vertices, since a
/// clique's first coordinates are pairwise distinct) cannot beat the incumbent.
Clique max_weight_clique(const ConnectivityGraph& graph);

struct DistanceResult {
  std::size_t distance = 0;
  std::size_t constant_count = 0;
  /// One permutation per sequence; applied to the sequences the distance was
  /// computed on, yields exactly `constant_count` constant cross sections.
  std::optional<std::vector<Permutation>> witness;
};

enum class Algorithm { clique, brute, automatic };

/// (l!)^(k-1), saturating at UINT64_MAX.
std::uint64_t reduced_search_size(int level, std::size_t k);

/// Brute force when (l!)^(k-1) <= 10^4, clique search otherwise.
Algorithm resolve_algorithm(Algorithm requested, int level, std::size_t k);

/// Exact pair distance through the confusion matrix and a maximum-trace
/// assignment. Works on the given representatives. Throws ArityError unless k == 2.
DistanceResult pattern_distance_pair(const SequenceSet& set);

/// Throws ShapeMismatch when the patterns differ in length or level.
DistanceResult pattern_distance_pair(const Pattern& lhs, const Pattern& rhs);

/// Exact distance of the patterns generated by the sequences of `set`, with the
/// witness expressed against those sequences.
DistanceResult pattern_distance(const SequenceSet& set, Algorithm algorithm = Algorithm::automatic);

/// Computes on canonical representatives. Throws ArityError when fewer than two
/// patterns and ShapeMismatch on mixed shapes.
DistanceResult pattern_distance(std::span<const Pattern> patterns, Algorithm algorithm = Algorithm::automatic);

/// Exhaustive minimum over {identity} x S_l^(k-1).
DistanceResult brute_force_distance(const SequenceSet& set);

/// Maximum-weight clique on the connectivity graph, witness rebuilt from the clique.
DistanceResult clique_distance(const SequenceSet& set);

/// A permutation tuple making every listed section constant: coordinate j maps
/// each distinct section's j-th symbol onto its first symbol, remaining symbols
/// completed in ascending order.
///
/// Throws NotConnected when some pair is neither identical nor incompatible,
/// TooManySections when more than `level` distinct sections are given,
/// ShapeMismatch on mixed widths and SymbolOutOfRange on symbols above `level`.
std::vector<Permutation> constantize_witness(std::span<const CrossSection> sections, int level);

/// d(t1, t3) + d(t2, t3) >= d(t1, t2) with pairwise distances.
bool check_triangle(const Pattern& t1, const Pattern& t2, const Pattern& t3);

} // namespace seqpat
