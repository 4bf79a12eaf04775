#include "seqpat/metric.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "seqpat/assignment.hpp"

namespace seqpat {

namespace {

constexpr std::uint64_t kAutoBruteLimit = 10'000;
constexpr std::uint64_t kBruteHardLimit = 100'000'000;

void require_same_width(const CrossSection& lhs, const CrossSection& rhs) {
  if (lhs.size() != rhs.size()) {
    throw ShapeMismatch("cross sections of width " + std::to_string(lhs.size()) + " and " +
                        std::to_string(rhs.size()) + " cannot be compared");
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

} // namespace

std::size_t constant_count(const SequenceSet& set) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < set.length(); ++i) {
    const Symbol first = set[0][i];
    bool constant = true;
    for (std::size_t j = 1; j < set.size() && constant; ++j) {
      constant = set[j][i] == first;
    }
    count += constant ? 1 : 0;
  }
  return count;
}

std::size_t sequence_distance(const SequenceSet& set) { return set.length() - constant_count(set); }

bool incompatible(const CrossSection& lhs, const CrossSection& rhs) {
  require_same_width(lhs, rhs);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == rhs[i]) {
      return false;
    }
  }
  return true;
}

bool connected(const CrossSection& lhs, const CrossSection& rhs) {
  require_same_width(lhs, rhs);
  return lhs == rhs || incompatible(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Connectivity graph and clique search

ConnectivityGraph::ConnectivityGraph(std::vector<Vertex> vertices, int level)
    : vertices_(std::move(vertices)), level_(level) {
  const std::size_t count = vertices_.size();
  adjacency_.assign(count * count, false);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (vertices_[u].section == vertices_[v].section) {
        throw InvalidParameter("connectivity graph vertices must be distinct cross sections");
      }
      const bool edge = incompatible(vertices_[u].section, vertices_[v].section);
      adjacency_[u * count + v] = edge;
      adjacency_[v * count + u] = edge;
    }
  }
}

std::size_t ConnectivityGraph::total_weight() const noexcept {
  std::size_t total = 0;
  for (const auto& vertex : vertices_) {
    total += vertex.multiplicity;
  }
  return total;
}

ConnectivityGraph build_connectivity_graph(const SequenceSet& set) {
  std::vector<ConnectivityGraph::Vertex> vertices;
  std::map<CrossSection, std::size_t> index_of;
  for (std::size_t i = 0; i < set.length(); ++i) {
    CrossSection section = cross_section(set, i);
    auto [it, inserted] = index_of.try_emplace(section, vertices.size());
    if (inserted) {
      vertices.push_back({std::move(section), 1});
    } else {
      ++vertices[it->second].multiplicity;
    }
  }
  return ConnectivityGraph(std::move(vertices), set.level());
}

namespace {

class CliqueSearch {
public:
  explicit CliqueSearch(const ConnectivityGraph& graph) : graph_(graph) {
    for (const auto& vertex : graph.vertices()) {
      weight_.push_back(vertex.multiplicity);
    }
  }

  Clique run() {
    std::vector<std::size_t> order(graph_.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
    std::vector<std::size_t> members;
    expand(members, 0, order);
    std::sort(best_.vertices.begin(), best_.vertices.end());
    return best_;
  }

private:
  // `candidates` are adjacent to every member and sorted by descending weight.
  void expand(std::vector<std::size_t>& members, std::size_t weight, const std::vector<std::size_t>& candidates) {
    if (weight > best_.weight) {
      best_ = Clique{members, weight};
    }
    const std::size_t room = static_cast<std::size_t>(graph_.level()) - members.size();
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
      std::size_t bound = weight;
      const std::size_t reach = std::min(room, candidates.size() - pos);
      for (std::size_t t = 0; t < reach; ++t) {
        bound += weight_[candidates[pos + t]];
      }
      if (bound <= best_.weight) {
        return;
      }
      const std::size_t v = candidates[pos];
      std::vector<std::size_t> next;
      for (std::size_t later = pos + 1; later < candidates.size(); ++later) {
        if (graph_.adjacent(v, candidates[later])) {
          next.push_back(candidates[later]);
        }
      }
      members.push_back(v);
      expand(members, weight + weight_[v], next);
      members.pop_back();
    }
  }

  const ConnectivityGraph& graph_;
  std::vector<std::size_t> weight_;
  Clique best_;
};

} // namespace

Clique max_weight_clique(const ConnectivityGraph& graph) { return CliqueSearch(graph).run(); }

// ---------------------------------------------------------------------------
// Witnesses

std::vector<Permutation> constantize_witness(std::span<const CrossSection> sections, int level) {
  if (sections.empty()) {
    throw InvalidParameter("constantize_witness needs at least one cross section");
  }
  if (level < 1) {
    throw InvalidParameter("level must be at least 1");
  }
  const std::size_t k = sections.front().size();
  for (const auto& section : sections) {
    if (section.size() != k) {
      throw ShapeMismatch("cross sections must share a width");
    }
  }

  std::vector<CrossSection> distinct;
  for (const auto& section : sections) {
    if (std::find(distinct.begin(), distinct.end(), section) == distinct.end()) {
      distinct.push_back(section);
    }
  }
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      if (!incompatible(distinct[a], distinct[b])) {
        throw NotConnected("cross sections " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " are neither identical nor incompatible");
      }
    }
  }
  if (distinct.size() > static_cast<std::size_t>(level)) {
    throw TooManySections(std::to_string(distinct.size()) + " distinct sections exceed level " +
                          std::to_string(level));
  }
  for (const auto& section : distinct) {
    for (Symbol s : section.elements()) {
      if (s > level) {
        throw SymbolOutOfRange("cross-section symbol " + std::to_string(s) + " exceeds level " + std::to_string(level));
      }
    }
  }

  std::vector<Permutation> witness;
  witness.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Symbol> partial(level, 0);
    for (const auto& section : distinct) {
      partial[section[j] - 1] = section[0];
    }
    witness.push_back(complete_permutation(std::move(partial)));
  }
  return witness;
}

// ---------------------------------------------------------------------------
// Distances

std::uint64_t reduced_search_size(int level, std::size_t k) {
  std::uint64_t factorial = 1;
  for (int i = 2; i <= level; ++i) {
    factorial = saturating_mul(factorial, static_cast<std::uint64_t>(i));
  }
  std::uint64_t total = 1;
  for (std::size_t j = 1; j < k; ++j) {
    total = saturating_mul(total, factorial);
  }
  return total;
}

Algorithm resolve_algorithm(Algorithm requested, int level, std::size_t k) {
  if (requested != Algorithm::automatic) {
    return requested;
  }
  return reduced_search_size(level, k) <= kAutoBruteLimit ? Algorithm::brute : Algorithm::clique;
}

DistanceResult pattern_distance_pair(const SequenceSet& set) {
  if (set.size() != 2) {
    throw ArityError("pair distance needs exactly two sequences, got " + std::to_string(set.size()));
  }
  const auto solved = solve_max_trace(build_confusion(set));
  const auto constants = static_cast<std::size_t>(solved.value);
  // Row symbol a pairs with column symbol sigma(a); sigma^-1 relabels the second sequence onto the first.
  std::vector<Permutation> witness{Permutation::identity(set.level()), solved.assignment.inverse()};
  return DistanceResult{set.length() - constants, constants, std::move(witness)};
}

DistanceResult pattern_distance_pair(const Pattern& lhs, const Pattern& rhs) {
  if (lhs.length() != rhs.length() || lhs.level() != rhs.level()) {
    throw ShapeMismatch("patterns must share length and level");
  }
  return pattern_distance_pair(SequenceSet({lhs.canonical(), rhs.canonical()}));
}

DistanceResult brute_force_distance(const SequenceSet& set) {
  const int level = set.level();
  const std::size_t k = set.size();
  if (reduced_search_size(level, k) > kBruteHardLimit) {
    throw SearchSpaceTooLarge("brute force over (" + std::to_string(level) + "!)^" + std::to_string(k - 1) +
                              " permutation tuples exceeds the search budget");
  }

  const auto graph = build_connectivity_graph(set);
  const auto perms = all_permutations(level);
  std::vector<std::size_t> index(k, 0); // index[0] stays at the identity

  std::size_t best = 0;
  std::vector<std::size_t> best_index = index;
  bool first = true;
  while (true) {
    std::size_t constants = 0;
    for (const auto& vertex : graph.vertices()) {
      const Symbol target = vertex.section[0];
      bool constant = true;
      for (std::size_t j = 1; j < k && constant; ++j) {
        constant = perms[index[j]](vertex.section[j]) == target;
      }
      if (constant) {
        constants += vertex.multiplicity;
      }
    }
    if (first || constants > best) {
      best = constants;
      best_index = index;
      first = false;
    }

    std::size_t j = 1;
    while (j < k && ++index[j] == perms.size()) {
      index[j++] = 0;
    }
    if (j == k) {
      break;
    }
  }

  std::vector<Permutation> witness;
  witness.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    witness.push_back(perms[best_index[j]]);
  }
  return DistanceResult{set.length() - best, best, std::move(witness)};
}

DistanceResult clique_distance(const SequenceSet& set) {
  const auto graph = build_connectivity_graph(set);
  const auto clique = max_weight_clique(graph);
  std::vector<CrossSection> sections;
  sections.reserve(clique.vertices.size());
  for (std::size_t v : clique.vertices) {
    sections.push_back(graph.vertices()[v].section);
  }
  return DistanceResult{set.length() - clique.weight, clique.weight, constantize_witness(sections, set.level())};
}

DistanceResult pattern_distance(const SequenceSet& set, Algorithm algorithm) {
  switch (resolve_algorithm(algorithm, set.level(), set.size())) {
  case Algorithm::brute:
    return brute_force_distance(set);
  case Algorithm::clique:
  case Algorithm::automatic:
    break;
  }
  return clique_distance(set);
}

DistanceResult pattern_distance(std::span<const Pattern> patterns, Algorithm algorithm) {
  if (patterns.size() < 2) {
    throw ArityError("pattern distance needs at least two patterns, got " + std::to_string(patterns.size()));
  }
  std::vector<Sequence> canonical;
  canonical.reserve(patterns.size());
  for (const auto& pattern : patterns) {
    if (pattern.length() != patterns.front().length() || pattern.level() != patterns.front().level()) {
      throw ShapeMismatch("patterns must share length and level");
    }
    canonical.push_back(pattern.canonical());
  }
  return pattern_distance(SequenceSet(std::move(canonical)), algorithm);
}

bool check_triangle(const Pattern& t1, const Pattern& t2, const Pattern& t3) {
  const auto d12 = pattern_distance_pair(t1, t2).distance;
  const auto d13 = pattern_distance_pair(t1, t3).distance;
  const auto d23 = pattern_distance_pair(t2, t3).distance;
  return d13 + d23 >= d12;
}

} // namespace seqpat
