#pragma once

#include <cstdint>
#include <vector>

#include "seqpat/core.hpp"

namespace seqpat {

/// l x l symbol co-occurrence counts for a pair of sequences. Rows index the
/// first sequence's symbol, columns the second's; both are 1-based.
class ConfusionMatrix {
public:
  explicit ConfusionMatrix(int level);

  /// Row-major, level * level entries. Throws InvalidParameter on a negative entry
  /// or a size that is not a perfect square of `level`.
  ConfusionMatrix(int level, std::vector<std::int64_t> row_major);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] std::int64_t at(Symbol row, Symbol column) const noexcept {
    return counts_[static_cast<std::size_t>(row - 1) * level_ + (column - 1)];
  }
  void add(Symbol row, Symbol column, std::int64_t count = 1);

  [[nodiscard]] std::int64_t total() const noexcept;
  [[nodiscard]] std::int64_t max_entry() const noexcept;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
  int level_;
  std::vector<std::int64_t> counts_;
};

/// Tallies index pairs (q1(i), q2(i)). Throws ArityError unless the set holds exactly two sequences.
ConfusionMatrix build_confusion(const SequenceSet& set);

struct AssignmentResult {
  std::int64_t value = 0;
  /// Row symbol a is matched to column symbol assignment(a).
  Permutation assignment;
};

/// Maximizes sum_a A[a][sigma(a)] over permutations sigma with the Hungarian method, O(l^3).
AssignmentResult solve_max_trace(const ConfusionMatrix& matrix);

} // namespace seqpat
