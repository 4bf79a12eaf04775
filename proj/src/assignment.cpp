#include "seqpat/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace seqpat {

ConfusionMatrix::ConfusionMatrix(int level) : level_(level) {
  if (level < 1) {
    throw InvalidParameter("confusion matrix level must be at least 1");
  }
  counts_.assign(static_cast<std::size_t>(level) * level, 0);
}

ConfusionMatrix::ConfusionMatrix(int level, std::vector<std::int64_t> row_major) : ConfusionMatrix(level) {
  if (row_major.size() != counts_.size()) {
    throw InvalidParameter("expected " + std::to_string(counts_.size()) + " entries, got " +
                           std::to_string(row_major.size()));
  }
  if (std::any_of(row_major.begin(), row_major.end(), [](std::int64_t x) { return x < 0; })) {
    throw InvalidParameter("confusion matrix entries must be nonnegative");
  }
  counts_ = std::move(row_major);
}

void ConfusionMatrix::add(Symbol row, Symbol column, std::int64_t count) {
  if (row < 1 || row > level_ || column < 1 || column > level_) {
    throw SymbolOutOfRange("confusion matrix index outside 1.." + std::to_string(level_));
  }
  auto& cell = counts_[static_cast<std::size_t>(row - 1) * level_ + (column - 1)];
  if (cell + count < 0) {
    throw InvalidParameter("confusion matrix entries must be nonnegative");
  }
  cell += count;
}

std::int64_t ConfusionMatrix::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::max_entry() const noexcept { return *std::max_element(counts_.begin(), counts_.end()); }

ConfusionMatrix build_confusion(const SequenceSet& set) {
  if (set.size() != 2) {
    throw ArityError("a confusion matrix needs exactly two sequences, got " + std::to_string(set.size()));
  }
  ConfusionMatrix matrix(set.level());
  for (std::size_t i = 0; i < set.length(); ++i) {
    matrix.add(set[0][i], set[1][i]);
  }
  return matrix;
}

AssignmentResult solve_max_trace(const ConfusionMatrix& matrix) {
  const int n = matrix.level();
  const std::int64_t ceiling = matrix.max_entry();
  auto cost = [&](int row, int column) { return ceiling - matrix.at(row, column); };

  // Kuhn-Munkres with row/column potentials; index 0 is a sentinel column.
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> row_potential(n + 1, 0);
  std::vector<std::int64_t> column_potential(n + 1, 0);
  std::vector<int> row_of_column(n + 1, 0);
  std::vector<int> way(n + 1, 0);

  for (int row = 1; row <= n; ++row) {
    row_of_column[0] = row;
    int column = 0;
    std::vector<std::int64_t> slack(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[column] = true;
      const int current_row = row_of_column[column];
      std::int64_t delta = inf;
      int next_column = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const std::int64_t reduced = cost(current_row, j) - row_potential[current_row] - column_potential[j];
        if (reduced < slack[j]) {
          slack[j] = reduced;
          way[j] = column;
        }
        if (slack[j] < delta) {
          delta = slack[j];
          next_column = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          row_potential[row_of_column[j]] += delta;
          column_potential[j] -= delta;
        } else {
          slack[j] -= delta;
        }
      }
      column = next_column;
    } while (row_of_column[column] != 0);

    do {
      const int previous = way[column];
      row_of_column[column] = row_of_column[previous];
      column = previous;
    } while (column != 0);
  }

  std::vector<Symbol> images(n);
  for (int j = 1; j <= n; ++j) {
    images[row_of_column[j] - 1] = j;
  }
  Permutation assignment(std::move(images));

  std::int64_t value = 0;
  for (Symbol a = 1; a <= n; ++a) {
    value += matrix.at(a, assignment(a));
  }
  return AssignmentResult{value, std::move(assignment)};
}

} // namespace seqpat
