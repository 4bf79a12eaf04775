#include "seqpat/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seqpat {

namespace {

void require_shape(int length, int level) {
  if (length < 1 || level < 1) {
    throw InvalidParameter("length and level must both be at least 1 (got n=" + std::to_string(length) +
                           ", l=" + std::to_string(level) + ")");
  }
}

PatternCount power(PatternCount base, int exponent) {
  PatternCount result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

// Row `level` of Pascal's triangle.
std::vector<PatternCount> binomial_row(int level) {
  std::vector<PatternCount> row(level + 1);
  row[0] = 1;
  for (int m = 1; m <= level; ++m) {
    row[m] = row[m - 1] * (level - m + 1) / m;
  }
  return row;
}

// S(length, m) for m = 0..max_parts.
std::vector<PatternCount> stirling_row(int length, int max_parts) {
  std::vector<PatternCount> row(max_parts + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= length; ++i) {
    for (int m = std::min(i, max_parts); m >= 1; --m) {
      row[m] = m * row[m] + row[m - 1];
    }
    row[0] = 0;
  }
  return row;
}

} // namespace

PatternCount derangements(int m) {
  if (m < 0) {
    throw InvalidParameter("derangement count needs m >= 0");
  }
  PatternCount before = 1; // D_0
  PatternCount current = 0; // D_1
  if (m == 0) {
    return before;
  }
  for (int j = 2; j <= m; ++j) {
    PatternCount next = (j - 1) * (current + before);
    before = current;
    current = next;
  }
  return current;
}

PatternCount stirling2(int n, int m) {
  if (n < 0 || m < 0) {
    throw InvalidParameter("Stirling numbers need n, m >= 0");
  }
  if (m > n) {
    return 0;
  }
  return stirling_row(n, m)[m];
}

PatternCount count_patterns_burnside(int length, int level) {
  require_shape(length, level);
  const auto choose = binomial_row(level);

  std::vector<PatternCount> deranged(level + 1);
  deranged[0] = 1;
  if (level >= 1) {
    deranged[1] = 0;
  }
  for (int m = 2; m <= level; ++m) {
    deranged[m] = (m - 1) * (deranged[m - 1] + deranged[m - 2]);
  }

  // m == level contributes (l - l)^n = 0 for n >= 1.
  PatternCount fixed_total = 0;
  for (int m = 0; m < level; ++m) {
    fixed_total += choose[m] * deranged[m] * power(level - m, length);
  }

  PatternCount group_order = 1;
  for (int i = 2; i <= level; ++i) {
    group_order *= i;
  }
  if (fixed_total % group_order != 0) {
    throw std::logic_error("orbit count is not integral; fixed-point sum is inconsistent");
  }
  return fixed_total / group_order;
}

PatternCount count_standard_stirling(int length, int level) {
  require_shape(length, level);
  const auto row = stirling_row(length, level);
  PatternCount total = 0;
  for (int m = 1; m <= level; ++m) {
    total += row[m];
  }
  return total;
}

PatternCount bell(int n) {
  if (n < 0) {
    throw InvalidParameter("Bell numbers need n >= 0");
  }
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<PatternCount> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<PatternCount> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& value : row) {
      next.push_back(next.back() + value);
    }
    row = std::move(next);
  }
  return row.front();
}

// ---------------------------------------------------------------------------

StandardSequences::StandardSequences(int length, int level) : length_(length), level_(level) {
  require_shape(length, level);
}

StandardSequences::iterator::iterator(int length, int level)
    : current_(length, 1), prefix_max_(length, 1), level_(level), done_(false) {}

StandardSequences::iterator& StandardSequences::iterator::operator++() {
  const std::size_t n = current_.size();
  for (std::size_t i = n; i-- > 1;) {
    const Symbol cap = std::min(prefix_max_[i - 1] + 1, level_);
    if (current_[i] < cap) {
      ++current_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], current_[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        current_[j] = 1;
        prefix_max_[j] = prefix_max_[i];
      }
      return *this;
    }
  }
  done_ = true;
  return *this;
}

StandardSequences enumerate_standard(int length, int level) { return StandardSequences(length, level); }

} // namespace seqpat
