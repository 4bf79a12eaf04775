#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqpat/core.hpp"

namespace seqpat {

/// Exact nonnegative count.
using PatternCount = boost::multiprecision::cpp_int;

/// Orbit count of S_l acting on all l^n sequences. The fixed-point sum runs
/// over the number m of deranged symbols, weighting (l - m)^n fixed sequences
/// by C(l, m) * D_m permutations, and divides by l!. Exact throughout.
PatternCount count_patterns_burnside(int length, int level);

/// Number of standard sequences: the sum of S(n, m) for m = 1..l.
PatternCount count_standard_stirling(int length, int level);

/// Bell number via the Bell triangle. bell(0) == 1.
PatternCount bell(int n);

/// Stirling number of the second kind S(n, m).
PatternCount stirling2(int n, int m);

/// Derangement count D_m, D_0 = 1, D_1 = 0.
PatternCount derangements(int m);

/// Input range over every standard sequence of the given length and level,
/// in lexicographic order. Generates restricted-growth strings directly.
class StandardSequences {
public:
  StandardSequences(int length, int level);

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Sequence;
    using difference_type = std::ptrdiff_t;
    using pointer = const Sequence*;
    using reference = Sequence;

    iterator() = default;

    [[nodiscard]] Sequence operator*() const { return Sequence(current_, level_); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& lhs, const iterator& rhs) noexcept { return lhs.done_ == rhs.done_; }

  private:
    friend class StandardSequences;
    iterator(int length, int level);

    std::vector<Symbol> current_;
    std::vector<Symbol> prefix_max_;
    int level_ = 1;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const { return iterator(length_, level_); }
  [[nodiscard]] iterator end() const { return iterator(); }

private:
  int length_;
  int level_;
};

StandardSequences enumerate_standard(int length, int level);

} // namespace seqpat
