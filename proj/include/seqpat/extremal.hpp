#pragma once

#include <cstdint>
#include <vector>

#include "seqpat/core.hpp"

namespace seqpat {

/// n = copies * block + remainder, with block = l^(k-1) and 0 <= remainder < block.
/// `block` saturates at UINT64_MAX, in which case copies = 0 and remainder = n.
struct ExtremalParams {
  std::int64_t length;
  int level;
  int k;
  std::uint64_t block;
  std::int64_t copies;
  std::int64_t remainder;
};

/// Throws InvalidParameter unless n >= 1, l >= 1, k >= 2.
ExtremalParams extremal_params(std::int64_t length, int level, int k);

/// Largest distance any k patterns of length n and level l can have:
/// n - ceil(n / l^(k-1)).
std::int64_t max_distance(std::int64_t length, int level, int k);

/// Cyclic shift s -> s + 1 (l wraps to 1) applied to every coordinate.
CrossSection shift_section(const CrossSection& section, int level);

/// {c, shift(c), ..., shift^(l-1)(c)}. Throws NotInFirstClass unless c starts with 1.
std::vector<CrossSection> link(const CrossSection& section, int level);

/// The index-th width-k section with first element 1, in lexicographic order.
CrossSection first_class_section(std::uint64_t index, int level, int k);

/// k sequences of length l^(k-1) whose rows are all sections starting with 1, in
/// lexicographic order. Throws InvalidParameter when l^(k-1) exceeds 2^22 rows.
SequenceSet construct_M(int level, int k);

/// `copies` stacked copies of M followed by its first `remainder` rows.
SequenceSet construct_Mn(std::int64_t length, int level, int k);

inline constexpr std::uint64_t kDefaultCompletenessBudget = 1'000'000;

/// Every tuple in {identity} x S_l^(k-1) leaves at most one constant cross
/// section. Throws SearchSpaceTooLarge when (l!)^(k-1) exceeds `budget`.
bool is_semi_complete(const SequenceSet& set, std::uint64_t budget = kDefaultCompletenessBudget);

/// Every tuple leaves exactly one constant cross section.
bool is_complete(const SequenceSet& set, std::uint64_t budget = kDefaultCompletenessBudget);

} // namespace seqpat
