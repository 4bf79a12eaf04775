#include "seqpat/extremal.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "seqpat/metric.hpp"

namespace seqpat {

namespace {

constexpr std::uint64_t kMaxRowsOfM = std::uint64_t{1} << 22;

std::uint64_t saturating_power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return result;
}

void require_level_and_k(int level, int k) {
  if (level < 1) {
    throw InvalidParameter("level must be at least 1, got " + std::to_string(level));
  }
  if (k < 2) {
    throw InvalidParameter("k must be at least 2, got " + std::to_string(k));
  }
}

// Smallest and largest constant counts over {identity} x S_l^(k-1).
std::pair<std::size_t, std::size_t> constant_count_extremes(const SequenceSet& set, std::uint64_t budget) {
  const int level = set.level();
  const std::size_t k = set.size();
  if (reduced_search_size(level, k) > budget) {
    throw SearchSpaceTooLarge("completeness check over (" + std::to_string(level) + "!)^" + std::to_string(k - 1) +
                              " tuples exceeds the budget of " + std::to_string(budget));
  }
  const auto perms = all_permutations(level);
  const auto sections = cross_sections(set);
  std::vector<std::size_t> index(k, 0);
  std::size_t lowest = std::numeric_limits<std::size_t>::max();
  std::size_t highest = 0;
  while (true) {
    std::size_t constants = 0;
    for (const auto& section : sections) {
      bool constant = true;
      for (std::size_t j = 1; j < k && constant; ++j) {
        constant = perms[index[j]](section[j]) == section[0];
      }
      constants += constant ? 1 : 0;
    }
    lowest = std::min(lowest, constants);
    highest = std::max(highest, constants);

    std::size_t j = 1;
    while (j < k && ++index[j] == perms.size()) {
      index[j++] = 0;
    }
    if (j == k) {
      break;
    }
  }
  return {lowest, highest};
}

} // namespace

ExtremalParams extremal_params(std::int64_t length, int level, int k) {
  if (length < 1) {
    throw InvalidParameter("length must be at least 1, got " + std::to_string(length));
  }
  require_level_and_k(level, k);
  const std::uint64_t block = saturating_power(static_cast<std::uint64_t>(level), k - 1);
  const auto n = static_cast<std::uint64_t>(length);
  return ExtremalParams{length,
                        level,
                        k,
                        block,
                        static_cast<std::int64_t>(n / block),
                        static_cast<std::int64_t>(n % block)};
}

std::int64_t max_distance(std::int64_t length, int level, int k) {
  const auto params = extremal_params(length, level, k);
  const std::int64_t ceiling = params.copies + (params.remainder > 0 ? 1 : 0);
  return length - ceiling;
}

CrossSection shift_section(const CrossSection& section, int level) {
  std::vector<Symbol> shifted;
  shifted.reserve(section.size());
  for (Symbol s : section.elements()) {
    if (s > level) {
      throw SymbolOutOfRange("symbol " + std::to_string(s) + " exceeds level " + std::to_string(level));
    }
    shifted.push_back(s % level + 1);
  }
  return CrossSection(std::move(shifted));
}

std::vector<CrossSection> link(const CrossSection& section, int level) {
  if (level < 1) {
    throw InvalidParameter("level must be at least 1");
  }
  if (section[0] != 1) {
    throw NotInFirstClass("a link is generated by a cross section whose first element is 1");
  }
  for (Symbol s : section.elements()) {
    if (s > level) {
      throw SymbolOutOfRange("symbol " + std::to_string(s) + " exceeds level " + std::to_string(level));
    }
  }
  std::vector<CrossSection> members{section};
  for (int step = 1; step < level; ++step) {
    members.push_back(shift_section(members.back(), level));
  }
  return members;
}

CrossSection first_class_section(std::uint64_t index, int level, int k) {
  require_level_and_k(level, k);
  std::vector<Symbol> elements(k, 1);
  for (int position = k - 1; position >= 1; --position) {
    elements[position] = static_cast<Symbol>(index % static_cast<std::uint64_t>(level)) + 1;
    index /= static_cast<std::uint64_t>(level);
  }
  if (index != 0) {
    throw InvalidParameter("section index exceeds l^(k-1)");
  }
  return CrossSection(std::move(elements));
}

SequenceSet construct_M(int level, int k) {
  require_level_and_k(level, k);
  const std::uint64_t block = saturating_power(static_cast<std::uint64_t>(level), k - 1);
  if (block > kMaxRowsOfM) {
    throw InvalidParameter("l^(k-1) = " + std::to_string(block) + " rows is too large to materialize");
  }
  return construct_Mn(static_cast<std::int64_t>(block), level, k);
}

SequenceSet construct_Mn(std::int64_t length, int level, int k) {
  const auto params = extremal_params(length, level, k);
  std::vector<std::vector<Symbol>> columns(k, std::vector<Symbol>(static_cast<std::size_t>(length)));
  for (std::int64_t row = 0; row < length; ++row) {
    const auto section = first_class_section(static_cast<std::uint64_t>(row) % params.block, level, k);
    for (int j = 0; j < k; ++j) {
      columns[j][row] = section[j];
    }
  }
  std::vector<Sequence> sequences;
  sequences.reserve(k);
  for (auto& column : columns) {
    sequences.emplace_back(std::move(column), level);
  }
  return SequenceSet(std::move(sequences));
}

bool is_semi_complete(const SequenceSet& set, std::uint64_t budget) {
  return constant_count_extremes(set, budget).second <= 1;
}

bool is_complete(const SequenceSet& set, std::uint64_t budget) {
  const auto [lowest, highest] = constant_count_extremes(set, budget);
  return lowest == 1 && highest == 1;
}

} // namespace seqpat
