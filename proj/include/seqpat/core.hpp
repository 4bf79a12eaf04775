#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqpat/errors.hpp"

namespace seqpat {

/// Symbols are 1-based: a level-l sequence draws from {1, ..., l}.
using Symbol = int;

/// A length-n level-l sequence. Immutable once constructed.
class Sequence {
public:
  /// Throws EmptySequence, SymbolOutOfRange, or InvalidParameter (level < 1).
  Sequence(std::vector<Symbol> elements, int level);

  [[nodiscard]] std::span<const Symbol> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t length() const noexcept { return elements_.size(); }
  [[nodiscard]] int level() const noexcept { return level_; }

  /// Zero-based element access.
  [[nodiscard]] Symbol operator[](std::size_t index) const noexcept { return elements_[index]; }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
  std::vector<Symbol> elements_;
  int level_;
};

Sequence new_sequence(std::vector<Symbol> elements, int level);

/// A bijection on {1, ..., order}, stored as an image table.
class Permutation {
public:
  /// `images[s - 1]` is the image of symbol s. Throws InvalidParameter unless a bijection.
  explicit Permutation(std::vector<Symbol> images);

  static Permutation identity(int order);

  /// Parses cycle notation such as "(123)", "(1)(23)", "(1 10)(2 3)", "(1,2)".
  /// Cycles without separators are read digit by digit when order < 10.
  static Permutation from_cycles(std::string_view notation, int order);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(images_.size()); }
  [[nodiscard]] Symbol operator()(Symbol symbol) const noexcept { return images_[symbol - 1]; }
  [[nodiscard]] std::span<const Symbol> images() const noexcept { return images_; }

  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;

  /// Cycle notation with fixed points omitted; the identity prints as "(1)".
  [[nodiscard]] std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Symbol> images_;
};

/// (outer ∘ inner): applies `inner` first.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Fills the zero entries of a partial image table: unassigned symbols map, in
/// ascending order, to the unused images in ascending order. Throws
/// InvalidParameter if the assigned entries are not injective.
Permutation complete_permutation(std::vector<Symbol> partial_images);

/// Every permutation of the given order, ordered lexicographically by image table.
std::vector<Permutation> all_permutations(int order);

/// An equivalence class of sequences under symbol relabeling, keyed by its
/// standard-order representative.
class Pattern {
public:
  explicit Pattern(const Sequence& representative);

  [[nodiscard]] const Sequence& canonical() const noexcept { return canonical_; }
  [[nodiscard]] std::size_t length() const noexcept { return canonical_.length(); }
  [[nodiscard]] int level() const noexcept { return canonical_.level(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
  Sequence canonical_;
};

/// An ordered list of k >= 2 sequences sharing length and level.
class SequenceSet {
public:
  /// Throws ArityError when fewer than two sequences are given and ShapeMismatch
  /// when lengths or levels differ.
  explicit SequenceSet(std::vector<Sequence> sequences);

  [[nodiscard]] std::size_t size() const noexcept { return sequences_.size(); }
  [[nodiscard]] std::size_t length() const noexcept { return sequences_.front().length(); }
  [[nodiscard]] int level() const noexcept { return sequences_.front().level(); }
  [[nodiscard]] const Sequence& operator[](std::size_t index) const noexcept { return sequences_[index]; }
  [[nodiscard]] std::span<const Sequence> sequences() const noexcept { return sequences_; }
  [[nodiscard]] auto begin() const noexcept { return sequences_.begin(); }
  [[nodiscard]] auto end() const noexcept { return sequences_.end(); }

  friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

private:
  std::vector<Sequence> sequences_;
};

/// The i-th elements of the k sequences of a set, read across.
class CrossSection {
public:
  /// Throws ArityError when fewer than two elements and SymbolOutOfRange on a symbol < 1.
  explicit CrossSection(std::vector<Symbol> elements);

  [[nodiscard]] std::span<const Symbol> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] Symbol operator[](std::size_t index) const noexcept { return elements_[index]; }

  friend bool operator==(const CrossSection&, const CrossSection&) = default;
  friend auto operator<=>(const CrossSection&, const CrossSection&) = default;

private:
  std::vector<Symbol> elements_;
};

/// Throws LevelMismatch when the permutation order differs from the level.
Sequence apply_permutation(const Sequence& sequence, const Permutation& permutation);

/// Applies the i-th permutation to the i-th sequence.
SequenceSet apply_permutations(const SequenceSet& set, std::span<const Permutation> permutations);

/// Relabels symbols by order of first occurrence.
Sequence standardize(const Sequence& sequence);

/// The relabeling taking `sequence` to its standard form. Symbols that do not
/// occur are completed in ascending order.
Permutation standardizing_permutation(const Sequence& sequence);

/// Every symbol v > 1 is preceded somewhere by v - 1.
bool is_standard(const Sequence& sequence);

Pattern pattern_of(const Sequence& sequence);

/// Throws ShapeMismatch when lengths or levels differ.
bool equivalent(const Sequence& lhs, const Sequence& rhs);

std::vector<CrossSection> cross_sections(const SequenceSet& set);
CrossSection cross_section(const SequenceSet& set, std::size_t index);

bool is_constant(const CrossSection& section) noexcept;

std::ostream& operator<<(std::ostream& os, const Sequence& sequence);
std::ostream& operator<<(std::ostream& os, const CrossSection& section);
std::ostream& operator<<(std::ostream& os, const Permutation& permutation);
std::ostream& operator<<(std::ostream& os, const Pattern& pattern);

} // namespace seqpat

template <>
struct std::hash<seqpat::Pattern> {
  std::size_t operator()(const seqpat::Pattern& pattern) const noexcept;
};
