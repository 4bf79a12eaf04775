#include "seqpat/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace seqpat {

namespace {

void require_level(int level) {
  if (level < 1) {
    throw InvalidParameter("level must be at least 1, got " + std::to_string(level));
  }
}

} // namespace

Sequence::Sequence(std::vector<Symbol> elements, int level) : elements_(std::move(elements)), level_(level) {
  require_level(level_);
  if (elements_.empty()) {
    throw EmptySequence("sequence must have at least one element");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > level_) {
      throw SymbolOutOfRange("symbol " + std::to_string(elements_[i]) + " at position " + std::to_string(i + 1) +
                             " is outside 1.." + std::to_string(level_));
    }
  }
}

Sequence new_sequence(std::vector<Symbol> elements, int level) { return Sequence(std::move(elements), level); }

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Symbol> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw InvalidParameter("permutation order must be at least 1");
  }
  std::vector<bool> hit(images_.size(), false);
  for (Symbol image : images_) {
    if (image < 1 || image > order() || hit[image - 1]) {
      throw InvalidParameter("image table is not a bijection on 1.." + std::to_string(order()));
    }
    hit[image - 1] = true;
  }
}

Permutation Permutation::identity(int order) {
  require_level(order);
  std::vector<Symbol> images(order);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view notation, int order) {
  require_level(order);
  std::vector<Symbol> images(order);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(order, false);

  auto parse_symbol = [&](std::string_view token) {
    int value = 0;
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw InvalidParameter("unexpected character '" + std::string(1, ch) + "' in cycle notation");
      }
      value = value * 10 + (ch - '0');
      if (value > order) {
        break;
      }
    }
    if (value < 1 || value > order) {
      throw SymbolOutOfRange("cycle symbol " + std::string(token) + " is outside 1.." + std::to_string(order));
    }
    return value;
  };

  std::size_t pos = 0;
  while (pos < notation.size()) {
    char ch = notation[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') {
      throw InvalidParameter("cycle notation must consist of parenthesized cycles: " + std::string(notation));
    }
    std::size_t close = notation.find(')', pos);
    if (close == std::string_view::npos) {
      throw InvalidParameter("unterminated cycle in: " + std::string(notation));
    }
    std::string_view body = notation.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<Symbol> cycle;
    bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    if (separated) {
      std::size_t start = 0;
      while (start < body.size()) {
        std::size_t end = body.find_first_of(" ,\t", start);
        if (end == std::string_view::npos) {
          end = body.size();
        }
        if (end > start) {
          cycle.push_back(parse_symbol(body.substr(start, end - start)));
        }
        start = end + 1;
      }
    } else if (order < 10) {
      for (char digit : body) {
        cycle.push_back(parse_symbol(std::string_view(&digit, 1)));
      }
    } else if (!body.empty()) {
      cycle.push_back(parse_symbol(body));
    }

    for (Symbol s : cycle) {
      if (used[s - 1]) {
        throw InvalidParameter("symbol " + std::to_string(s) + " appears twice in: " + std::string(notation));
      }
      used[s - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Symbol> inverse_images(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) {
    inverse_images[images_[s] - 1] = static_cast<Symbol>(s + 1);
  }
  return Permutation(std::move(inverse_images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (images_[s] != static_cast<Symbol>(s + 1)) {
      return false;
    }
  }
  return true;
}

std::string Permutation::to_cycles() const {
  if (is_identity()) {
    return "(1)";
  }
  const bool spaced = order() >= 10;
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (Symbol start = 1; start <= order(); ++start) {
    if (seen[start - 1] || images_[start - 1] == start) {
      continue;
    }
    out += '(';
    Symbol s = start;
    bool first = true;
    while (!seen[s - 1]) {
      seen[s - 1] = true;
      if (!first && spaced) {
        out += ' ';
      }
      out += std::to_string(s);
      first = false;
      s = images_[s - 1];
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.order() != inner.order()) {
    throw LevelMismatch("cannot compose permutations of order " + std::to_string(outer.order()) + " and " +
                        std::to_string(inner.order()));
  }
  std::vector<Symbol> images(inner.order());
  for (Symbol s = 1; s <= inner.order(); ++s) {
    images[s - 1] = outer(inner(s));
  }
  return Permutation(std::move(images));
}

Permutation complete_permutation(std::vector<Symbol> partial_images) {
  const int order = static_cast<int>(partial_images.size());
  std::vector<bool> taken(order, false);
  for (Symbol image : partial_images) {
    if (image == 0) {
      continue;
    }
    if (image < 1 || image > order || taken[image - 1]) {
      throw InvalidParameter("partial image table is not injective on 1.." + std::to_string(order));
    }
    taken[image - 1] = true;
  }
  Symbol free_image = 1;
  for (auto& image : partial_images) {
    if (image != 0) {
      continue;
    }
    while (taken[free_image - 1]) {
      ++free_image;
    }
    image = free_image;
    taken[free_image - 1] = true;
  }
  return Permutation(std::move(partial_images));
}

std::vector<Permutation> all_permutations(int order) {
  require_level(order);
  std::vector<Symbol> images(order);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

// ---------------------------------------------------------------------------
// Pattern, SequenceSet, CrossSection

Pattern::Pattern(const Sequence& representative) : canonical_(standardize(representative)) {}

SequenceSet::SequenceSet(std::vector<Sequence> sequences) : sequences_(std::move(sequences)) {
  if (sequences_.size() < 2) {
    throw ArityError("a sequence set needs at least two sequences, got " + std::to_string(sequences_.size()));
  }
  const auto& first = sequences_.front();
  for (const auto& sequence : sequences_) {
    if (sequence.length() != first.length() || sequence.level() != first.level()) {
      throw ShapeMismatch("all sequences in a set must share length and level");
    }
  }
}

CrossSection::CrossSection(std::vector<Symbol> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2) {
    throw ArityError("a cross section needs at least two elements");
  }
  for (Symbol s : elements_) {
    if (s < 1) {
      throw SymbolOutOfRange("cross-section symbol " + std::to_string(s) + " is below 1");
    }
  }
}

// ---------------------------------------------------------------------------
// Operations

Sequence apply_permutation(const Sequence& sequence, const Permutation& permutation) {
  if (permutation.order() != sequence.level()) {
    throw LevelMismatch("permutation of order " + std::to_string(permutation.order()) +
                        " applied to a level-" + std::to_string(sequence.level()) + " sequence");
  }
  std::vector<Symbol> images;
  images.reserve(sequence.length());
  for (Symbol s : sequence.elements()) {
    images.push_back(permutation(s));
  }
  return Sequence(std::move(images), sequence.level());
}

SequenceSet apply_permutations(const SequenceSet& set, std::span<const Permutation> permutations) {
  if (permutations.size() != set.size()) {
    throw ArityError("expected " + std::to_string(set.size()) + " permutations, got " +
                     std::to_string(permutations.size()));
  }
  std::vector<Sequence> mapped;
  mapped.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    mapped.push_back(apply_permutation(set[i], permutations[i]));
  }
  return SequenceSet(std::move(mapped));
}

Permutation standardizing_permutation(const Sequence& sequence) {
  std::vector<Symbol> images(sequence.level(), 0);
  Symbol next = 1;
  for (Symbol s : sequence.elements()) {
    if (images[s - 1] == 0) {
      images[s - 1] = next++;
    }
  }
  return complete_permutation(std::move(images));
}

Sequence standardize(const Sequence& sequence) {
  std::vector<Symbol> relabel(sequence.level() + 1, 0);
  std::vector<Symbol> out;
  out.reserve(sequence.length());
  Symbol next = 1;
  for (Symbol s : sequence.elements()) {
    if (relabel[s] == 0) {
      relabel[s] = next++;
    }
    out.push_back(relabel[s]);
  }
  return Sequence(std::move(out), sequence.level());
}

bool is_standard(const Sequence& sequence) {
  // seen[v] once v has occurred; v > 1 may only appear after v - 1.
  std::vector<bool> seen(sequence.level() + 1, false);
  seen[0] = true;
  for (Symbol s : sequence.elements()) {
    if (!seen[s - 1]) {
      return false;
    }
    seen[s] = true;
  }
  return true;
}

Pattern pattern_of(const Sequence& sequence) { return Pattern(sequence); }

bool equivalent(const Sequence& lhs, const Sequence& rhs) {
  if (lhs.length() != rhs.length() || lhs.level() != rhs.level()) {
    throw ShapeMismatch("equivalence is only defined for sequences of equal length and level");
  }
  return standardize(lhs) == standardize(rhs);
}

CrossSection cross_section(const SequenceSet& set, std::size_t index) {
  std::vector<Symbol> elements;
  elements.reserve(set.size());
  for (const auto& sequence : set) {
    elements.push_back(sequence[index]);
  }
  return CrossSection(std::move(elements));
}

std::vector<CrossSection> cross_sections(const SequenceSet& set) {
  std::vector<CrossSection> sections;
  sections.reserve(set.length());
  for (std::size_t i = 0; i < set.length(); ++i) {
    sections.push_back(cross_section(set, i));
  }
  return sections;
}

bool is_constant(const CrossSection& section) noexcept {
  auto elements = section.elements();
  return std::all_of(elements.begin(), elements.end(), [&](Symbol s) { return s == elements.front(); });
}

namespace {

template <typename Range>
std::ostream& write_list(std::ostream& os, const Range& range) {
  os << '[';
  bool first = true;
  for (Symbol s : range) {
    if (!first) {
      os << ',';
    }
    os << s;
    first = false;
  }
  return os << ']';
}

} // namespace

std::ostream& operator<<(std::ostream& os, const Sequence& sequence) { return write_list(os, sequence.elements()); }
std::ostream& operator<<(std::ostream& os, const CrossSection& section) { return write_list(os, section.elements()); }
std::ostream& operator<<(std::ostream& os, const Permutation& permutation) { return os << permutation.to_cycles(); }
std::ostream& operator<<(std::ostream& os, const Pattern& pattern) { return os << '[' << pattern.canonical() << ']'; }

} // namespace seqpat

std::size_t std::hash<seqpat::Pattern>::operator()(const seqpat::Pattern& pattern) const noexcept {
  std::size_t seed = std::hash<int>{}(pattern.level());
  for (seqpat::Symbol s : pattern.canonical().elements()) {
    seed ^= std::hash<int>{}(s) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
