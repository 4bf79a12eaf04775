#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seqpat/core.hpp"

namespace seqpat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDomainError = 3,
  kVerificationFailure = 4,
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Text format:
///
///     # comment
///     level: 3
///     1 1 3 2 1
///     3,3,1,2,3
///
/// The first non-comment line declares the level; each further line is one
/// sequence of whitespace- or comma-separated symbols.
struct InputDocument {
  int level = 0;
  std::vector<std::vector<Symbol>> rows;
};

/// Throws ParseError with a 1-based line number on malformed input.
InputDocument parse_input_document(std::istream& in);

void write_input_document(std::ostream& out, const InputDocument& document);

/// Runs the command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace seqpat::cli
