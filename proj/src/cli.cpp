#include "seqpat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqpat/enumeration.hpp"
#include "seqpat/extremal.hpp"
#include "seqpat/metric.hpp"

namespace seqpat::cli {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

int parse_positive(std::string_view token, std::size_t line_number) {
  int value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) {
    throw ParseError("line " + std::to_string(line_number) + ": expected a positive integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

} // namespace

InputDocument parse_input_document(std::istream& in) {
  InputDocument document;
  bool have_level = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view content = line;
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      content = content.substr(0, hash);
    }
    content = trim(content);
    if (content.empty()) {
      continue;
    }

    if (!have_level) {
      constexpr std::string_view key = "level:";
      if (content.substr(0, key.size()) != key) {
        throw ParseError("line " + std::to_string(line_number) + ": expected 'level: <l>' header");
      }
      document.level = parse_positive(trim(content.substr(key.size())), line_number);
      have_level = true;
      continue;
    }

    std::vector<Symbol> row;
    std::size_t start = 0;
    while (start < content.size()) {
      const auto end = std::min(content.find_first_of(" \t,", start), content.size());
      if (end > start) {
        const int symbol = parse_positive(content.substr(start, end - start), line_number);
        if (symbol > document.level) {
          throw ParseError("line " + std::to_string(line_number) + ": symbol " + std::to_string(symbol) +
                           " exceeds level " + std::to_string(document.level));
        }
        row.push_back(symbol);
      }
      start = end + 1;
    }
    if (row.empty()) {
      throw ParseError("line " + std::to_string(line_number) + ": empty sequence");
    }
    if (!document.rows.empty() && row.size() != document.rows.front().size()) {
      throw ParseError("line " + std::to_string(line_number) + ": sequence of length " + std::to_string(row.size()) +
                       " differs from the first sequence's length " + std::to_string(document.rows.front().size()));
    }
    document.rows.push_back(std::move(row));
  }
  if (!have_level) {
    throw ParseError("missing 'level: <l>' header");
  }
  return document;
}

void write_input_document(std::ostream& out, const InputDocument& document) {
  out << "level: " << document.level << '\n';
  for (const auto& row : document.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? " " : "") << row[i];
    }
    out << '\n';
  }
}

namespace {

struct GlobalFlags {
  bool json = false;
  bool verify = false;
  bool witness = false;
  std::string algorithm = "auto";
};

InputDocument read_document(const std::string& path) {
  if (path == "-") {
    return parse_input_document(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return parse_input_document(in);
}

std::vector<Sequence> to_sequences(const InputDocument& document) {
  std::vector<Sequence> sequences;
  sequences.reserve(document.rows.size());
  for (const auto& row : document.rows) {
    sequences.emplace_back(row, document.level);
  }
  return sequences;
}

json witness_json(const std::optional<std::vector<Permutation>>& witness) {
  if (!witness) {
    return nullptr;
  }
  json out = json::array();
  for (const auto& permutation : *witness) {
    out.push_back(permutation.to_cycles());
  }
  return out;
}

std::string witness_text(const std::vector<Permutation>& witness) {
  std::string text;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    text += (i ? " " : "") + witness[i].to_cycles();
  }
  return text;
}

int cmd_count(int length, int level, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  if (length < 1 || level < 1) {
    err << "error: --length and --level must both be at least 1\n";
    return kUsageError;
  }
  const PatternCount burnside = count_patterns_burnside(length, level);
  const PatternCount stirling = count_standard_stirling(length, level);
  std::optional<PatternCount> enumerated;
  if (flags.verify && length <= 8 && level <= 5) {
    PatternCount tally = 0;
    for (const auto& sequence : enumerate_standard(length, level)) {
      (void)sequence;
      ++tally;
    }
    enumerated = tally;
  }
  const bool agree = burnside == stirling && (!enumerated || *enumerated == burnside);

  if (flags.json) {
    json report{{"length", length},
                {"level", level},
                {"count", burnside.str()},
                {"burnside", burnside.str()},
                {"stirling", stirling.str()},
                {"enumeration", enumerated ? json(enumerated->str()) : json(nullptr)},
                {"agree", agree}};
    out << report.dump() << '\n';
  } else {
    out << burnside << '\n';
    out << "burnside: " << burnside << '\n';
    out << "stirling: " << stirling << '\n';
    if (flags.verify) {
      if (enumerated) {
        out << "enumeration: " << *enumerated << '\n';
      } else {
        out << "enumeration: skipped (needs n <= 8 and l <= 5)\n";
      }
    }
  }
  if (!agree) {
    err << "error: counting routes disagree\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

int cmd_distance(const std::string& path, const std::string& mode, const GlobalFlags& flags, std::ostream& out,
                 std::ostream& err) {
  InputDocument document;
  std::vector<Sequence> sequences;
  try {
    document = read_document(path);
    sequences = to_sequences(document);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (sequences.size() < 2) {
    err << "error: distance needs at least two sequences, got " << sequences.size() << '\n';
    return kDomainError;
  }
  const SequenceSet set(std::move(sequences));

  DistanceResult result;
  std::string algorithm_used = "none";
  if (mode == "sequences") {
    result.constant_count = constant_count(set);
    result.distance = set.length() - result.constant_count;
  } else if (flags.algorithm == "hungarian") {
    if (set.size() != 2) {
      err << "error: --algorithm hungarian needs exactly two sequences, got " << set.size() << '\n';
      return kUsageError;
    }
    result = pattern_distance_pair(set);
    algorithm_used = "hungarian";
  } else {
    Algorithm requested = Algorithm::automatic;
    if (flags.algorithm == "clique") {
      requested = Algorithm::clique;
    } else if (flags.algorithm == "brute") {
      requested = Algorithm::brute;
    }
    const Algorithm resolved = resolve_algorithm(requested, set.level(), set.size());
    algorithm_used = resolved == Algorithm::brute ? "brute" : "clique";
    try {
      result = pattern_distance(set, resolved);
    } catch (const SearchSpaceTooLarge& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }

  if (flags.json) {
    json report{{"mode", mode},
                {"algorithm", algorithm_used},
                {"k", set.size()},
                {"length", set.length()},
                {"level", set.level()},
                {"distance", result.distance},
                {"constant_count", result.constant_count},
                {"witness", witness_json(result.witness)}};
    out << report.dump() << '\n';
  } else {
    out << result.distance << '\n';
    if (flags.witness && result.witness) {
      out << "witness: " << witness_text(*result.witness) << '\n';
    }
  }
  return kSuccess;
}

int cmd_standardize(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  InputDocument document;
  try {
    document = read_document(path);
    for (auto& row : document.rows) {
      const auto standard = standardize(Sequence(row, document.level));
      row.assign(standard.elements().begin(), standard.elements().end());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (flags.json) {
    out << json{{"level", document.level}, {"sequences", document.rows}}.dump() << '\n';
  } else {
    write_input_document(out, document);
  }
  return kSuccess;
}

int cmd_maxdist(std::int64_t length, int level, int k, const GlobalFlags& flags, std::ostream& out,
                std::ostream& err) {
  std::int64_t value = 0;
  try {
    value = max_distance(length, level, k);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (flags.json) {
    out << json{{"length", length}, {"level", level}, {"k", k}, {"max_distance", value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kSuccess;
}

int cmd_generate(std::int64_t length, int level, int k, const GlobalFlags& flags, std::ostream& out,
                 std::ostream& err) {
  InputDocument document;
  ExtremalParams params{};
  std::int64_t distance = 0;
  try {
    params = extremal_params(length, level, k);
    distance = max_distance(length, level, k);
    const auto set = construct_Mn(length, level, k);
    document.level = level;
    for (const auto& sequence : set) {
      document.rows.emplace_back(sequence.elements().begin(), sequence.elements().end());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (flags.json) {
    out << json{{"length", length},
                {"level", level},
                {"k", k},
                {"sequences", document.rows},
                {"distance", distance}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "# " << k << " sequences of length " << length << ", level " << level << ": " << params.copies
      << " full copies of M plus " << params.remainder << " rows\n";
  write_input_document(out, document);
  out << "# pattern distance: " << distance << '\n';
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hamming distance of sequence patterns", "seqpat"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit a single-line JSON report");
  app.add_flag("--verify", flags.verify, "Cross-check counts by brute enumeration");
  app.add_flag("--witness", flags.witness, "Print an optimal permutation tuple in cycle notation");
  app.add_option("--algorithm", flags.algorithm, "Pattern distance algorithm")
      ->check(CLI::IsMember({"clique", "brute", "hungarian", "auto"}));

  int count_length = 0;
  int count_level = 0;
  auto* count = app.add_subcommand("count", "Count length-n level-l sequence patterns");
  count->add_option("--length,-n", count_length, "Sequence length n")->required();
  count->add_option("--level,-l", count_level, "Level l")->required();

  std::string distance_file;
  std::string mode = "patterns";
  auto* distance = app.add_subcommand("distance", "Distance of the sequences in a file");
  distance->add_option("file", distance_file, "Input document ('-' for stdin)")->required();
  distance->add_option("--mode", mode, "Compare raw sequences or the patterns they generate")
      ->check(CLI::IsMember({"sequences", "patterns"}));

  std::string standardize_file;
  auto* standardize_cmd = app.add_subcommand("standardize", "Print the standard form of every sequence");
  standardize_cmd->add_option("file", standardize_file, "Input document ('-' for stdin)")->required();

  std::int64_t extremal_length = 0;
  int extremal_level = 0;
  int extremal_k = 0;
  auto* maxdist = app.add_subcommand("maxdist", "Maximal distance of k patterns of length n and level l");
  auto* generate = app.add_subcommand("generate", "Emit a k-set of sequences attaining the maximal distance");
  for (auto* sub : {maxdist, generate}) {
    sub->add_option("n", extremal_length, "Length")->required();
    sub->add_option("l", extremal_level, "Level")->required();
    sub->add_option("k", extremal_k, "Number of sequences")->required();
  }

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count->parsed()) {
      return cmd_count(count_length, count_level, flags, out, err);
    }
    if (distance->parsed()) {
      return cmd_distance(distance_file, mode, flags, out, err);
    }
    if (standardize_cmd->parsed()) {
      return cmd_standardize(standardize_file, flags, out, err);
    }
    if (maxdist->parsed()) {
      return cmd_maxdist(extremal_length, extremal_level, extremal_k, flags, out, err);
    }
    if (generate->parsed()) {
      return cmd_generate(extremal_length, extremal_level, extremal_k, flags, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace seqpat::cli
