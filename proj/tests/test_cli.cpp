#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "seqpat/cli.hpp"
#include "seqpat/extremal.hpp"
#include "seqpat/metric.hpp"

using namespace seqpat;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("seqpat_test_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << contents;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() { std::filesystem::remove(path_); }

  [[nodiscard]] std::string path() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

const std::string kThreeSequences = "# three sequences of length 5\n"
                                    "level: 3\n"
                                    "1 1 3 2 1\n"
                                    "3,3,1,2,3\n"
                                    "1 1 2 2 1   # trailing comment\n";

cli::InputDocument parse(const std::string& text) {
  std::istringstream in(text);
  return cli::parse_input_document(in);
}

} // namespace

TEST_CASE("input documents parse and print") {
  const auto document = parse(kThreeSequences);
  CHECK(document.level == 3);
  CHECK(document.rows == std::vector<std::vector<Symbol>>{{1, 1, 3, 2, 1}, {3, 3, 1, 2, 3}, {1, 1, 2, 2, 1}});

  std::ostringstream written;
  cli::write_input_document(written, document);
  CHECK(written.str() == "level: 3\n1 1 3 2 1\n3 3 1 2 3\n1 1 2 2 1\n");
  const auto reparsed = parse(written.str());
  CHECK(reparsed.level == document.level);
  CHECK(reparsed.rows == document.rows);

  CHECK(parse("level: 2\n").rows.empty());
}

TEST_CASE("malformed input documents are rejected with a line number") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"1 2 1\n", "line 1"},
      {"level: 0\n1\n", "line 1"},
      {"level: x\n", "line 1"},
      {"level: 2\n1 2\n1 3\n", "line 3"},
      {"level: 2\n1 2\n1 2 1\n", "line 3"},
      {"level: 2\n\n1 0\n", "line 3"},
      {"level: 2\n1 a\n", "line 2"},
      {"level: 2\n, ,\n", "line 2"},
  };
  for (const auto& [text, where] : cases) {
    CAPTURE(text);
    try {
      parse(text);
      FAIL("expected ParseError");
    } catch (const cli::ParseError& e) {
      CHECK(std::string(e.what()).find(where) != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse("# only a comment\n"), cli::ParseError);
}

TEST_CASE("count") {
  auto r = invoke({"count", "--length", "4", "--level", "2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "8\nburnside: 8\nstirling: 8\n");

  r = invoke({"count", "-n", "1", "-l", "7"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.substr(0, 2) == "1\n");

  r = invoke({"--json", "--verify", "count", "--length", "5", "--level", "3"});
  CHECK(r.code == cli::kSuccess);
  const auto report = json::parse(r.out);
  CHECK(report["count"] == "41");
  CHECK(report["burnside"] == "41");
  CHECK(report["stirling"] == "41");
  CHECK(report["enumeration"] == "41");
  CHECK(report["agree"] == true);

  r = invoke({"count", "--length", "30", "--level", "30", "--verify"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.substr(0, r.out.find('\n')) == "846749014511809332450147");
  CHECK(r.out.find("enumeration: skipped") != std::string::npos);

  CHECK(invoke({"count", "--length", "0", "--level", "3"}).code == cli::kUsageError);
  CHECK(invoke({"count", "--length", "3"}).code == cli::kUsageError);
  CHECK(invoke({"count", "--length", "x", "--level", "3"}).code == cli::kUsageError);
}

TEST_CASE("distance in both modes") {
  const TempFile file(kThreeSequences);
  auto r = invoke({"distance", file.path(), "--mode", "sequences"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "4\n");

  r = invoke({"distance", file.path(), "--mode", "patterns"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "1\n");
  CHECK(invoke({"distance", file.path()}).out == "1\n");

  for (const std::string algorithm : {"clique", "brute", "auto"}) {
    CHECK(invoke({"--algorithm", algorithm, "distance", file.path()}).out == "1\n");
  }

  const TempFile twins("level: 4\n1 4 2 2 3\n1 4 2 2 3\n");
  CHECK(invoke({"distance", twins.path()}).out == "0\n");
  CHECK(invoke({"--algorithm", "hungarian", "distance", twins.path()}).out == "0\n");
}

TEST_CASE("distance witness and JSON report") {
  const TempFile file(kThreeSequences);
  for (const std::string algorithm : {"clique", "brute"}) {
    CAPTURE(algorithm);
    const auto r = invoke({"--json", "--algorithm", algorithm, "distance", file.path()});
    REQUIRE(r.code == cli::kSuccess);
    const auto report = json::parse(r.out);
    CHECK(report["mode"] == "patterns");
    CHECK(report["algorithm"] == algorithm);
    CHECK(report["k"] == 3);
    CHECK(report["length"] == 5);
    CHECK(report["level"] == 3);
    CHECK(report["distance"] == 1);
    CHECK(report["distance"].get<int>() + report["constant_count"].get<int>() == 5);

    // Applying the reported witness to the input rows leaves one non-constant column.
    const auto document = parse(kThreeSequences);
    std::vector<Sequence> mapped;
    for (std::size_t i = 0; i < document.rows.size(); ++i) {
      const auto phi = Permutation::from_cycles(report["witness"][i].get<std::string>(), 3);
      mapped.push_back(apply_permutation(Sequence(document.rows[i], 3), phi));
    }
    CHECK(constant_count(SequenceSet(mapped)) == 4);
  }

  const auto text = invoke({"--witness", "--algorithm", "brute", "distance", file.path()});
  CHECK(text.out == "1\nwitness: (1) (13) (1)\n");

  const auto sequences = json::parse(invoke({"--json", "distance", file.path(), "--mode", "sequences"}).out);
  CHECK(sequences["distance"] == 4);
  CHECK(sequences["constant_count"] == 1);
  CHECK(sequences["witness"].is_null());

  const TempFile pair("level: 3\n1 1 3 2 1\n1 1 2 2 1\n");
  const auto hungarian = json::parse(invoke({"--json", "--algorithm", "hungarian", "distance", pair.path()}).out);
  CHECK(hungarian["algorithm"] == "hungarian");
  CHECK(hungarian["distance"] == 1);
  CHECK(hungarian["witness"].size() == 2);
}

TEST_CASE("distance error paths") {
  const TempFile single("level: 3\n1 2 3\n");
  CHECK(invoke({"distance", single.path()}).code == cli::kDomainError);
  const TempFile empty("level: 3\n");
  CHECK(invoke({"distance", empty.path()}).code == cli::kDomainError);

  const TempFile ragged("level: 3\n1 2 3\n1 2\n");
  auto r = invoke({"distance", ragged.path()});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("line 3") != std::string::npos);

  const TempFile oversized("level: 2\n1 2 3\n1 2 1\n");
  CHECK(invoke({"distance", oversized.path()}).code == cli::kUsageError);
  CHECK(invoke({"distance", "/nonexistent/seqpat/input.txt"}).code == cli::kUsageError);
  CHECK(invoke({"distance"}).code == cli::kUsageError);

  const TempFile file(kThreeSequences);
  CHECK(invoke({"--algorithm", "hungarian", "distance", file.path()}).code == cli::kUsageError);
  CHECK(invoke({"--algorithm", "simplex", "distance", file.path()}).code == cli::kUsageError);
  CHECK(invoke({"distance", file.path(), "--mode", "words"}).code == cli::kUsageError);
  CHECK(invoke({}).code == cli::kUsageError);
  CHECK(invoke({"frobnicate"}).code == cli::kUsageError);
}

TEST_CASE("standardize") {
  const TempFile file("level: 3\n1 1 3 2 1\n1 1 1 1 1\n2 2 1 3 2\n");
  auto r = invoke({"standardize", file.path()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "level: 3\n1 1 2 3 1\n1 1 1 1 1\n1 1 2 3 1\n");

  r = invoke({"--json", "standardize", file.path()});
  const auto report = json::parse(r.out);
  CHECK(report["level"] == 3);
  CHECK(report["sequences"] == json::parse("[[1,1,2,3,1],[1,1,1,1,1],[1,1,2,3,1]]"));

  const TempFile bad("level: 3\n1 4\n");
  CHECK(invoke({"standardize", bad.path()}).code == cli::kUsageError);
}

TEST_CASE("maxdist") {
  CHECK(invoke({"maxdist", "5", "3", "2"}).out == "3\n");
  CHECK(invoke({"maxdist", "9", "1", "4"}).out == "0\n");
  CHECK(invoke({"maxdist", "4", "2", "2"}).out == "2\n");
  const auto report = json::parse(invoke({"--json", "maxdist", "23", "3", "3"}).out);
  CHECK(report["max_distance"] == 20);

  CHECK(invoke({"maxdist", "0", "3", "2"}).code == cli::kUsageError);
  CHECK(invoke({"maxdist", "5", "3", "1"}).code == cli::kUsageError);
  CHECK(invoke({"maxdist", "5", "3"}).code == cli::kUsageError);
}

TEST_CASE("generate") {
  auto r = invoke({"generate", "5", "2", "2"});
  CHECK(r.code == cli::kSuccess);
  const auto document = parse(r.out);
  CHECK(document.level == 2);
  CHECK(document.rows == std::vector<std::vector<Symbol>>{{1, 1, 1, 1, 1}, {1, 2, 1, 2, 1}});
  CHECK(r.out.find("# pattern distance: 2\n") != std::string::npos);

  const auto m = parse(invoke({"generate", "2", "2", "2"}).out);
  const auto expected = construct_M(2, 2);
  REQUIRE(m.rows.size() == expected.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    CHECK(std::equal(m.rows[i].begin(), m.rows[i].end(), expected[i].elements().begin(), expected[i].elements().end()));
  }

  const auto report = json::parse(invoke({"--json", "generate", "7", "3", "3"}).out);
  CHECK(report["distance"] == 6);
  CHECK(report["sequences"].size() == 3);

  CHECK(invoke({"generate", "5", "0", "2"}).code == cli::kUsageError);
}

TEST_CASE("generate then distance reproduces maxdist") {
  for (int level = 1; level <= 4; ++level) {
    for (int k = 2; k <= 3; ++k) {
      for (int n = 1; n <= 20; n += 3) {
        const std::vector<std::string> params{std::to_string(n), std::to_string(level), std::to_string(k)};
        auto generate_args = std::vector<std::string>{"generate"};
        generate_args.insert(generate_args.end(), params.begin(), params.end());
        const TempFile generated(invoke(generate_args).out);
        auto maxdist_args = std::vector<std::string>{"maxdist"};
        maxdist_args.insert(maxdist_args.end(), params.begin(), params.end());
        CHECK(invoke({"distance", generated.path()}).out == invoke(maxdist_args).out);
      }
    }
  }
}

TEST_CASE("output is deterministic") {
  const TempFile file(kThreeSequences);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "--witness", "distance", file.path()},
           {"--witness", "--algorithm", "clique", "distance", file.path()},
           {"generate", "17", "3", "3"},
           {"--json", "count", "-n", "12", "-l", "4"},
       }) {
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("help exits successfully") {
  const auto r = invoke({"--help"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("maxdist") != std::string::npos);
}
