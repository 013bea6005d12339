#include <doctest.h>

#include <filesystem>
#include <random>

#include <json.hpp>

#include "machhop/error.hpp"
#include "machhop/experiment.hpp"
#include "machhop/io.hpp"

using namespace machhop;

namespace {

void check_parse_error(const std::string& text, const std::string& needle) {
  try {
    parse_sequence(text);
    FAIL("expected a parse error for: " << text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("sequence text layout") {
  const auto s = ideal_ch(2);
  const auto text = format_sequence(s);
  CHECK(text.rfind("98 4 ideal-ch;L=2;p=7\n0 0 1 3 1 0 2 ", 0) == 0);
  // 14 values per line, 7 lines, plus the header.
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
}

TEST_CASE("parse reverses format") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto universe = static_cast<std::uint32_t>(1 + rng() % 40);
    const auto period = 1 + rng() % 300;
    std::vector<Channel> v(period);
    for (auto& c : v) c = static_cast<Channel>(rng() % universe);
    const ChSequence s(v, universe, "random;trial=" + std::to_string(trial), rng() % 20);
    const auto back = parse_sequence(format_sequence(s));
    REQUIRE(std::vector<Channel>(back.values().begin(), back.values().end()) == v);
    REQUIRE(back.channel_universe() == universe);
    REQUIRE(back.provenance() == s.provenance());
  }
}

TEST_CASE("parse tolerates blank lines and CRLF") {
  const auto s = parse_sequence("\n3 2 hand made\r\n0 1\r\n\r\n1\r\n");
  CHECK(s.period() == 3);
  CHECK(s.provenance() == "hand made");
  CHECK(s[2] == 1);
}

TEST_CASE("parse errors carry line numbers") {
  check_parse_error("", "line 1: missing header");
  check_parse_error("x 4 p\n0\n", "line 1: header must start with a positive period");
  check_parse_error("2\n0 1\n", "line 1: header must give a positive channel count");
  check_parse_error("3 4 p\n0 1\n2 q\n", "line 3: 'q' is not a channel index");
  check_parse_error("3 4 p\n0 1\n\n4\n", "line 4: channel 4 outside universe of 4");
  check_parse_error("2 4 p\n0 1 2\n", "line 2: more values than the declared period");
  check_parse_error("3 4 p\n0 1\n", "line 2: expected 3 values, found 2");
  check_parse_error("3 4 p\n0 -1 2\n", "line 2: '-1' is not a channel index");
}

TEST_CASE("file round trip and missing file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "machhop_io_roundtrip.txt";
  const auto s = general_mach_sequence(4);
  write_text_file(path, format_sequence(s));
  const auto back = read_sequence_file(path);
  CHECK(back.period() == s.period());
  CHECK(std::equal(back.values().begin(), back.values().end(), s.values().begin()));
  std::filesystem::remove(path);
  try {
    read_sequence_file(dir / "machhop_no_such_file.txt");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
}

TEST_CASE("run CSV") {
  const std::vector<RunRecord> records{{0, 7, 3, 2, 1, 4, 4}, {1, 7, 3, 2, 1, std::nullopt, std::nullopt}};
  CHECK(format_runs_csv(records) ==
        "drift,seed,n1,n2,G,T,Tsharp\n0,7,3,2,1,4,4\n1,7,3,2,1,NA,NA\n");
}

TEST_CASE("summary JSON") {
  ExperimentConfig config;
  config.algorithm = Algorithm::ortho_ch;
  config.N = 4;
  config.avail1 = {0, 1, 3};
  config.avail2 = {0, 2, 3};
  config.seed_count = 3;
  const auto summary = run_experiment_sweep(config);
  const auto doc = nlohmann::json::parse(format_summary_json(summary));
  CHECK(doc["algorithm"] == "ortho-ch");
  CHECK(doc["bound_metric"] == "mttr");
  CHECK(doc["bound"] == 55);
  CHECK(doc["runs"] == 165);
  CHECK(doc["pass"] == true);
  CHECK(doc["mttr"]["observed_max"].get<std::uint64_t>() <= 55);
}

TEST_CASE("matrix text") {
  const auto m = ortho_member_matrix(3, 1);
  CHECK(format_matrix(m) == "0 1 2\n1 2 0\n2 0 1\n");
}
