// Golden-transcript tests for the qtorb CLI. Each case spawns the real
// executable against a shipped fixture, captures one output stream, and
// compares it byte-for-byte with the transcript stored in
// fixtures/transcripts/. Exit codes are part of every case.
//
// After an intentional output change, regenerate the transcripts with
//   ./test_cli --write-golden
// and review the diff.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string fixture_dir() {
  if (const char* env = std::getenv("QTORB_FIXTURES")) {
    return env;
  }
  return QTORB_FIXTURE_DIR;
}

std::string transcript_dir() { return fixture_dir() + "/transcripts"; }

std::string fixture(const std::string& name) { return fixture_dir() + "/" + name; }

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

struct RunResult {
  std::string output;
  int exit_code = -1;
};

// Run the CLI with the given arguments, capturing stdout (or stderr when
// capture_stderr is set; the other stream is discarded).
RunResult run_cli(const std::vector<std::string>& args, bool capture_stderr) {
  std::string cmd = shell_quote(QTORB_CLI_PATH);
  for (const auto& a : args) {
    cmd += " " + shell_quote(a);
  }
  cmd += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";

  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct Case {
  std::string name; // transcript file stem
  std::vector<std::string> args;
  int expected_exit = 0;
  bool capture_stderr = false;
};

std::vector<Case> golden_cases() {
  const std::string simplex4 = fixture("simplex4.json");
  const std::string fan = fixture("simplex4_fan.json");
  const std::string w2 = fixture("w2.json");
  const std::string w3 = fixture("w3.json");
  const std::string wp112 = fixture("wp112.json");
  const std::string invalid = fixture("invalid_nonprimitive.json");

  return {
      {"info_simplex4", {"info", simplex4}, 0, false},
      {"info_w2_json", {"info", w2, "--json"}, 0, false},
      {"sectors_simplex4", {"sectors", simplex4}, 0, false},
      {"sectors_simplex4_json", {"sectors", simplex4, "--json"}, 0, false},
      {"betti_simplex4_json", {"betti", simplex4, "--json"}, 0, false},
      {"betti_w3", {"betti", w3}, 0, false},
      {"betti_fan", {"betti", fan}, 0, false},
      {"euler_simplex4", {"euler", simplex4}, 0, false},
      {"euler_wp112_json", {"euler", wp112, "--json"}, 0, false},
      {"quasi_sl_fan", {"quasi-sl", fan}, 0, false},
      {"quasi_sl_simplex4_json", {"quasi-sl", simplex4, "--json"}, 0, false},
      {"blowup_simplex4",
       {"blowup", simplex4, "--face", "F1,F5", "--lambda0", "1,1,1,1"},
       0,
       false},
      {"crepant_candidates_simplex4",
       {"crepant-candidates", simplex4, "--face", "F1,F5"},
       0,
       false},
      {"mckay_simplex4_json",
       {"mckay", simplex4, "--face", "F1,F5", "--lambda0", "1,1,1,1", "--json"},
       0,
       false},
      {"mckay_w2", {"mckay", w2, "--face", "F1,F3", "--lambda0", "1,1"}, 0, false},
      {"mckay_fan_noncrepant",
       {"mckay", fan, "--face", "F1,F5", "--lambda0", "0,-1,-1,-1"},
       0,
       false},
      {"resolve_simplex4", {"resolve", simplex4}, 0, false},
      {"resolve_w2_json", {"resolve", w2, "--json"}, 0, false},
      {"product_inverse_simplex4",
       {"product", simplex4, "--s1", "F1,F5:1,1,1,1", "--s2", "F1,F5:1,2,2,2"},
       0,
       false},
      {"product_self_simplex4_json",
       {"product", simplex4, "--s1", "F1,F5:1,1,1,1", "--s2", "F1,F5:1,1,1,1",
        "--json"},
       0,
       false},
      {"validate_w3", {"validate", w3}, 0, false},
      {"validate_invalid", {"validate", invalid}, 1, false},
      {"validate_invalid_json", {"validate", invalid, "--json"}, 1, false},
      {"sectors_invalid_stderr", {"sectors", invalid}, 1, true},
      {"product_unknown_point_stderr",
       {"product", simplex4, "--s1", "F1,F5:9,9,9,9", "--s2", "untwisted"},
       2,
       true},
      {"blowup_bad_cone_stderr",
       {"blowup", simplex4, "--face", "F1,F5", "--lambda0", "1,0,0,0"},
       2,
       true},
  };
}

std::string transcript_path(const Case& c) {
  return transcript_dir() + "/" + c.name + ".txt";
}

int write_golden() {
  std::filesystem::create_directories(transcript_dir());
  for (const auto& c : golden_cases()) {
    const RunResult r = run_cli(c.args, c.capture_stderr);
    if (r.exit_code != c.expected_exit) {
      std::cerr << c.name << ": expected exit " << c.expected_exit << ", got "
                << r.exit_code << " -- transcript NOT written\n";
      return 1;
    }
    std::ofstream out(transcript_path(c), std::ios::binary | std::ios::trunc);
    out << r.output;
    std::cout << "wrote " << transcript_path(c) << " (" << r.output.size()
              << " bytes)\n";
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(in), "missing file " << path
                                                         << " (run --write-golden?)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("golden transcripts reproduce bit-exactly") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    const RunResult r = run_cli(c.args, c.capture_stderr);
    CHECK(r.exit_code == c.expected_exit);
    CHECK(r.output == read_file(transcript_path(c)));
  }
}

TEST_CASE("blowup --out writes the Y-stage model byte for byte") {
  const std::string out_path =
      (std::filesystem::temp_directory_path() / "qtorb_cli_y.json").string();
  const RunResult r = run_cli({"blowup", fixture("simplex4.json"), "--face", "F1,F5",
                               "--lambda0", "1,1,1,1", "--out", out_path},
                              false);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out_path) == read_file(fixture("simplex4_y.json")));
  std::filesystem::remove(out_path);
}

TEST_CASE("resolve --out writes the Z-stage model byte for byte") {
  const std::string out_path =
      (std::filesystem::temp_directory_path() / "qtorb_cli_z.json").string();
  const RunResult r =
      run_cli({"resolve", fixture("simplex4.json"), "--out", out_path}, false);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out_path) == read_file(fixture("simplex4_z.json")));
  std::filesystem::remove(out_path);
}

TEST_CASE("usage and file errors exit with code 2") {
  CHECK(run_cli({"sectors", "/nonexistent/model.json"}, true).exit_code == 2);
  CHECK(run_cli({"frobnicate", fixture("simplex4.json")}, true).exit_code == 2);
  CHECK(run_cli({"sectors"}, true).exit_code == 2);
  CHECK(run_cli({"blowup", fixture("simplex4.json"), "--face", "F1,F5", "--lambda0",
                 "bananas"},
                true)
            .exit_code == 2);
}

TEST_CASE("every shipped model fixture validates with exit 0") {
  for (const char* name :
       {"simplex4.json", "simplex4_fan.json", "w2.json", "w3.json", "cp2.json",
        "cp1xcp1.json", "wp112.json", "simplex4_y.json", "simplex4_z.json"}) {
    CAPTURE(name);
    CHECK(run_cli({"validate", fixture(name)}, false).exit_code == 0);
  }
}

int main(int argc, char** argv) {
  if (argc == 2 && std::string(argv[1]) == "--write-golden") {
    return write_golden();
  }
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
