// Golden-file coverage for the disassembly format plus end-to-end checks
// of the cclab binary: outputs, exit codes, and JSON determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cclab/vm.hpp"
#include "support/assemble.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) {
  return std::string(CCLAB_GOLDEN_DIR) + "/" + name;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CCLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("disassembly matches the golden listings") {
  const std::array<std::pair<const char*, const char*>, 6> cases{{
      {"00101", "disasm_lit_rest.txt"},
      {"010010", "disasm_emit_run.txt"},
      {"01011010111111", "disasm_mixed.txt"},
      {"1110010010001", "disasm_loop.txt"},
      {"11001101010100011", "disasm_chunk.txt"},
      {"1110010", "disasm_truncated.txt"},
  }};
  for (const auto& [program, file] : cases) {
    std::string expected = read_file(golden_path(file));
    CHECK(cclab::disassemble(cclab::BitString::parse(program)) == expected);
    // and the notation assembles back to the program
    CHECK(testsupport::assemble(expected) == cclab::BitString::parse(program));
  }
}

TEST_CASE("cli vm run") {
  RunResult r = run_cli("vm run --program 00101 --input _");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "output 101"));
  CHECK(contains(r.out, "steps 4"));

  r = run_cli("vm run --program 00101 --cap 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "halt CAP_EXCEEDED"));

  r = run_cli("vm disasm --program 010010");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0: EMIT_RUN b=0 c=2\n");
}

TEST_CASE("cli verification exit codes") {
  CHECK(run_cli("check cf --q 0100101100 --n 3").exit_code == 0);
  RunResult r = run_cli("check cf --q 00 --n 1");
  CHECK(r.exit_code == 1);  // checked and false
  CHECK(contains(r.out, "no"));

  CHECK(run_cli("verify thm1 --m 2 --nmax 5").exit_code == 0);
  CHECK(run_cli("verify thm1 --m 6 --nmax 8").exit_code == 0);
  CHECK(run_cli("verify thm2 --m 1 --n 3 --qmax 8").exit_code == 0);

  // refusals and usage problems are distinct from failed checks
  CHECK(run_cli("oracle bb --m 99").exit_code == 2);
  CHECK(run_cli("oracle c --x 0000000000000000000").exit_code == 2);
  CHECK(run_cli("compress --codec nosuch --x 01").exit_code == 2);
  CHECK(run_cli("compress --codec thm1 --x 01").exit_code == 2);  // missing --m
  CHECK(run_cli("extract-random --q 00 --n 1 --m 0").exit_code == 2);  // not a cf
  CHECK(run_cli("verify constants --grid bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli acceptance subcommand") {
  RunResult r = run_cli("acceptance --criterion 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "criterion 3: PASS"));
  CHECK(run_cli("acceptance --criterion 12").exit_code == 2);
}

TEST_CASE("cli text examples") {
  CHECK(contains(run_cli("oracle c --x 0").out, "C(0) = 3"));
  CHECK(contains(run_cli("oracle bb --m 2").out, "BB(2) = 1"));
  CHECK(contains(run_cli("oracle aset --s 0 --len 1").out, "count 2"));
  CHECK(contains(run_cli("oracle fraction --n 4").out, "16/2^4"));
  CHECK(contains(run_cli("oracle ct --x 0 --poly 1,1,2").out, "C^3(0) = 3"));
  CHECK(contains(run_cli("oracle ct --x 0 --budget 1").out, "fits the budget"));
  CHECK(run_cli("oracle ct --x 0 --budget 1 --poly 1,1,2").exit_code == 2);
  CHECK(run_cli("oracle ct --x 0").exit_code == 2);
  CHECK(contains(run_cli("compress --codec best --x 0000000000000000").out, "bits 12"));
  CHECK(contains(run_cli("extract-random --q 0100101100 --n 4 --m 2").out, "z 00"));
  CHECK(contains(run_cli("verify constants --grid 0-1x2-3 --qmax 8").out, "k_print 2"));
  CHECK(contains(run_cli("distinguish --seed-len 4 --out-len 32 --trials 50 --rng-seed 7").out,
                 "accept rate prg 0"));
}

TEST_CASE("cli json envelope is deterministic") {
  const std::string cmd = "--json verify thm1 --m 3 --nmax 6";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  nlohmann::json ja = nlohmann::json::parse(a.out);
  nlohmann::json jb = nlohmann::json::parse(b.out);
  CHECK(ja["tool_version"] == "0.1.0");
  CHECK(ja["command"] == "verify thm1");
  CHECK(ja["parameters"]["m"] == 3);
  CHECK(ja["result"]["pass"] == true);
  CHECK(ja.contains("timing_ms"));
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  CHECK(ja.dump() == jb.dump());

  // a second command, through the same equality
  RunResult c = run_cli("--json distinguish --seed-len 8 --out-len 32 --trials 64 --rng-seed 3");
  RunResult d = run_cli("--json distinguish --seed-len 8 --out-len 32 --trials 64 --rng-seed 3");
  nlohmann::json jc = nlohmann::json::parse(c.out);
  nlohmann::json jd = nlohmann::json::parse(d.out);
  jc.erase("timing_ms");
  jd.erase("timing_ms");
  CHECK(jc.dump() == jd.dump());
}
