#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string command = std::string(GAMMAK_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

RunResult run_piped(const std::string& stdin_text, const std::string& args) {
  RunResult result;
  std::string command =
      "printf '" + stdin_text + "' | " + std::string(GAMMAK_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("seq emits exact csv bytes") {
  RunResult r = run_cli("seq --k 2 --n 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,a,b,c,d,letter,index\n"
        "1,1,3,1,3,s,\n"
        "2,2,7,1,4,t1,1\n"
        "3,4,11,2,4,t2,\n");
}

TEST_CASE("seq with zero rows prints the header only") {
  RunResult r = run_cli("seq --k 2 --n 0 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n,a,b,c,d,letter,index\n");
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* args : {"seq --k 3 --n 40 --format csv", "synth --k 2 --bound 100 --format json",
                           "best --k 4 38 185", "word --k 5 --len 200"}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("json outputs round-trip to identical bytes") {
  for (const char* args :
       {"seq --k 2 --n 5 --format json", "best --k 4 38 185 --format json",
        "synth --k 2 --bound 100 --format json", "word --k 2 --len 30 --check --format json"}) {
    RunResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.output);
    CHECK(parsed.dump(2) + "\n" == r.output);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("verify --k 2 --bound -1").exit_code == 2);
  CHECK(run_cli("seq --k 0 --n 5").exit_code == 2);
  CHECK(run_cli("best --k 2 7").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("word --k 2 --len 10 --via nonsense").exit_code == 2);
  CHECK(run_cli("best --k 2 1 3 --format csv").exit_code == 2);
  CHECK(run_cli("synth --k 2 --bound 50 --format csv").exit_code == 2);
}

TEST_CASE("seq table for k=4 carries the d-column prefix") {
  RunResult r = run_cli("seq --k 4 --n 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,a,b,c,d,letter,index\n"
        "1,1,5,1,5,s,\n"
        "2,2,11,1,6,t1,1\n"
        "3,3,17,1,6,t2,2\n"
        "4,4,23,1,6,t3,3\n"
        "5,6,29,2,6,t4,\n");
}

TEST_CASE("verify csv rows") {
  RunResult r = run_cli("verify --k 3 --bound 60 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "name,pass,witness\n"
        "p_set_matches_pairs,true,\n"
        "no_p_to_p,true,\n"
        "winning_move_audit,true,\n");
}

TEST_CASE("verify passes and reports through json") {
  RunResult r = run_cli("verify --k 2 --bound 80 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::ordered_json::parse(r.output);
  CHECK(parsed["k"] == 2);
  CHECK(parsed["bound"] == 80);
  CHECK(parsed["checks"].size() == 3);
  for (const auto& check : parsed["checks"]) {
    CHECK(check["pass"] == true);
    CHECK(check.contains("name"));
  }
  CHECK(parsed.contains("timings_ms"));
}

TEST_CASE("best output lines") {
  RunResult worked = run_cli("best --k 4 38 185");
  CHECK(worked.exit_code == 0);
  CHECK(worked.output == "position (38,185)\nTypeIII i=2 (20,98) -> (18,87)\n");

  RunResult p_pos = run_cli("best --k 2 1 3");
  CHECK(p_pos.exit_code == 0);
  CHECK(p_pos.output == "position (1,3)\nP-position\n");

  RunResult nim = run_cli("best --k 2 0 5");
  CHECK(nim.output == "position (0,5)\nTypeI (0,5) -> (0,0)\n");

  // unordered input is normalized and echoed
  RunResult swapped = run_cli("best --k 4 185 38");
  CHECK(swapped.output == "position (38,185)\nTypeIII i=2 (20,98) -> (18,87)\n");
}

TEST_CASE("word dump and cross-check") {
  RunResult dump = run_cli("word --k 2 --len 8 --via phi");
  CHECK(dump.exit_code == 0);
  CHECK(dump.output == "sttsttts\n");

  for (const char* via : {"beatty", "phi", "theta"}) {
    RunResult r = run_cli(std::string("word --k 3 --len 50 --via ") + via);
    CHECK(r.exit_code == 0);
  }

  RunResult check = run_cli("word --k 2 --len 10000 --check");
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("3/3 constructions agree") != std::string::npos);

  RunResult degenerate = run_cli("word --k 1 --len 5");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.output == "ststt\n");
}

TEST_CASE("synth verdict") {
  RunResult r = run_cli("synth --k 2 --bound 100");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(2,6) (9,25) (35,96)") != std::string::npos);
  CHECK(r.output.find("matches extra moves: yes") != std::string::npos);

  RunResult empty = run_cli("synth --k 1 --bound 50");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("none") != std::string::npos);
}

TEST_CASE("play: engine finishes from a winnable position") {
  RunResult r = run_piped("", "play --k 2 --x 2 --y 6 --engine-first");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("engine plays TypeIII i=1 (2,6) -> (0,0)") != std::string::npos);
  CHECK(r.output.find("engine wins") != std::string::npos);
}

TEST_CASE("play: user move, malformed input, and game over") {
  RunResult r = run_piped("x y z\n2 6\n", "play --k 2 --x 2 --y 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("could not parse") != std::string::npos);
  CHECK(r.output.find("you play TypeIII i=1 (2,6) -> (0,0)") != std::string::npos);
  CHECK(r.output.find("you win") != std::string::npos);

  RunResult illegal = run_piped("2 5\n0 6\n", "play --k 2 --x 2 --y 6");
  CHECK(illegal.exit_code == 0);
  CHECK(illegal.output.find("illegal move") != std::string::npos);

  RunResult over = run_piped("", "play --k 2 --x 0 --y 0");
  CHECK(over.exit_code == 0);
  CHECK(over.output.find("engine wins") != std::string::npos);
}
