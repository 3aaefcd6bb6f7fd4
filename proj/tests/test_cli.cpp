#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ratsol/io.hpp"

using namespace ratsol;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RATSOL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_code) {
  const Run r = run(args);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / ("ratsol_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

const char* worked_text = "'4[2],3[1],1[2],2[2],0' --k 3";
const char* seed131_json = R"('{"k":3,"entries":[[0,0],[0,1],[0,1],[0,1],[0,2]]}')";

}  // namespace

TEST_CASE("build reports the worked example and verify accepts it back") {
  const Json out = run_json(std::string("build --with-f --seq ") + worked_text, 0);
  CHECK(out["status"] == "ok");
  const Json& p = out["payload"];
  CHECK(p["mu"] == Json::parse("[14,10,5,8,0]"));
  CHECK(p["a"] == Json::parse(R"(["8","10","-6","16","-34"])"));
  CHECK(p["alpha"] == Json::parse(R"(["-4/3","-5/3","1","-8/3","17/3"])"));
  CHECK(p["wronskians"][0] == "Wr(H1,H2,H4,H7,H8,H11)");
  CHECK(p["verify_chain"]["ok"] == true);

  const auto whole = scratch("whole.json", out.dump());
  CHECK(run_json("verify --solution @" + whole.string(), 0)["status"] == "ok");
  const auto bare = scratch("bare.json", p.dump());
  CHECK(run_json("verify --solution @" + bare.string(), 0)["status"] == "ok");
}

TEST_CASE("a tampered alpha fails and names equation 0") {
  Json p = run_json(std::string("build --seq ") + worked_text, 0)["payload"];
  p["alpha"][0] = "-1/3";
  p["alpha"][1] = "-8/3";
  const auto path = scratch("tampered.json", p.dump());
  const Json out = run_json("verify --solution @" + path.string(), 2);
  CHECK(out["status"] == "verification_failed");
  const Json& failures = out["payload"]["verify_painleve"]["failures"];
  REQUIRE(failures.size() >= 1);
  CHECK(failures[0]["equation"] == 0);
  CHECK(out["payload"]["verify_chain"]["ok"] == true);
}

TEST_CASE("hand-entered s0 seed tuple verifies") {
  // f = (z/3, -1/z, 0, z/3, 1/z + z/3), alpha = (-1/3, 1/3, 0, 1/3, 2/3).
  const char* doc = R"({"k": 3,
    "alpha": ["-1/3", "1/3", "0", "1/3", "2/3"],
    "f": [{"num": ["0", "1/3"], "den": ["1"]},
          {"num": ["-1"], "den": ["0", "1"]},
          {"num": [], "den": ["1"]},
          {"num": ["0", "1/3"], "den": ["1"]},
          {"num": ["3", "0", "1"], "den": ["0", "3"]}]})";
  const auto path = scratch("s0.json", doc);
  CHECK(run_json("verify --solution @" + path.string(), 0)["status"] == "ok");
  Json bad = Json::parse(doc);
  bad["f"][4]["num"][0] = "-3";
  const auto bad_path = scratch("s0bad.json", bad.dump());
  CHECK(run_json("verify --solution @" + bad_path.string(), 2)["status"] == "verification_failed");
}

TEST_CASE("act reproduces both seed panels") {
  const Json s0 = run_json(std::string("act --word s0 --seq ") + seed131_json, 0);
  CHECK(s0["payload"]["result"] == Json::parse(R"({"k":3,"entries":[[0,1],[0,0],[0,1],[0,1],[0,2]]})"));
  const Json s4 = run_json(std::string("act --word s4 --build --seq ") + seed131_json, 0);
  CHECK(s4["payload"]["result"] == Json::parse(R"({"k":3,"entries":[[-1,2],[0,1],[0,1],[0,1],[1,0]]})"));
  CHECK(s4["payload"]["solution"]["alpha"] == Json::parse(R"(["2/3","0","0","2/3","-1/3"])"));
  CHECK(run("act --word s5 --seq " + std::string(seed131_json)).code == 3);
  CHECK(run("act --word q1 --seq " + std::string(seed131_json)).code == 3);
}

TEST_CASE("orbit replays and seed emits the seed tuple") {
  const Json o = run_json(std::string("orbit --seq ") + worked_text, 0);
  CHECK(o["payload"]["replay_ok"] == true);
  CHECK(o["payload"]["signature"] == Json::parse("[1,1,3]"));
  const Json s = run_json("seed --signature 1,3,1", 0);
  CHECK(s["payload"]["painleve"]["alpha"] == Json::parse(R"(["1/3","0","0","1/3","1/3"])"));
  CHECK(s["payload"]["verify_painleve"]["ok"] == true);
  CHECK(run("seed --signature 2,3").code == 3);
}

TEST_CASE("enumerate counts") {
  const Json sig = run_json("enumerate --p 5 --signatures", 0)["payload"];
  CHECK(sig["total"] == 5);
  REQUIRE(sig["groups"].size() == 3);
  CHECK(sig["groups"][0]["count"] == 1);
  CHECK(sig["groups"][1]["count"] == 3);
  CHECK(sig["groups"][2]["count"] == 1);
  CHECK(run_json("enumerate --p 1 --k 1 --bound 0", 0)["payload"]["total"] == 1);

  // Brute force over all coloured sequences of length 3, k = 3, values 0..1.
  long brute = 0;
  for (int code = 0; code < 216; ++code) {
    ColouredSequence s{{}, {}, 3};
    int c = code;
    for (int i = 0; i < 3; ++i) {
      s.values.push_back(c % 2);
      c /= 2;
    }
    for (int i = 0; i < 3; ++i) {
      s.colours.push_back(c % 3);
      c /= 3;
    }
    if (is_oddly_coloured(s) && is_standard(s)) ++brute;
  }
  const Json e = run_json("enumerate --p 3 --k 3 --bound 1", 0)["payload"];
  CHECK(e["total"] == brute);

  const Json v = run_json("--jobs 2 enumerate --p 3 --bound 1 --verify", 0)["payload"];
  CHECK(v["verification"]["ok"] == true);
  CHECK(run("enumerate --p 4 --signatures").code == 3);
  CHECK(run("enumerate --p 3 --k 5 --bound 1").code == 3);
}

TEST_CASE("zeros export and byte stability") {
  const Run csv = run("zeros --generalized-hermite 3 3 --format csv");
  CHECK(csv.code == 0);
  long lines = 0;
  for (char ch : csv.out) lines += ch == '\n';
  CHECK(csv.out.rfind("re,im\n", 0) == 0);
  CHECK(lines == 1 + 9);
  CHECK(run("zeros --generalized-hermite 3 3 --format csv").out == csv.out);
  const Run svg = run("--format svg zeros --okamoto 2 2");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") == 0);
  CHECK(run("--format svg zeros --okamoto 2 2").out == svg.out);
  const Json j = run_json("zeros --hermite 5", 0);
  CHECK(j["payload"]["roots"]["roots"].size() == 5);
  CHECK(run("zeros --hermite 5 --okamoto 1 1").code == 3);
}

TEST_CASE("invalid input exits with 3") {
  CHECK(run("build --seq '1,2' --k 3").code == 3);
  CHECK(run("build --seq '{\"k\":3,\"entries\":[[0,0],[0,0],[0,1]]}'").code == 3);
  CHECK(run("verify --solution '{not json'").code == 3);
  CHECK(run("bogus").code == 3);
  CHECK(run("").code == 3);
  CHECK(run("--help").code == 0);
  CHECK(run("--format csv build --seq " + std::string(worked_text)).code == 3);
}

TEST_CASE("non-standard input is standardized with a notice") {
  const Json out = run_json("build --seq '5[2],4[1],2[2],3[2],1' --k 3", 0);
  CHECK(out["payload"]["mu"] == Json::parse("[14,10,5,8,0]"));
  REQUIRE(out["diagnostics"].size() == 1);
  CHECK(out["diagnostics"][0].get<std::string>().find("not standard") != std::string::npos);
  const Json deg = run_json("build --seq '1,1,0' --k 1", 0);
  CHECK(deg["diagnostics"][0].get<std::string>().find("degenerate") != std::string::npos);
}
