// Copyright 2026 The elwq authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "elwq/json_io.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ELWQ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_test_") + name + ".json";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("payoff: pure quaternion plays") {
  RunResult r = run_cli("payoff --pA e1 --qB e0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5.000000") != std::string::npos);
  CHECK(r.out.find("difference") != std::string::npos);

  RunResult classical = run_cli("payoff --gamma 0 --identity");
  CHECK(classical.exit_code == 0);
  CHECK(classical.out.find("3.000000") != std::string::npos);

  RunResult bob_wins = run_cli("payoff --pA e1 --qB e3");
  CHECK(bob_wins.exit_code == 0);
  CHECK(bob_wins.out.find("0.000000     5.000000") != std::string::npos);
}

TEST_CASE("payoff: bad literals exit 2") {
  CHECK(run_cli("payoff --pA whatever").exit_code == 2);
  CHECK(run_cli("payoff --pA 1,2,3").exit_code == 2);
  CHECK(run_cli("payoff --gamma 9 --identity").exit_code == 2);
}

TEST_CASE("verify: the family point is an equilibrium, the pure pair is not") {
  std::string alice = write_temp(
      "alice", R"({"atoms":[{"w":0.5,"q":[0,1,0,0]},{"w":0.5,"q":[0,0,1,0]}]})");
  std::string bob = write_temp(
      "bob", R"({"atoms":[{"w":0.5,"q":[1,0,0,0]},{"w":0.5,"q":[0,0,0,1]}]})");
  RunResult good = run_cli("--format json verify " + alice + " " + bob);
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"verdict\":true") != std::string::npos);
  CHECK(good.out.find("2.5") != std::string::npos);

  RunResult bad = run_cli("--format json verify e1 e0 --oracle");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"verdict\":false") != std::string::npos);
  CHECK(bad.out.find("\"oracle\"") != std::string::npos);

  std::string broken = write_temp("broken", R"({"atoms":[{"w":0.5}]})");
  CHECK(run_cli("verify " + broken + " " + bob).exit_code == 2);

  std::remove(alice.c_str());
  std::remove(bob.c_str());
  std::remove(broken.c_str());
}

TEST_CASE("family: emits a verified pair; rejects a non-unit rotor") {
  RunResult r = run_cli("family --theta 1.1 --r 0.5,0.5,0.5,0.5 --sign -1 "
                        "--self-verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("equilibrium") != std::string::npos);
  CHECK(run_cli("family --r 1,1,0,0").exit_code == 2);
}

TEST_CASE("classify: filters, formats, exit codes") {
  RunResult n1 = run_cli("--format csv classify --case N1");
  CHECK(n1.exit_code == 0);
  CHECK(n1.out.find("case,params,gap,residual_a,residual_b,verdict") !=
        std::string::npos);
  CHECK(n1.out.find("N1,") != std::string::npos);

  RunResult non_generic = run_cli("--payoffs 1,1,0,2 classify");
  CHECK(non_generic.exit_code == 3);
  CHECK(non_generic.out.find("X0=X1") != std::string::npos);

  RunResult unknown = run_cli("classify --case bogus");
  CHECK(unknown.exit_code == 2);

  RunResult json = run_cli("--format json classify --case N3plus-ii");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("discrepant-with-published-classification") !=
        std::string::npos);
  CHECK(json.out.find("2.25") != std::string::npos);
}

TEST_CASE("round trip: family JSON atoms feed back into verify") {
  using namespace elwq;
  // Rebuild the family strategies through the library, serialize them, and
  // confirm the CLI accepts its own schema.
  auto [mu, nu] = equilibrium_family(0.4, Quaternion::basis(0), +1);
  std::string alice = write_temp("rt_alice", strategy_to_json(mu));
  std::string bob = write_temp("rt_bob", strategy_to_json(nu));
  RunResult r = run_cli("verify " + alice + " " + bob);
  CHECK(r.exit_code == 0);
  std::remove(alice.c_str());
  std::remove(bob.c_str());
}
