// Copyright 2026-present the vqsd project
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

#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <string>

#include "doctest.h"
#include "vqsd/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_binary;

struct RunOutput {
  int exit_code = -1;
  std::string output;  // stdout + stderr combined
};

RunOutput run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutput out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
    out.output.append(buf, n);
  const int status = ::pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vqsd_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("no arguments and bad subcommands exit with usage errors") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("gen-state") != std::string::npos);
  CHECK(help.output.find("depth-sweep") != std::string::npos);
}

TEST_CASE("gen-state writes a valid state and is seed-deterministic") {
  TempDir tmp;
  const auto a = tmp.file("a.json");
  const auto b = tmp.file("b.json");
  CHECK(run_cli("gen-state -n 3 --seed 5 --out " + a).exit_code == 0);
  CHECK(run_cli("gen-state -n 3 --seed 5 --out " + b).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  auto rho = vqsd::io::read_density_matrix(a);
  CHECK(rho.n_qubits() == 3);

  const auto c = tmp.file("c.json");
  CHECK(run_cli("gen-state -n 3 --seed 6 --out " + c).exit_code == 0);
  CHECK(slurp(a) != slurp(c));

  CHECK(run_cli("gen-state --seed 5 --out " + a).exit_code == 1);  // -n missing
  CHECK(run_cli("gen-state -n 3 --rank 20 --out " + a).exit_code == 1);
}

TEST_CASE("gen-state reports purity on stdout") {
  TempDir tmp;
  auto out = run_cli("gen-state -n 2 --rank 1 --seed 9 --out " + tmp.file("p.json"));
  CHECK(out.exit_code == 0);
  CHECK(out.output.find("purity") != std::string::npos);
  // a rank-1 state is pure
  CHECK(out.output.find("1.0000") != std::string::npos);
}

TEST_CASE("train with the single-qubit preset converges and writes outputs") {
  TempDir tmp;
  auto out = run_cli("train --preset fig3 --out " + tmp.path.string());
  CHECK(out.exit_code == 0);
  bool saw_record = false, saw_params = false, saw_verify = false;
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    const auto name = e.path().filename().string();
    saw_record |= name.find("_record.tsv") != std::string::npos;
    saw_params |= name.find("_params.json") != std::string::npos;
    saw_verify |= name.find("_verify.json") != std::string::npos;
  }
  CHECK(saw_record);
  CHECK(saw_params);
  CHECK(saw_verify);
}

TEST_CASE("train accepts a config file and rejects malformed ones") {
  TempDir tmp;
  const auto cfg = tmp.file("run.json");
  {
    std::ofstream f(cfg);
    f << R"({"experiment":"t","n_qubits":1,"objective":"single-qubit-pi",
            "ansatz":{"kind":"brick-wall","blocks":1},
            "epochs":400,"learning_rate":0.05,"seed":2,
            "state":{"seed":3}})";
  }
  CHECK(run_cli("train --config " + cfg + " --out " + tmp.path.string())
            .exit_code == 0);

  const auto bad = tmp.file("bad.json");
  {
    std::ofstream f(bad);
    f << R"({"n_qubits":1,"learning_rte":0.05})";
  }
  auto out = run_cli("train --config " + bad + " --out " + tmp.path.string());
  CHECK(out.exit_code == 1);
  CHECK(out.output.find("learning_rte") != std::string::npos);

  CHECK(run_cli("train --config " + tmp.file("absent.json")).exit_code == 1);
  CHECK(run_cli("train --preset nope").exit_code == 1);
}

TEST_CASE("verify judges saved parameters against a saved state") {
  TempDir tmp;
  const auto state = tmp.file("rho.json");
  REQUIRE(run_cli("gen-state -n 1 --seed 4 --out " + state).exit_code == 0);

  auto rho = vqsd::io::read_density_matrix(state);
  const auto good = tmp.file("good.json");
  vqsd::io::write_ansatz_params(good, vqsd::exact_diagonalizer_params(rho));
  auto ok = run_cli("verify " + state + " " + good);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);

  vqsd::AnsatzParams idle;
  idle.descriptor = {vqsd::AnsatzKind::BrickWall, 1, 1};
  idle.theta.assign(3, 0.0);
  const auto bad = tmp.file("bad.json");
  vqsd::io::write_ansatz_params(bad, idle);
  auto fail = run_cli("verify " + state + " " + bad);
  CHECK(fail.exit_code == 2);
  CHECK(fail.output.find("FAIL") != std::string::npos);
}

TEST_CASE("depth-sweep requires the layered circuit family") {
  TempDir tmp;
  const auto cfg = tmp.file("uni.json");
  {
    std::ofstream f(cfg);
    f << R"({"experiment":"u","n_qubits":2,"objective":"local-l",
            "ansatz":{"kind":"universal-pauli"},
            "epochs":10,"state":{"seed":1}})";
  }
  CHECK(run_cli("depth-sweep --config " + cfg).exit_code == 1);
}

TEST_CASE("depth-sweep on a tiny setup writes the stage table") {
  TempDir tmp;
  const auto cfg = tmp.file("sweep.json");
  {
    std::ofstream f(cfg);
    f << R"({"experiment":"mini","n_qubits":1,"objective":"local-l",
            "ansatz":{"kind":"brick-wall","blocks":1},
            "epochs":300,"learning_rate":0.05,"seed":2,
            "state":{"seed":8},
            "depth":{"m_start":1,"m_step":1,"m_max":3,"tau_depth":1e-6}})";
  }
  auto out = run_cli("depth-sweep --config " + cfg + " --out " + tmp.path.string());
  CHECK(out.exit_code == 0);
  bool saw_sweep = false;
  for (const auto& e : fs::directory_iterator(tmp.path))
    saw_sweep |= e.path().filename().string().find("_sweep.tsv") != std::string::npos;
  CHECK(saw_sweep);
}

}  // TEST_SUITE

int main(int argc, char** argv) {
  doctest::Context ctx;
  int first_own = argc;
  for (int i = 1; i < argc; ++i)
    if (argv[i][0] != '-') {
      g_binary = argv[i];
      for (int j = i; j + 1 < argc; ++j) argv[j] = argv[j + 1];
      --argc;
      break;
    }
  (void)first_own;
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: cli_tests <path-to-vqsd-binary> [doctest args]\n");
    return 1;
  }
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
