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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "vqsd/io.hpp"

using namespace vqsd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vqsd_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix JSON round-trip is exact") {
  std::mt19937_64 rng(17);
  auto m = testutil::random_matrix(3, 4, rng);
  auto back = io::matrix_from_json(io::matrix_to_json(m));
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK(ComplexMatrix::max_abs_diff(m, back) == 0.0);

  CHECK_THROWS_AS(io::matrix_from_json("{\"rows\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json("not json"), std::invalid_argument);
}

TEST_CASE("density matrix file round-trip") {
  TempDir tmp;
  auto rho = random_density_matrix(3, 0, 21);
  const auto path = tmp.file("rho.json");
  io::write_density_matrix(path, rho, 21);
  auto back = io::read_density_matrix(path);
  CHECK(back.n_qubits() == 3);
  CHECK(ComplexMatrix::max_abs_diff(rho.matrix(), back.matrix()) == 0.0);

  CHECK_THROWS_AS(io::read_density_matrix(tmp.file("missing.json")),
                  std::runtime_error);
}

TEST_CASE("reading a corrupted state file is rejected by validation") {
  TempDir tmp;
  auto rho = random_density_matrix(1, 0, 5);
  const auto path = tmp.file("rho.json");
  io::write_density_matrix(path, rho, 5);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();
  // doubling a diagonal entry breaks the unit trace
  auto doctored = io::matrix_from_json(text);
  doctored(0, 0) *= 2.0;
  std::string body = io::matrix_to_json(doctored);
  body.erase(body.find_last_of('}'));
  std::ofstream out(path);
  out << body << ",\"n_qubits\":1,\"seed\":5}";
  out.close();
  CHECK_THROWS_AS(io::read_density_matrix(path), std::invalid_argument);
}

TEST_CASE("ansatz params file round-trip") {
  TempDir tmp;
  AnsatzParams p;
  p.descriptor = {AnsatzKind::BrickWall, 3, 2};
  p.theta.resize(p.descriptor.param_count());
  for (std::size_t i = 0; i < p.theta.size(); ++i) p.theta[i] = 0.1 * double(i) - 0.7;
  const auto path = tmp.file("params.json");
  io::write_ansatz_params(path, p);
  auto back = io::read_ansatz_params(path);
  CHECK(back.descriptor.kind == AnsatzKind::BrickWall);
  CHECK(back.descriptor.n_qubits == 3);
  CHECK(back.descriptor.blocks == 2);
  REQUIRE(back.theta.size() == p.theta.size());
  for (std::size_t i = 0; i < p.theta.size(); ++i) CHECK(back.theta[i] == p.theta[i]);
}

TEST_CASE("distribution and record writers produce parseable tables") {
  TempDir tmp;
  BasisDistribution dist{2, {0.4, 0.3, 0.2, 0.1}};
  io::write_distribution(tmp.file("dist.tsv"), dist);
  std::ifstream in(tmp.file("dist.tsv"));
  std::string header, row0;
  std::getline(in, header);
  std::getline(in, row0);
  CHECK(header.find('\t') != std::string::npos);
  CHECK(row0.substr(0, 2) == "00");

  TrainRecord rec;
  rec.rows.push_back({0, 0.5, 0.8, 0.01, 0.0});
  rec.rows.push_back({1, 0.6, 0.9, 0.005, 0.1});
  rec.converged = true;
  io::write_train_record(tmp.file("rec.tsv"), rec);
  std::ifstream rin(tmp.file("rec.tsv"));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(rin, line)) ++lines;
  CHECK(lines == 3);  // header + 2 rows
}

TEST_CASE("run config parsing defaults and strictness") {
  auto cfg = io::parse_run_config(R"({
    "experiment": "demo",
    "n_qubits": 3,
    "objective": "local-l",
    "ansatz": {"kind": "brick-wall", "blocks": 4},
    "epochs": 123,
    "learning_rate": 0.02,
    "seed": 7,
    "state": {"seed": 5, "rank": 2}
  })");
  CHECK(cfg.experiment == "demo");
  CHECK(cfg.n_qubits == 3);
  CHECK(cfg.train.objective == ObjectiveKind::LocalL);
  CHECK(cfg.train.ansatz.kind == AnsatzKind::BrickWall);
  CHECK(cfg.train.ansatz.blocks == 4);
  CHECK(cfg.train.epochs == 123);
  CHECK(cfg.train.adam.learning_rate == 0.02);
  CHECK(cfg.train.seed == 7);
  CHECK(cfg.state_rank == 2);
  CHECK(cfg.state_seed == 5);

  CHECK_THROWS_WITH_AS(io::parse_run_config(R"({"n_qubits": 2, "typo_key": 1})"),
                       doctest::Contains("typo_key"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_run_config(R"({"state": {"bogus": 1}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::parse_run_config("["), std::invalid_argument);
}

TEST_CASE("config JSON round-trip preserves the training setup") {
  auto cfg = io::preset_config("fig4");
  auto back = io::parse_run_config(io::run_config_to_json(cfg));
  CHECK(back.n_qubits == cfg.n_qubits);
  CHECK(back.train.objective == cfg.train.objective);
  CHECK(back.train.ansatz.blocks == cfg.train.ansatz.blocks);
  CHECK(back.train.epochs == cfg.train.epochs);
  CHECK(back.train.adam.learning_rate == cfg.train.adam.learning_rate);
  CHECK(back.state_seed == cfg.state_seed);
}

TEST_CASE("presets exist and unknown names are rejected") {
  for (const char* name : {"fig2", "fig3", "fig4", "app-depth-sweep"})
    CHECK_NOTHROW(io::preset_config(name));
  CHECK(io::preset_config("fig3").n_qubits == 1);
  CHECK(io::preset_config("app-depth-sweep").train.objective == ObjectiveKind::LocalL);
  CHECK_THROWS_AS(io::preset_config("fig9"), std::invalid_argument);
}

TEST_CASE("file_stem encodes the run identity") {
  auto cfg = io::preset_config("fig2");
  auto stem = io::file_stem(cfg);
  CHECK(stem.find("fig2") != std::string::npos);
  CHECK(stem.find("n2") != std::string::npos);
  CHECK(stem.find("global-d") != std::string::npos);
}

TEST_CASE("resolve_state honors generator settings") {
  auto cfg = io::preset_config("fig2");
  auto a = io::resolve_state(cfg);
  auto b = io::resolve_state(cfg);
  CHECK(a.n_qubits() == cfg.n_qubits);
  CHECK(ComplexMatrix::max_abs_diff(a.matrix(), b.matrix()) == 0.0);
}

}  // TEST_SUITE
