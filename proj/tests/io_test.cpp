// Copyright 2026 The hypermc Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "hypermc/error.hpp"
#include "hypermc/io/cli.hpp"
#include "hypermc/io/formats.hpp"
#include "hypermc/io/run_config.hpp"
#include "hypermc/io/toml_lite.hpp"
#include "hypermc/synthgen.hpp"
#include "json.hpp"

namespace hypermc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

// ------------------------------------------------------------ hyperedge lists

TEST(HyperedgeList, RoutesBySize) {
  const auto net = io::parse_hyperedge_list("1 2 3\n1 2\n");
  EXPECT_EQ(net.bundle.n(), 3);
  EXPECT_EQ(net.bundle.layer(3).edge_list(), (std::vector<std::vector<int>>{{0, 1, 2}}));
  EXPECT_EQ(net.bundle.layer(2).edge_list(), (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_FALSE(net.labels.has_value());
  EXPECT_EQ(net.duplicates, 0);
}

TEST(HyperedgeList, CollapsesDuplicates) {
  const auto net = io::parse_hyperedge_list("1 2\n2 1\n# note\n\n3 1\n");
  EXPECT_EQ(net.bundle.layer(2).size(), 2u);
  EXPECT_EQ(net.duplicates, 1);
}

TEST(HyperedgeList, DirectivesAndLabels) {
  const auto net = io::parse_hyperedge_list(
      "# hypermc-format v1\n#nodes 5\n1 2\n#labels\n1 A\n2 A\n3 B\n4 B\n5 C\n");
  EXPECT_EQ(net.bundle.n(), 5);
  ASSERT_TRUE(net.labels.has_value());
  EXPECT_EQ(net.labels->K(), 3);
  EXPECT_EQ(net.labels->label(4), 2);
  EXPECT_EQ(net.class_names, (std::vector<std::string>{"A", "B", "C"}));
  const auto numeric = io::parse_hyperedge_list("1 2\n#labels\n1 2\n2 1\n");
  EXPECT_EQ(numeric.labels->label(0), 1);
  EXPECT_EQ(numeric.labels->label(1), 0);
}

TEST(HyperedgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(message_of([] { io::parse_hyperedge_list("1 2\n1 x\n"); }).rfind("line 2:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_hyperedge_list("1 2\n\n0 1\n"); }).rfind("line 3:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_hyperedge_list("4\n"); }).rfind("line 1:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_hyperedge_list("1 1 2\n"); }).rfind("line 1:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_hyperedge_list("#nodes 2\n1 3\n"); }).rfind("line 2:", 0), 0u);
  EXPECT_NE(message_of([] { io::parse_hyperedge_list("1 2\n#labels\n1 A\n"); }), "");
  EXPECT_THROW(io::parse_hyperedge_list("1 2.5\n"), io::ParseError);
}

TEST(HyperedgeList, RoundTrip) {
  ModelParams p;
  p.n = 30;
  p.m = 5;
  p.K = 3;
  p.theta = 0.1;
  p.p = 0.5;
  p.gamma = 0.2;
  p.W = 4;
  p.alpha = {{2, 0.3}, {3, 0.05}, {4, 0.01}};
  p.beta = {{2, 0.05}, {3, 0.002}, {4, 0.0}};
  const auto inst = synth::gen_instance(p, GenSeed{1, 1});
  const auto text = io::format_hyperedge_list(inst.bundle, inst.clusters);
  const auto back = io::parse_hyperedge_list(text);
  EXPECT_EQ(back.bundle.total_edges(), inst.bundle.total_edges());
  for (const auto& [d, layer] : inst.bundle.layers()) {
    if (!layer.empty()) {
      EXPECT_EQ(back.bundle.layer(d).edge_list(), layer.edge_list());
    }
  }
  EXPECT_TRUE(*back.labels == inst.clusters);
  EXPECT_EQ(io::format_hyperedge_list(back.bundle, back.labels), text);
}

TEST(CliqueExpand, Examples) {
  const auto tri = io::clique_expand(io::parse_hyperedge_list("1 2 3\n").bundle);
  EXPECT_EQ(tri.W(), 2);
  EXPECT_EQ(tri.layer(2).edge_list(), (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
  const auto graph = io::parse_hyperedge_list("1 2\n2 3\n").bundle;
  EXPECT_TRUE(io::clique_expand(graph) == graph);
  const auto merged = io::clique_expand(io::parse_hyperedge_list("1 2 3\n1 2\n").bundle);
  EXPECT_EQ(merged.layer(2).size(), 3u);
  const auto quad = io::clique_expand(io::parse_hyperedge_list("1 2 3 4\n").bundle);
  EXPECT_EQ(quad.layer(2).size(), 6u);
}

// ---------------------------------------------------------------- matrices

TEST(MatrixIo, ObservedExamplesAndRoundTrip) {
  const auto u = io::parse_observed("2 2\n+1 *\n-1 +1\n");
  EXPECT_EQ(u.observed_count(), 3);
  EXPECT_EQ(u.at(1, 0), Entry::kMinus);
  EXPECT_EQ(u.at(0, 1), Entry::kMissing);

  std::mt19937_64 rng(91);
  ModelParams p;
  p.n = 20;
  p.m = 13;
  p.K = 2;
  p.theta = 0.2;
  p.p = 0.4;
  p.gamma = 0.3;
  const auto inst = synth::gen_instance(p, GenSeed{9, 0});
  const auto text = io::format_observed(inst.observed);
  EXPECT_TRUE(io::parse_observed(text) == inst.observed);
  EXPECT_EQ(io::format_observed(io::parse_observed(text)), text);
  const auto dense = inst.ratings.dense();
  EXPECT_TRUE(io::parse_completed(io::format_completed(dense)) == dense);
  EXPECT_TRUE(io::parse_observed("# hypermc-format v1\n1 1\n+1") == io::parse_observed("1 1\n+1\n"));
}

TEST(MatrixIo, ErrorsNameTheCell) {
  EXPECT_NE(message_of([] { io::parse_completed("1 2\n+1 *\n"); }).find("(1, 2)"), std::string::npos);
  EXPECT_NE(message_of([] { io::parse_observed("1 2\n+1 2\n"); }).find("(1, 2)"), std::string::npos);
  EXPECT_THROW(io::parse_observed("2 2\n+1 *\n"), ValidationError);
  EXPECT_THROW(io::parse_observed("1 2\n+1 * -1\n"), ValidationError);
  EXPECT_THROW(io::parse_observed("1 x\n"), ValidationError);
  EXPECT_THROW(io::parse_observed(""), ValidationError);
}

TEST(ClusterIo, RoundTripAndErrors) {
  const ClusterAssignment c(3, {2, 0, 1, 1});
  const auto text = io::format_clusters(c);
  EXPECT_TRUE(io::parse_clusters(text) == c);
  EXPECT_THROW(io::parse_clusters("1 1\n3 2\n"), ValidationError);
  EXPECT_THROW(io::parse_clusters("1 0\n"), ValidationError);
}

TEST(Files, MissingFileIsAValidationError) {
  EXPECT_THROW(io::read_file("/nonexistent/hypermc/file.txt"), ValidationError);
}

// ---------------------------------------------------------------- TOML subset

TEST(TomlLite, ParsesTheSubset) {
  const auto j = io::parse_toml_lite(R"(# comment
seed = 42
name = "a \"b\" c"  # trailing
[model]
theta = 0.1
flag = true
values = [0.4, 0.6,
          1e-3]   # spans lines
[model.layers.3]
quality_hat = 2
"quoted.key" = -7
a.b = 'lit'
)");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["name"], "a \"b\" c");
  EXPECT_DOUBLE_EQ(j["model"]["theta"].get<double>(), 0.1);
  EXPECT_EQ(j["model"]["flag"], true);
  EXPECT_EQ(j["model"]["values"].size(), 3u);
  EXPECT_DOUBLE_EQ(j["model"]["values"][2].get<double>(), 1e-3);
  EXPECT_EQ(j["model"]["layers"]["3"]["quality_hat"], 2);
  EXPECT_EQ(j["model"]["layers"]["3"]["quoted.key"], -7);
  EXPECT_EQ(j["model"]["layers"]["3"]["a"]["b"], "lit");
}

TEST(TomlLite, RejectsWithLineNumbers) {
  EXPECT_EQ(message_of([] { io::parse_toml_lite("a = 1\na = 2\n"); }).rfind("line 2:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_toml_lite("[t]\n[t]\n"); }).rfind("line 2:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_toml_lite("x = \n"); }).rfind("line 1:", 0), 0u);
  EXPECT_EQ(message_of([] { io::parse_toml_lite("x = [1, 2\n"); }).rfind("line 2:", 0), 0u);
  EXPECT_THROW(io::parse_toml_lite("x = \"open\n"), io::ParseError);
  EXPECT_THROW(io::parse_toml_lite("[[arr]]\n"), io::ParseError);
  EXPECT_THROW(io::parse_toml_lite("just words\n"), io::ParseError);
}

// ---------------------------------------------------------------- RunConfig

json base_config() {
  return json::parse(R"({
    "seed": 3,
    "model": {"n": 30, "m": 20, "K": 3, "theta": 0.1, "gamma": 0.25, "p": 0.3,
              "layers": {"2": {"alpha": 0.3, "beta": 0.05},
                         "3": {"quality_hat": 2.0, "beta_ratio": 0.25}}},
    "sweep": {"axis": "p", "values": [0.2, 0.4], "trials": 2, "variants": ["mch", "graph_only"]}
  })");
}

TEST(RunConfig, ResolvesLayersAndSweep) {
  const auto cfg = io::parse_run_config(base_config());
  ASSERT_TRUE(cfg.model.has_value());
  EXPECT_EQ(cfg.model->W, 3);
  const auto l3 = synth::layer_from_quality(30, 3, 2.0, 0.25);
  EXPECT_EQ(cfg.model->alpha.at(3), l3.alpha);
  EXPECT_EQ(cfg.model->beta.at(3), l3.beta);
  EXPECT_EQ(cfg.solver.weights, exp::WeightSource::kTrue);
  const auto spec = io::make_sweep_spec(cfg);
  EXPECT_EQ(spec.master_seed, 3u);
  EXPECT_EQ(spec.values, (std::vector<double>{0.2, 0.4}));
  EXPECT_EQ(spec.variants.size(), 2u);

  auto hat = base_config();
  hat["model"]["layers"]["2"] = {{"alpha_hat", 2.0}, {"beta_hat", 0.5}};
  const auto h = io::parse_run_config(hat);
  EXPECT_NEAR(h.model->alpha.at(2), synth::scale_normalized(30, 2, 2.0), 1e-15);
  EXPECT_NEAR(h.model->beta.at(2), synth::scale_normalized(30, 2, 0.5), 1e-15);
}

TEST(RunConfig, ErrorsNameTheKeyPath) {
  const auto expect_path = [](json doc, const std::string& path) {
    const auto msg = message_of([&] { io::parse_run_config(doc); });
    EXPECT_EQ(msg.rfind(path + ":", 0), 0u) << msg;
  };
  auto d = base_config();
  d["model"]["theta"] = 0.7;
  expect_path(d, "model.theta");
  d = base_config();
  d["model"]["layers"]["2"]["alpha"] = 1.5;
  expect_path(d, "model.layers.2.alpha");
  d = base_config();
  d["model"]["colour"] = 1;
  expect_path(d, "model.colour");
  d = base_config();
  d["sweep"]["axis"] = "q";
  expect_path(d, "sweep.axis");
  d = base_config();
  d["sweep"]["variants"] = json::array({"mch", "nope"});
  expect_path(d, "sweep.variants[1]");
  d = base_config();
  d["model"].erase("n");
  expect_path(d, "model.n");
  d = base_config();
  d["seed"] = -1;
  expect_path(d, "seed");
  d = base_config();
  d["model"]["p_multiple"] = 1.0;
  expect_path(d, "model.p_multiple");
  d = base_config();
  d["model"]["n"] = 31;
  EXPECT_THROW(io::parse_run_config(d), ValidationError);
}

TEST(RunConfig, ManifestReplaysTheRun) {
  auto doc = base_config();
  const auto cfg = io::parse_run_config(doc);
  auto manifest = io::run_manifest(cfg, "sweep");
  EXPECT_EQ(manifest["master_seed"], 3);
  EXPECT_FALSE(manifest.dump().find("time") != std::string::npos);
  manifest["master_seed"] = 11;
  const auto again = io::parse_run_config(manifest);
  EXPECT_EQ(again.seed, 11u);
  EXPECT_EQ(again.model->alpha, cfg.model->alpha);
  EXPECT_EQ(io::run_manifest(again, "sweep")["config"], manifest["config"]);
}

// ---------------------------------------------------------------- CLI

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hypermc");
  std::ostringstream out, err;
  CliRun r;
  r.status = io::cli_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hypermc_io_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path write(const std::string& name, const std::string& text) {
    io::write_file(dir_ / name, text);
    return dir_ / name;
  }
  std::string read(const fs::path& p) { return io::read_file(p); }
  fs::path dir_;
};

const char* kConfig = R"(seed = 5
[model]
n = 24
m = 12
K = 2
theta = 0.1
gamma = 0.25
p = 0.5
[model.layers.2]
alpha = 0.4
beta = 0.05
[model.layers.3]
alpha = 0.05
beta = 0.002
[sweep]
axis = "p_multiple"
values = [0.5, 1.5]
trials = 3
variants = ["mch", "graph_only", "clique_expanded"]
)";

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  const auto r = run_cli({"frobnicate"});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run_cli({}).status, 1);
  EXPECT_EQ(run_cli({"threshold", "--bogus"}).status, 1);
}

TEST_F(CliTest, ThresholdPrintsPStarAndGain) {
  const auto cfg = write("t.toml", R"([model]
n = 1000
m = 500
K = 4
theta = 0.0
gamma = 0.2
p = 0.1
)");
  const auto r = run_cli({"--config", cfg.string(), "threshold"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("p_star,"), std::string::npos);
  EXPECT_NE(r.out.find("g_star,"), std::string::npos);
  const auto j = run_cli({"--config", cfg.string(), "--format", "json", "threshold"});
  ASSERT_EQ(j.status, 0) << j.err;
  const auto parsed = json::parse(j.out);
  EXPECT_NEAR(parsed["p_star"].get<double>(), std::log(1000.0) / 100.0, 1e-12);
}

TEST_F(CliTest, GenerateThenSolve) {
  const auto cfg = write("c.toml", kConfig);
  const auto out = dir_ / "gen";
  ASSERT_EQ(run_cli({"--config", cfg.string(), "--out", out.string(), "generate"}).status, 0);
  for (const char* f : {"observed.txt", "truth.txt", "network.txt", "clusters.txt", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto solved = dir_ / "solved";
  const auto r = run_cli({"--out", solved.string(), "solve", "--observed", (out / "observed.txt").string(),
                          "--network", (out / "network.txt").string(), "--K", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto completed = io::parse_completed(read(solved / "completed.txt"));
  EXPECT_EQ(completed.n(), 24);
  EXPECT_EQ(completed.m(), 12);
  EXPECT_EQ(io::parse_clusters(read(solved / "clusters.txt")).n(), 24);
  EXPECT_TRUE(json::parse(read(solved / "solve.json")).is_object());
}

TEST_F(CliTest, SolveRejectsMismatchedSizes) {
  const auto u = write("u.txt", "3 2\n+1 *\n-1 +1\n* *\n");
  const auto net = write("n.txt", "#nodes 4\n1 2\n3 4\n");
  const auto r = run_cli({"solve", "--observed", u.string(), "--network", net.string(), "--K", "2"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("4"), std::string::npos);
  EXPECT_NE(r.err.find("3"), std::string::npos);
  EXPECT_NE(r.err.find("n ="), std::string::npos);
}

TEST_F(CliTest, SweepIsDeterministicAndReplayable) {
  const auto cfg = write("c.toml", kConfig);
  const auto a = dir_ / "a", b = dir_ / "b", c = dir_ / "c";
  ASSERT_EQ(run_cli({"--config", cfg.string(), "--out", a.string(), "sweep"}).status, 0);
  ASSERT_EQ(run_cli({"--config", cfg.string(), "--out", b.string(), "--threads", "2", "sweep"}).status, 0);
  EXPECT_EQ(read(a / "sweep.csv"), read(b / "sweep.csv"));
  EXPECT_EQ(read(a / "manifest.json"), read(b / "manifest.json"));
  ASSERT_EQ(run_cli({"--config", (a / "manifest.json").string(), "--out", c.string(), "sweep"}).status, 0);
  EXPECT_EQ(read(a / "sweep.csv"), read(c / "sweep.csv"));
  EXPECT_EQ(read(a / "manifest.json"), read(c / "manifest.json"));
  const auto other = dir_ / "other";
  ASSERT_EQ(run_cli({"--config", cfg.string(), "--seed", "6", "--out", other.string(), "sweep"}).status, 0);
  EXPECT_NE(read(a / "sweep.csv"), read(other / "sweep.csv"));
}

TEST_F(CliTest, ExpandAndDegrade) {
  const auto net = write("n.txt", "1 2 3\n3 4\n#labels\n1 1\n2 1\n3 2\n4 2\n");
  ASSERT_EQ(run_cli({"--out", dir_.string(), "expand", "--network", net.string()}).status, 0);
  const auto expanded = io::parse_hyperedge_list(read(dir_ / "expanded.txt"));
  EXPECT_EQ(expanded.bundle.layer(2).size(), 4u);
  ASSERT_EQ(run_cli({"--out", dir_.string(), "degrade", "--network", net.string(), "--q", "0"}).status, 0);
  EXPECT_EQ(io::parse_hyperedge_list(read(dir_ / "degraded.txt")).bundle.total_edges(), 0u);
  EXPECT_EQ(run_cli({"degrade", "--network", net.string(), "--q", "2"}).status, 1);
  EXPECT_EQ(run_cli({"expand", "--network", (dir_ / "missing.txt").string()}).status, 1);
}

TEST_F(CliTest, OracleCheckReportsAttainment) {
  const auto r = run_cli({"--out", dir_.string(), "--seed", "2", "oracle-check", "--trials", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("attained"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "oracle_check.csv"));
}

// ---------------------------------------------------------------- dataset

TEST(Dataset, ContactHighSchoolShape) {
  const auto net = io::parse_hyperedge_list(
      io::read_file(fs::path(HYPERMC_SOURCE_DIR) / "data" / "contact-high-school.txt"));
  EXPECT_EQ(net.bundle.n(), 327);
  EXPECT_EQ(net.bundle.layer(2).size(), 5498u);
  std::size_t higher = 0;
  for (const auto& [d, layer] : net.bundle.layers()) {
    if (d >= 3) higher += layer.size();
  }
  EXPECT_EQ(higher, 2320u);
  EXPECT_EQ(net.bundle.W(), 5);
  ASSERT_TRUE(net.labels.has_value());
  EXPECT_EQ(net.labels->K(), 9);
  EXPECT_EQ(net.duplicates, 0);
}

}  // namespace
}  // namespace hypermc
