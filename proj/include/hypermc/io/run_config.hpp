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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypermc/core/types.hpp"
#include "hypermc/experiments/harness.hpp"
#include "json.hpp"

namespace hypermc::io {

struct SweepBlock {
  exp::Axis axis = exp::Axis::kPMultiple;
  std::vector<double> values;
  int trials = 50;
  std::vector<exp::Variant> variants{exp::Variant::kMch};
  double beta_ratio = 0.25;
};

struct SemiRealBlock {
  std::filesystem::path network;
  int m = 90;
  double gamma = 0.22;
  double theta = 0.1;
  double p = 0.1;
  std::vector<double> q{1.0};
  int trials = 20;
  std::vector<exp::Variant> variants{exp::Variant::kMch, exp::Variant::kGraphOnly,
                                     exp::Variant::kCliqueExpanded};
};

// Validated run configuration. Layer probabilities are resolved to alpha/beta
// whichever form the file used.
struct RunConfig {
  std::uint64_t seed = 0;
  int threads = 1;
  std::filesystem::path out_dir = "out";
  std::string format = "csv";
  std::optional<ModelParams> model;
  std::optional<double> p_multiple;  // p given as a multiple of p*
  exp::SolverSettings solver;
  std::optional<SweepBlock> sweep;
  std::optional<SemiRealBlock> semi_real;
  nlohmann::json source;
  std::filesystem::path base_dir;  // absolute; relative paths in `source` hang off it
};

// JSON when the file ends in .json, the TOML subset otherwise. Relative paths
// inside the file resolve against its directory.
nlohmann::json load_config_file(const std::filesystem::path& path);

// A manifest from run_manifest is accepted too and replays its run. Throws
// ValidationError naming the offending key path, e.g.
// "model.layers.3.alpha: must lie in [0, 1]".
RunConfig parse_run_config(const nlohmann::json& doc,
                           const std::filesystem::path& base_dir = {});

exp::SweepSpec make_sweep_spec(const RunConfig& config);

// Reproducibility record: resolved configuration, seeds and build version.
nlohmann::json run_manifest(const RunConfig& config, std::string_view command);

std::string_view build_version();

}  // namespace hypermc::io
