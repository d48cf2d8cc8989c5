// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcal/demos.hpp"
#include "mcal/expr.hpp"
#include "mcal/inference.hpp"
#include "mcal/mapping.hpp"
#include "mcal/measure.hpp"
#include "mcal/space.hpp"

namespace mcal {

struct IntersectTask {
  std::string nu1, nu2;
  NormalizationMode mode = NormalizationMode::renormalize;
};
struct PushforwardTask {
  std::string measure, mapping;
};
struct PullbackTask {
  std::string measure, mapping;
  NormalizationMode mode = NormalizationMode::renormalize;
};
struct ConditionTask {
  std::string measure;
  std::vector<std::string> cells;
};
struct VerifyCompatTask {
  std::string pi, tau, mapping;
  NormalizationMode mode = NormalizationMode::renormalize;
};
struct InferTask {
  std::string prior, observed, mapping;
  NormalizationMode mode = NormalizationMode::renormalize;
  bool sampled = false;
  SamplerConfig cfg;
};
struct SphereDemoTask {
  std::vector<std::pair<int, int>> resolutions;
  SphereBump f1, f2;
  SamplerConfig cfg;
};
struct ResistanceDemoTask {
  double v0 = 10.0, i0 = 2.0, sigma_v = 0.3, sigma_i = 0.4;
  SamplerConfig cfg;
  int grid_cells = 80;
  double span_sigmas = 5.0;
};
struct SetsDemoTask {
  std::string mapping;
  std::vector<std::string> x_prior, y_obs;
};

using Task = std::variant<IntersectTask, PushforwardTask, PullbackTask, ConditionTask,
                          VerifyCompatTask, InferTask, SphereDemoTask, ResistanceDemoTask,
                          SetsDemoTask>;

/// A fully resolved, schema-validated problem file.
struct ProblemFile {
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, GridMeasure> measures;
  std::map<std::string, std::variant<CellMapping, ExprMapping>> mappings;
  Task task;
};

/// Parses and validates a JSON problem document. The schema is closed:
/// unknown keys, dangling references, and shape mismatches are rejected with
/// the offending location.
ProblemFile parse_problem(const std::string& text);

/// CLI flags applied on top of the file's sampler fields.
struct SamplerOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> streams;
  std::optional<long long> n_samples;
};

struct TaskResult {
  std::vector<std::pair<std::string, std::string>> summary;  // key=value, emitted in order
  std::vector<std::pair<std::string, std::string>> files;    // file name -> contents
};

TaskResult run_problem(const ProblemFile& problem, const SamplerOverrides& overrides = {});

}  // namespace mcal
