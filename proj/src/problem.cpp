// SPDX-License-Identifier: Apache-2.0
#include "mcal/problem.hpp"

#include <json.hpp>

#include "mcal/csv.hpp"

namespace mcal {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  fail(parse_errc::schema_violation, where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) fail(parse_errc::unknown_key, where + ": unknown key '" + key + "'");
  }
}

const json& require_key(const json& obj, const std::string& where, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

double require_number(const json& value, const std::string& where) {
  if (!value.is_number()) schema_fail(where, "expected a number");
  return value.get<double>();
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) schema_fail(where, "expected a string");
  return value.get<std::string>();
}

std::vector<double> require_number_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : value) out.push_back(require_number(v, where));
  return out;
}

std::vector<std::string> require_string_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) out.push_back(require_string(v, where));
  return out;
}

NormalizationMode parse_mode(const json& obj, const std::string& where) {
  if (!obj.contains("mode")) return NormalizationMode::renormalize;
  const std::string mode = require_string(obj["mode"], where + ".mode");
  if (mode == "renormalize") return NormalizationMode::renormalize;
  if (mode == "unit_constant") return NormalizationMode::unit_constant;
  schema_fail(where + ".mode", "expected 'renormalize' or 'unit_constant', got '" + mode + "'");
}

SamplerConfig parse_sampler_fields(const json& obj, const std::string& where,
                                   long long default_n) {
  SamplerConfig cfg;
  cfg.seed = obj.contains("seed")
                 ? static_cast<std::uint64_t>(require_number(obj["seed"], where + ".seed"))
                 : 0;
  cfg.streams = obj.contains("streams")
                    ? static_cast<int>(require_number(obj["streams"], where + ".streams"))
                    : 4;
  cfg.n_samples = obj.contains("n")
                      ? static_cast<long long>(require_number(obj["n"], where + ".n"))
                      : default_n;
  if (obj.contains("k")) {
    if (obj["k"].is_string()) {
      if (obj["k"].get<std::string>() != "auto")
        schema_fail(where + ".k", "expected a positive number or 'auto'");
    } else {
      cfg.acceptance_scale = require_number(obj["k"], where + ".k");
    }
  }
  return cfg;
}

SpacePtr parse_space(const std::string& name, const json& block) {
  const std::string where = "spaces." + name;
  if (!block.is_object()) schema_fail(where, "expected an object");
  if (block.contains("log_edges")) {
    reject_unknown_keys(block, where, {"log_edges"});
    const auto edges = require_number_array(block["log_edges"], where + ".log_edges");
    return log_interval_space(
        name, Eigen::Map<const Eigen::ArrayXd>(edges.data(),
                                               static_cast<Eigen::Index>(edges.size())));
  }
  reject_unknown_keys(block, where, {"labels", "volumes"});
  auto labels = require_string_array(require_key(block, where, "labels"), where + ".labels");
  auto volumes = require_number_array(require_key(block, where, "volumes"), where + ".volumes");
  if (labels.size() != volumes.size())
    schema_fail(where, std::to_string(labels.size()) + " labels vs " +
                           std::to_string(volumes.size()) + " volumes");
  return make_space(name, std::move(labels),
                    Eigen::Map<const Eigen::ArrayXd>(
                        volumes.data(), static_cast<Eigen::Index>(volumes.size())));
}

const SpacePtr& resolve_space(const ProblemFile& problem, const std::string& name,
                              const std::string& where) {
  const auto it = problem.spaces.find(name);
  if (it == problem.spaces.end())
    fail(parse_errc::unresolved_reference, where + ": space '" + name + "' is not defined");
  return it->second;
}

CellSet cellset_from_labels(const SpacePtr& space, const std::vector<std::string>& labels,
                            const std::string& where) {
  std::vector<Eigen::Index> members;
  for (const auto& label : labels) {
    const Eigen::Index c = space->index_of(label);
    if (c < 0)
      fail(parse_errc::unresolved_reference,
           where + ": cell '" + label + "' is not in space '" + space->id() + "'");
    members.push_back(c);
  }
  return CellSet(space, std::move(members));
}

GridMeasure parse_measure(const ProblemFile& problem, const std::string& name,
                          const json& block) {
  const std::string where = "measures." + name;
  if (!block.is_object()) schema_fail(where, "expected an object");
  const std::string space_name =
      require_string(require_key(block, where, "space"), where + ".space");
  const SpacePtr& space = resolve_space(problem, space_name, where + ".space");

  if (block.contains("density")) {
    reject_unknown_keys(block, where, {"space", "density", "kind"});
    const auto values = require_number_array(block["density"], where + ".density");
    if (static_cast<Eigen::Index>(values.size()) != space->cell_count())
      schema_fail(where + ".density",
                  std::to_string(values.size()) + " entries for " +
                      std::to_string(space->cell_count()) + " cells of '" + space_name + "'");
    MeasureKind kind = MeasureKind::raw;
    if (block.contains("kind")) {
      const std::string k = require_string(block["kind"], where + ".kind");
      if (k == "probability")
        kind = MeasureKind::probability;
      else if (k != "raw")
        schema_fail(where + ".kind", "expected 'raw' or 'probability', got '" + k + "'");
    }
    return GridMeasure(space,
                       Eigen::Map<const Eigen::ArrayXd>(
                           values.data(), static_cast<Eigen::Index>(values.size())),
                       kind);
  }
  if (block.contains("uniform")) {
    reject_unknown_keys(block, where, {"space", "uniform"});
    if (!block["uniform"].is_boolean() || !block["uniform"].get<bool>())
      schema_fail(where + ".uniform", "expected true");
    return uniform_probability(space);
  }
  if (block.contains("set")) {
    reject_unknown_keys(block, where, {"space", "set", "mode"});
    const auto labels = require_string_array(block["set"], where + ".set");
    return measure_set(space, cellset_from_labels(space, labels, where + ".set"),
                       parse_mode(block, where));
  }
  if (block.contains("lognormal")) {
    reject_unknown_keys(block, where, {"space", "lognormal"});
    const json& params = block["lognormal"];
    if (!params.is_object()) schema_fail(where + ".lognormal", "expected an object");
    reject_unknown_keys(params, where + ".lognormal", {"center", "sigma"});
    const double center =
        require_number(require_key(params, where + ".lognormal", "center"), where);
    const double sigma =
        require_number(require_key(params, where + ".lognormal", "sigma"), where);
    if (!space->has_edges())
      schema_fail(where + ".lognormal",
                  "space '" + space_name + "' is not a gridded axis (needs log_edges)");
    return lognormal_on_log_axis(space, center, sigma);
  }
  schema_fail(where, "expected one of 'density', 'uniform', 'set', 'lognormal'");
}

std::variant<CellMapping, ExprMapping> parse_mapping(const ProblemFile& problem,
                                                     const std::string& name,
                                                     const json& block) {
  const std::string where = "mappings." + name;
  if (!block.is_object()) schema_fail(where, "expected an object");
  if (block.contains("expr")) {
    reject_unknown_keys(block, where, {"inputs", "output", "expr"});
    auto inputs = require_string_array(require_key(block, where, "inputs"), where + ".inputs");
    std::string output = block.contains("output")
                             ? require_string(block["output"], where + ".output")
                             : std::string("y");
    const std::string source = require_string(block["expr"], where + ".expr");
    return ExprMapping(std::move(inputs), {{std::move(output), source}});
  }
  reject_unknown_keys(block, where, {"domain", "codomain", "map"});
  const SpacePtr& domain = resolve_space(
      problem, require_string(require_key(block, where, "domain"), where + ".domain"),
      where + ".domain");
  const SpacePtr& codomain = resolve_space(
      problem, require_string(require_key(block, where, "codomain"), where + ".codomain"),
      where + ".codomain");
  const auto targets = require_string_array(require_key(block, where, "map"), where + ".map");
  if (static_cast<Eigen::Index>(targets.size()) != domain->cell_count())
    schema_fail(where + ".map", std::to_string(targets.size()) + " entries for " +
                                    std::to_string(domain->cell_count()) + " domain cells");
  std::vector<Eigen::Index> table;
  for (const auto& label : targets) {
    const Eigen::Index c = codomain->index_of(label);
    if (c < 0)
      fail(parse_errc::unresolved_reference,
           where + ".map: cell '" + label + "' is not in space '" + codomain->id() + "'");
    table.push_back(c);
  }
  return CellMapping(domain, codomain, std::move(table));
}

const GridMeasure& resolve_measure(const ProblemFile& problem, const std::string& name,
                                   const std::string& where) {
  const auto it = problem.measures.find(name);
  if (it == problem.measures.end())
    fail(parse_errc::unresolved_reference, where + ": measure '" + name + "' is not defined");
  return it->second;
}

const std::variant<CellMapping, ExprMapping>& resolve_mapping(const ProblemFile& problem,
                                                              const std::string& name,
                                                              const std::string& where) {
  const auto it = problem.mappings.find(name);
  if (it == problem.mappings.end())
    fail(parse_errc::unresolved_reference, where + ": mapping '" + name + "' is not defined");
  return it->second;
}

const CellMapping& resolve_cell_mapping(const ProblemFile& problem, const std::string& name,
                                        const std::string& where) {
  const auto& variant = resolve_mapping(problem, name, where);
  if (const auto* cell = std::get_if<CellMapping>(&variant)) return *cell;
  fail(parse_errc::schema_violation,
       where + ": mapping '" + name + "' must be a cell table, not an expression");
}

Task parse_task(const ProblemFile& problem, const json& block) {
  const std::string where = "task";
  if (!block.is_object()) schema_fail(where, "expected an object");
  const std::string type = require_string(require_key(block, where, "type"), where + ".type");

  const auto measure_name = [&](const char* key) {
    const std::string name = require_string(require_key(block, where, key),
                                            where + "." + key);
    (void)resolve_measure(problem, name, where + "." + key);
    return name;
  };
  const auto mapping_name = [&](const char* key) {
    const std::string name = require_string(require_key(block, where, key),
                                            where + "." + key);
    (void)resolve_mapping(problem, name, where + "." + key);
    return name;
  };

  if (type == "intersect") {
    reject_unknown_keys(block, where, {"type", "nu1", "nu2", "mode"});
    return IntersectTask{measure_name("nu1"), measure_name("nu2"), parse_mode(block, where)};
  }
  if (type == "pushforward") {
    reject_unknown_keys(block, where, {"type", "measure", "mapping"});
    PushforwardTask task{measure_name("measure"), mapping_name("mapping")};
    (void)resolve_cell_mapping(problem, task.mapping, where + ".mapping");
    return task;
  }
  if (type == "pullback") {
    reject_unknown_keys(block, where, {"type", "measure", "mapping", "mode"});
    PullbackTask task{measure_name("measure"), mapping_name("mapping"),
                      parse_mode(block, where)};
    (void)resolve_cell_mapping(problem, task.mapping, where + ".mapping");
    return task;
  }
  if (type == "condition") {
    reject_unknown_keys(block, where, {"type", "measure", "cells"});
    ConditionTask task{measure_name("measure"),
                       require_string_array(require_key(block, where, "cells"),
                                            where + ".cells")};
    const GridMeasure& nu = resolve_measure(problem, task.measure, where);
    (void)cellset_from_labels(nu.space(), task.cells, where + ".cells");
    return task;
  }
  if (type == "verify-compat") {
    reject_unknown_keys(block, where, {"type", "pi", "tau", "mapping", "mode"});
    VerifyCompatTask task{measure_name("pi"), measure_name("tau"), mapping_name("mapping"),
                          parse_mode(block, where)};
    (void)resolve_cell_mapping(problem, task.mapping, where + ".mapping");
    return task;
  }
  if (type == "infer") {
    reject_unknown_keys(block, where,
                        {"type", "prior", "observed", "mapping", "mode", "method", "seed",
                         "streams", "n", "k"});
    InferTask task{measure_name("prior"), measure_name("observed"), mapping_name("mapping"),
                   parse_mode(block, where), false, parse_sampler_fields(block, where, 100000)};
    if (block.contains("method")) {
      const std::string method = require_string(block["method"], where + ".method");
      if (method == "sampled")
        task.sampled = true;
      else if (method != "exact")
        schema_fail(where + ".method", "expected 'exact' or 'sampled', got '" + method + "'");
    }
    return task;
  }
  if (type == "sphere-demo") {
    reject_unknown_keys(block, where,
                        {"type", "resolutions", "kappa1", "kappa2", "center1", "center2",
                         "seed", "streams", "n", "k"});
    SphereDemoTask task;
    task.cfg = parse_sampler_fields(block, where, 1000000);
    task.resolutions = {{8, 16}, {16, 16}, {16, 32}};
    if (block.contains("resolutions")) {
      task.resolutions.clear();
      if (!block["resolutions"].is_array())
        schema_fail(where + ".resolutions", "expected an array of [bands, sectors] pairs");
      for (const auto& pair : block["resolutions"]) {
        const auto values = require_number_array(pair, where + ".resolutions");
        if (values.size() != 2)
          schema_fail(where + ".resolutions", "expected [bands, sectors] pairs");
        task.resolutions.emplace_back(static_cast<int>(values[0]),
                                      static_cast<int>(values[1]));
      }
    }
    task.f1 = SphereBump{{std::sqrt(3.0) / 2.0, 0.0, 0.5}, 4.0};
    task.f2 = SphereBump{{std::sqrt(3.0) / 2.0, 0.0, -0.5}, 4.0};
    if (block.contains("kappa1"))
      task.f1.kappa = require_number(block["kappa1"], where + ".kappa1");
    if (block.contains("kappa2"))
      task.f2.kappa = require_number(block["kappa2"], where + ".kappa2");
    const auto parse_center = [&](const char* key, Eigen::Vector3d& out) {
      if (!block.contains(key)) return;
      const auto values = require_number_array(block[key], where + "." + key);
      if (values.size() != 3) schema_fail(where + "." + key, "expected [x, y, z]");
      out = Eigen::Vector3d(values[0], values[1], values[2]);
    };
    parse_center("center1", task.f1.center);
    parse_center("center2", task.f2.center);
    return task;
  }
  if (type == "resistance-demo") {
    reject_unknown_keys(block, where,
                        {"type", "v0", "i0", "sigma_v", "sigma_i", "cells", "span_sigmas",
                         "seed", "streams", "n", "k"});
    ResistanceDemoTask task;
    task.cfg = parse_sampler_fields(block, where, 1000000);
    if (block.contains("v0")) task.v0 = require_number(block["v0"], where + ".v0");
    if (block.contains("i0")) task.i0 = require_number(block["i0"], where + ".i0");
    if (block.contains("sigma_v"))
      task.sigma_v = require_number(block["sigma_v"], where + ".sigma_v");
    if (block.contains("sigma_i"))
      task.sigma_i = require_number(block["sigma_i"], where + ".sigma_i");
    if (block.contains("cells"))
      task.grid_cells = static_cast<int>(require_number(block["cells"], where + ".cells"));
    if (block.contains("span_sigmas"))
      task.span_sigmas = require_number(block["span_sigmas"], where + ".span_sigmas");
    return task;
  }
  if (type == "sets-demo") {
    reject_unknown_keys(block, where, {"type", "mapping", "x_prior", "y_obs"});
    SetsDemoTask task{mapping_name("mapping"),
                      require_string_array(require_key(block, where, "x_prior"),
                                           where + ".x_prior"),
                      require_string_array(require_key(block, where, "y_obs"),
                                           where + ".y_obs")};
    const CellMapping& phi = resolve_cell_mapping(problem, task.mapping, where + ".mapping");
    (void)cellset_from_labels(phi.domain(), task.x_prior, where + ".x_prior");
    (void)cellset_from_labels(phi.codomain(), task.y_obs, where + ".y_obs");
    return task;
  }
  schema_fail(where + ".type", "unknown task type '" + type + "'");
}

void apply_overrides(SamplerConfig& cfg, const SamplerOverrides& overrides) {
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.streams) cfg.streams = *overrides.streams;
  if (overrides.n_samples) cfg.n_samples = *overrides.n_samples;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(parse_errc::syntax, e.what());
  }
  if (!doc.is_object()) fail(parse_errc::schema_violation, "top level: expected an object");
  reject_unknown_keys(doc, "top level", {"spaces", "measures", "mappings", "task"});

  ProblemFile problem{.spaces = {}, .measures = {}, .mappings = {}, .task = IntersectTask{}};
  if (doc.contains("spaces")) {
    if (!doc["spaces"].is_object()) fail(parse_errc::schema_violation, "spaces: expected an object");
    for (const auto& [name, block] : doc["spaces"].items())
      problem.spaces.emplace(name, parse_space(name, block));
  }
  if (doc.contains("measures")) {
    if (!doc["measures"].is_object())
      fail(parse_errc::schema_violation, "measures: expected an object");
    for (const auto& [name, block] : doc["measures"].items())
      problem.measures.emplace(name, parse_measure(problem, name, block));
  }
  if (doc.contains("mappings")) {
    if (!doc["mappings"].is_object())
      fail(parse_errc::schema_violation, "mappings: expected an object");
    for (const auto& [name, block] : doc["mappings"].items())
      problem.mappings.emplace(name, parse_mapping(problem, name, block));
  }
  problem.task = parse_task(problem, require_key(doc, "top level", "task"));
  return problem;
}

namespace {

struct TaskRunner {
  const ProblemFile& problem;
  const SamplerOverrides& overrides;

  TaskResult operator()(const IntersectTask& task) const {
    const GridMeasure result = intersect(resolve_measure(problem, task.nu1, "task"),
                                         resolve_measure(problem, task.nu2, "task"), task.mode);
    return TaskResult{{{"task", "intersect"}, {"total_mass", g17(total_mass(result))}},
                      {{"result.csv", measure_csv(result)}}};
  }

  TaskResult operator()(const PushforwardTask& task) const {
    const GridMeasure result =
        pushforward(resolve_measure(problem, task.measure, "task"),
                    resolve_cell_mapping(problem, task.mapping, "task"));
    return TaskResult{{{"task", "pushforward"}, {"total_mass", g17(total_mass(result))}},
                      {{"result.csv", measure_csv(result)}}};
  }

  TaskResult operator()(const PullbackTask& task) const {
    const GridMeasure result =
        pullback(resolve_measure(problem, task.measure, "task"),
                 resolve_cell_mapping(problem, task.mapping, "task"), task.mode);
    return TaskResult{{{"task", "pullback"}, {"total_mass", g17(total_mass(result))}},
                      {{"result.csv", measure_csv(result)}}};
  }

  TaskResult operator()(const ConditionTask& task) const {
    const GridMeasure& nu = resolve_measure(problem, task.measure, "task");
    const GridMeasure result =
        condition(nu, cellset_from_labels(nu.space(), task.cells, "task.cells"));
    return TaskResult{{{"task", "condition"}, {"total_mass", g17(total_mass(result))}},
                      {{"result.csv", measure_csv(result)}}};
  }

  TaskResult operator()(const VerifyCompatTask& task) const {
    const CompatReport report =
        check_compatibility(resolve_measure(problem, task.pi, "task"),
                            resolve_measure(problem, task.tau, "task"),
                            resolve_cell_mapping(problem, task.mapping, "task"), task.mode);
    return TaskResult{{{"task", "verify-compat"},
                       {"max_abs_gap", g17(report.max_abs_gap)},
                       {"max_measure_gap", g17(report.max_measure_gap)},
                       {"degenerate", report.degenerate ? "1" : "0"}},
                      {{"compat.csv", compat_csv(report)}}};
  }

  TaskResult operator()(const InferTask& task) const {
    const GridMeasure& prior = resolve_measure(problem, task.prior, "task");
    const GridMeasure& observed = resolve_measure(problem, task.observed, "task");
    const auto& forward = resolve_mapping(problem, task.mapping, "task");
    InferenceProblem inference{prior.space(), observed.space(), forward, prior, observed,
                               task.mode};
    TaskResult result;
    result.summary.emplace_back("task", "infer");
    if (!task.sampled) {
      const Posterior post = solve_exact(inference);
      result.summary.emplace_back("evidence", g17(post.evidence));
      result.summary.emplace_back("compat_gap", g17(*post.compat_gap));
      result.files.emplace_back("posterior_model.csv",
                                measure_csv(std::get<GridMeasure>(post.model_posterior)));
      result.files.emplace_back("posterior_data.csv",
                                measure_csv(std::get<GridMeasure>(post.data_posterior)));
      return result;
    }
    SamplerConfig cfg = task.cfg;
    apply_overrides(cfg, overrides);
    const Posterior post = solve_sampled(inference, cfg);
    result.summary.emplace_back("evidence", g17(post.evidence));
    result.summary.emplace_back("acceptance_rate", g17(*post.acceptance_rate));
    const auto& model_cloud = std::get<ParticleMeasure>(post.model_posterior);
    const auto& data_cloud = std::get<ParticleMeasure>(post.data_posterior);
    result.files.emplace_back("posterior_model.csv",
                              measure_csv(histogram(model_cloud, prior.space()).measure));
    if (data_cloud.is_cell_cloud())
      result.files.emplace_back("posterior_data.csv",
                                measure_csv(histogram(data_cloud, observed.space()).measure));
    result.files.emplace_back("particles_model.csv", particles_csv(model_cloud));
    result.files.emplace_back("particles_data.csv", particles_csv(data_cloud));
    return result;
  }

  TaskResult operator()(const SphereDemoTask& task) const {
    SamplerConfig cfg = task.cfg;
    apply_overrides(cfg, overrides);
    const SphereReport report = run_sphere_demo(task.resolutions, task.f1, task.f2, cfg);
    TaskResult result;
    result.summary.emplace_back("task", "sphere-demo");
    for (size_t i = 0; i < report.resolutions.size(); ++i) {
      const auto& r = report.resolutions[i];
      const std::string tag = "r" + std::to_string(i);
      result.summary.emplace_back("bands_" + tag, std::to_string(r.bands));
      result.summary.emplace_back("sectors_" + tag, std::to_string(r.sectors));
      result.summary.emplace_back("tile_area_" + tag, g17(r.tile_area));
      result.summary.emplace_back("tv_" + tag, g17(r.tv_to_product));
      result.summary.emplace_back("acceptance_rate_" + tag, g17(r.acceptance_rate));
      result.files.emplace_back("sphere_hist_" + tag + ".csv", measure_csv(*r.histogram));
      result.files.emplace_back("sphere_oracle_" + tag + ".csv", measure_csv(*r.oracle));
    }
    return result;
  }

  TaskResult operator()(const ResistanceDemoTask& task) const {
    SamplerConfig cfg = task.cfg;
    apply_overrides(cfg, overrides);
    const ResistanceReport report = run_resistance_demo(task.v0, task.i0, task.sigma_v,
                                                        task.sigma_i, cfg, task.grid_cells,
                                                        task.span_sigmas);
    return TaskResult{{{"task", "resistance-demo"},
                       {"R0_hat", g17(report.r0_hat)},
                       {"sigmaR_hat", g17(report.sigma_r_hat)},
                       {"R0_expected", g17(report.r0_expected)},
                       {"sigmaR_expected", g17(report.sigma_r_expected)},
                       {"tv", g17(report.tv_log_grid)},
                       {"out_of_range", std::to_string(report.out_of_range)}},
                      {{"r_histogram.csv", measure_csv(report.histogram)},
                       {"r_exact.csv", measure_csv(report.exact)}}};
  }

  TaskResult operator()(const SetsDemoTask& task) const {
    const CellMapping& phi = resolve_cell_mapping(problem, task.mapping, "task");
    const CellSet x_prior = cellset_from_labels(phi.domain(), task.x_prior, "task.x_prior");
    const CellSet y_obs = cellset_from_labels(phi.codomain(), task.y_obs, "task.y_obs");
    const SetInference inference = set_inference_demo(x_prior, y_obs, phi);
    const auto join = [](const CellSet& set) {
      std::string out;
      for (Eigen::Index c : set.members()) {
        if (!out.empty()) out += ';';
        out += set.space()->label(c);
      }
      return out;
    };
    return TaskResult{{{"task", "sets-demo"},
                       {"x_post", join(inference.x_post)},
                       {"y_post", join(inference.y_post)},
                       {"consistent", "1"}},
                      {}};
  }
};

}  // namespace

TaskResult run_problem(const ProblemFile& problem, const SamplerOverrides& overrides) {
  return std::visit(TaskRunner{problem, overrides}, problem.task);
}

}  // namespace mcal
