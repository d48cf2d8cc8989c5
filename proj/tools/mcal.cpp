// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: runs declarative problem files, the randomized
// compatibility-theorem suite, and the built-in demos. Exit status: 0 on
// success, 1 on a domain error, 2 on a usage or parse error.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcal/csv.hpp"
#include "mcal/demos.hpp"
#include "mcal/generators.hpp"
#include "mcal/problem.hpp"

namespace {

namespace fs = std::filesystem;

void write_outputs(const mcal::TaskResult& result, const std::string& out_dir) {
  if (!result.files.empty()) fs::create_directories(out_dir);
  for (const auto& [name, contents] : result.files) {
    std::ofstream file(fs::path(out_dir) / name, std::ios::binary);
    file << contents;
  }
  for (const auto& [key, value] : result.summary)
    std::cout << key << "=" << value << "\n";
}

struct RunArgs {
  std::string file;
  std::string out_dir = ".";
  mcal::SamplerOverrides overrides;
};

int run_problem_file(const RunArgs& args) {
  std::ifstream input(args.file, std::ios::binary);
  if (!input) {
    std::cerr << "error: cannot open problem file '" << args.file << "'\n";
    return 2;
  }
  std::ostringstream text;
  text << input.rdbuf();
  const mcal::ProblemFile problem = mcal::parse_problem(text.str());
  write_outputs(mcal::run_problem(problem, args.overrides), args.out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"measure calculus over finite partitions"};
  app.require_subcommand(1);

  RunArgs run_args;
  std::uint64_t seed_flag = 0;
  int streams_flag = 0;
  long long n_flag = 0;
  auto* run = app.add_subcommand("run", "execute a problem file");
  run->add_option("file", run_args.file, "problem file (JSON)")->required();
  run->add_option("--out", run_args.out_dir, "CSV destination directory");
  auto* run_seed = run->add_option("--seed", seed_flag, "sampler seed override");
  auto* run_streams = run->add_option("--streams", streams_flag, "sampler stream count");
  auto* run_n = run->add_option("--n", n_flag, "sample count override");

  struct {
    Eigen::Index cells = 8;
    int trials = 1000;
    std::uint64_t seed = 0;
    std::string mode = "renormalize";
  } compat;
  auto* verify = app.add_subcommand("verify-compat",
                                    "randomized compatibility-theorem suite");
  verify->add_option("--cells", compat.cells, "max cells per space");
  verify->add_option("--trials", compat.trials, "instance count");
  verify->add_option("--seed", compat.seed, "suite seed");
  verify->add_option("--mode", compat.mode, "renormalize | unit_constant");

  struct {
    std::string which;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int streams = 4;
    long long n = 1'000'000;
    double v0 = 10.0, i0 = 2.0, sigma_v = 0.3, sigma_i = 0.4;
    int cells = 80;
    double kappa1 = 4.0, kappa2 = 4.0;
    std::string resolutions = "8x16,16x16,16x32";
  } demo;
  auto* demo_cmd = app.add_subcommand("demo", "built-in worked examples");
  demo_cmd->add_option("name", demo.which, "resistance | sphere | sets")->required();
  demo_cmd->add_option("--out", demo.out_dir, "CSV destination directory");
  demo_cmd->add_option("--seed", demo.seed, "sampler seed");
  demo_cmd->add_option("--streams", demo.streams, "sampler stream count");
  demo_cmd->add_option("--n", demo.n, "sample count");
  demo_cmd->add_option("--v0", demo.v0, "voltage central value");
  demo_cmd->add_option("--i0", demo.i0, "current central value");
  demo_cmd->add_option("--sigma-v", demo.sigma_v, "voltage log-sd");
  demo_cmd->add_option("--sigma-i", demo.sigma_i, "current log-sd");
  demo_cmd->add_option("--cells", demo.cells, "ratio histogram cells");
  demo_cmd->add_option("--kappa1", demo.kappa1, "first sphere bump concentration");
  demo_cmd->add_option("--kappa2", demo.kappa2, "second sphere bump concentration");
  demo_cmd->add_option("--resolutions", demo.resolutions,
                       "comma list of BANDSxSECTORS tilings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      if (*run_seed) run_args.overrides.seed = seed_flag;
      if (*run_streams) run_args.overrides.streams = streams_flag;
      if (*run_n) run_args.overrides.n_samples = n_flag;
      return run_problem_file(run_args);
    }

    if (verify->parsed()) {
      const auto mode = compat.mode == "unit_constant"
                            ? mcal::NormalizationMode::unit_constant
                            : mcal::NormalizationMode::renormalize;
      const mcal::CompatSuiteResult result =
          mcal::run_compat_suite(compat.cells, compat.trials, compat.seed, mode);
      std::cout << "max_abs_gap=" << mcal::g17(result.max_abs_gap) << "\n"
                << "max_measure_gap=" << mcal::g17(result.max_measure_gap) << "\n"
                << "trials=" << result.trials << "\n"
                << "degenerate=" << result.degenerate << "\n";
      return result.max_abs_gap <= 1e-12 ? 0 : 1;
    }

    mcal::SamplerConfig cfg;
    cfg.seed = demo.seed;
    cfg.streams = demo.streams;
    cfg.n_samples = demo.n;
    if (demo.which == "resistance") {
      mcal::ResistanceDemoTask task;
      task.v0 = demo.v0;
      task.i0 = demo.i0;
      task.sigma_v = demo.sigma_v;
      task.sigma_i = demo.sigma_i;
      task.grid_cells = demo.cells;
      task.cfg = cfg;
      mcal::ProblemFile problem{.spaces = {}, .measures = {}, .mappings = {}, .task = task};
      write_outputs(mcal::run_problem(problem), demo.out_dir);
      return 0;
    }
    if (demo.which == "sphere") {
      mcal::SphereDemoTask task;
      task.cfg = cfg;
      task.f1 = mcal::SphereBump{{std::sqrt(3.0) / 2.0, 0.0, 0.5}, demo.kappa1};
      task.f2 = mcal::SphereBump{{std::sqrt(3.0) / 2.0, 0.0, -0.5}, demo.kappa2};
      task.resolutions.clear();
      std::stringstream list(demo.resolutions);
      std::string item;
      while (std::getline(list, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) {
          std::cerr << "error: --resolutions expects BANDSxSECTORS entries\n";
          return 2;
        }
        task.resolutions.emplace_back(std::stoi(item.substr(0, x)),
                                      std::stoi(item.substr(x + 1)));
      }
      mcal::ProblemFile problem{.spaces = {}, .measures = {}, .mappings = {}, .task = task};
      write_outputs(mcal::run_problem(problem), demo.out_dir);
      return 0;
    }
    if (demo.which == "sets") {
      const mcal::SetsDemoReport report = mcal::run_sets_demo(demo.seed);
      const auto join = [](const mcal::CellSet& set) {
        std::string out;
        for (Eigen::Index c : set.members()) {
          if (!out.empty()) out += ';';
          out += set.space()->label(c);
        }
        return out;
      };
      std::cout << "task=sets-demo\n"
                << "x_prior=" << join(report.x_prior) << "\n"
                << "y_obs=" << join(report.y_obs) << "\n"
                << "x_post=" << join(report.result.x_post) << "\n"
                << "y_post=" << join(report.result.y_post) << "\n"
                << "consistent=1\n";
      return 0;
    }
    std::cerr << "error: unknown demo '" << demo.which
              << "' (expected resistance, sphere, or sets)\n";
    return 2;
  } catch (const mcal::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mcal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
