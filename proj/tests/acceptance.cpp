// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per shipped guarantee, each printed as a
// PASS/FAIL line with its measured figure and runtime. Run all criteria or a
// single one with --criterion N. Exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcal/csv.hpp"
#include "mcal/demos.hpp"
#include "mcal/generators.hpp"
#include "mcal/inference.hpp"
#include "mcal/problem.hpp"

using namespace mcal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& context) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + context;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += " ";
    detail += text;
  }
};

SamplerConfig cfg_of(std::uint64_t seed, long long n, int streams = 4) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  cfg.streams = streams;
  return cfg;
}

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(3);
  out << value;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. Compatibility theorem: 1000 randomized instances on <=12-cell spaces,
//    max cellwise density gap <= 1e-12 after renormalization.
Outcome criterion_compatibility() {
  Outcome outcome;
  const CompatSuiteResult result = run_compat_suite(12, 1000, 101,
                                                    NormalizationMode::renormalize);
  outcome.require(result.max_abs_gap <= 1e-12, "max gap " + fmt(result.max_abs_gap));
  outcome.note("max_abs_gap=" + fmt(result.max_abs_gap) +
               " degenerate=" + std::to_string(result.degenerate));
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. Change-of-variables law: both integral routes agree within 1e-12 on
//    1000 randomized (K, pi, phi, F) instances.
Outcome criterion_change_of_variables() {
  Outcome outcome;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    InstanceGen gen(202, static_cast<std::uint64_t>(trial));
    const SpacePtr x = gen.space(1, 12, "x");
    const SpacePtr y = gen.space(1, 12, "y");
    const CellMapping phi = gen.mapping(x, y);
    const GridMeasure pi = gen.raw_measure(x, trial % 4 == 0);
    Eigen::ArrayXd k_values(y->cell_count());
    for (Eigen::Index i = 0; i < k_values.size(); ++i) k_values(i) = gen.uniform(-3.0, 3.0);
    const CellSet f = gen.cellset(y, true);

    const double via_image =
        integrate_against(TestFunction(y, k_values), pushforward(pi, phi), f);
    // Independent route: direct fold of (K o phi) against pi over the
    // preimage cells.
    const CellSet pre = preimage(phi, f);
    double via_preimage = 0.0;
    for (Eigen::Index i : pre.members())
      via_preimage += k_values(phi(i)) * pi.density()(i) * x->volume(i);

    worst = std::max(worst, std::abs(via_image - via_preimage));
  }
  outcome.require(worst <= 1e-12, "max gap " + fmt(worst));
  outcome.note("max_gap=" + fmt(worst));
  return outcome;
}

// ---------------------------------------------------------------------------
// 3. Set correspondences: measure-set intersection, pullback, support-image
//    law, and the set-inference pipelines over 1000 randomized (A, B, phi).
Outcome criterion_set_correspondences() {
  Outcome outcome;
  double worst_density_gap = 0.0;
  for (int trial = 0; trial < 1000 && outcome.pass; ++trial) {
    InstanceGen gen(303, static_cast<std::uint64_t>(trial));
    const SpacePtr x = gen.space(2, 10, "x");
    const SpacePtr y = gen.space(2, 10, "y");
    const CellMapping phi = gen.mapping(x, y);
    const CellSet a = gen.cellset(x, false);
    const CellSet b = gen.cellset(x, false);
    const CellSet b_y = gen.cellset(y, false);
    const auto unit = NormalizationMode::unit_constant;
    const auto renorm = NormalizationMode::renormalize;

    // Intersection of measure-sets is the measure-set of the intersection.
    const CellSet ab = set_intersection(a, b);
    const GridMeasure unit_product =
        intersect(measure_set(x, a, unit), measure_set(x, b, unit), unit);
    outcome.require((unit_product.density() == measure_set(x, ab, unit).density()).all(),
                    "unit-mode measure-set intersection, trial " + std::to_string(trial));
    outcome.require(set_equal(support(unit_product), ab),
                    "intersection support, trial " + std::to_string(trial));
    if (!ab.is_empty()) {
      const GridMeasure lhs =
          intersect(measure_set(x, a, renorm), measure_set(x, b, renorm), renorm);
      const GridMeasure rhs = measure_set(x, ab, renorm);
      for (Eigen::Index i = 0; i < x->cell_count(); ++i)
        worst_density_gap =
            std::max(worst_density_gap, std::abs(lhs.density()(i) - rhs.density()(i)));
    }

    // Pullback of a measure-set is the measure-set of the preimage.
    const GridMeasure pulled = pullback(measure_set(y, b_y, unit), phi, unit);
    outcome.require(
        (pulled.density() == measure_set(x, preimage(phi, b_y), unit).density()).all(),
        "measure-set pullback, trial " + std::to_string(trial));
    outcome.require(set_equal(support(pulled), preimage(phi, b_y)),
                    "pullback support, trial " + std::to_string(trial));

    // Support of a pushforward is the image of the support.
    const GridMeasure pi = gen.raw_measure(x, true);
    outcome.require(set_equal(support(pushforward(pi, phi)), image_set(phi, support(pi))),
                    "support-image law, trial " + std::to_string(trial));

    // Set-level and measure-level inference pipelines coincide
    // (set_inference_demo raises InconsistentOracles if they do not).
    const SetInference sets = set_inference_demo(a, b_y, phi);
    outcome.require(set_equal(sets.y_post, image_set(phi, sets.x_post)),
                    "posterior image law, trial " + std::to_string(trial));
  }
  outcome.require(worst_density_gap <= 1e-12, "renormalized density gap");
  outcome.note("max_density_gap=" + fmt(worst_density_gap));
  return outcome;
}

// ---------------------------------------------------------------------------
// 4. Conditioning reduction: condition(nu, A) matches the Kolmogorov quotient
//    over a generated family of F, 1000 random (nu, A).
Outcome criterion_conditioning() {
  Outcome outcome;
  double worst = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    InstanceGen gen(404, static_cast<std::uint64_t>(trial));
    const SpacePtr s = gen.space(2, 12, "s");
    const GridMeasure nu = gen.probability_measure(s, trial % 3 == 0);
    const CellSet a = gen.cellset(s, false);
    const double mass_a = measure_of(nu, a);
    if (mass_a == 0.0) continue;
    ++checked;
    const GridMeasure conditioned = condition(nu, a);
    // Family: every singleton plus ten random sets.
    for (Eigen::Index c = 0; c < s->cell_count(); ++c) {
      const CellSet f(s, {c});
      const double quotient = measure_of(nu, set_intersection(f, a)) / mass_a;
      worst = std::max(worst, std::abs(measure_of(conditioned, f) - quotient));
    }
    for (int extra = 0; extra < 10; ++extra) {
      const CellSet f = gen.cellset(s, true);
      const double quotient = measure_of(nu, set_intersection(f, a)) / mass_a;
      worst = std::max(worst, std::abs(measure_of(conditioned, f) - quotient));
    }
  }
  outcome.require(worst <= 1e-12, "max quotient gap " + fmt(worst));
  outcome.note("max_gap=" + fmt(worst) + " instances=" + std::to_string(checked));
  return outcome;
}

// ---------------------------------------------------------------------------
// 5. Rejection sampler vs exact posterior: 50 randomized problems, TV <= 0.01
//    at 1e6 acceptances, evidence within 4 sigma.
Outcome criterion_rejection_sampler() {
  Outcome outcome;
  double worst_tv = 0.0;
  double worst_sigmas = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    InstanceGen gen(505, static_cast<std::uint64_t>(trial));
    const SpacePtr x = gen.space(2, 20, "x");
    const SpacePtr y = gen.space(2, 12, "y");
    const CellMapping phi = gen.mapping(x, y);
    InferenceProblem problem{x,
                             y,
                             phi,
                             gen.probability_measure(x, false),
                             gen.raw_measure(y, false),
                             NormalizationMode::renormalize};

    const Posterior exact = solve_exact(problem);
    const Posterior sampled =
        solve_sampled(problem, cfg_of(1000 + static_cast<std::uint64_t>(trial), 1'000'000));

    const auto& cloud = std::get<ParticleMeasure>(sampled.model_posterior);
    const double tv = tv_distance(histogram(cloud, x).measure,
                                  std::get<GridMeasure>(exact.model_posterior));
    worst_tv = std::max(worst_tv, tv);

    const Eigen::ArrayXd like = likelihood_table(problem);
    double l_max = 0.0;
    for (Eigen::Index i = 0; i < like.size(); ++i)
      if (problem.prior.density()(i) > 0.0) l_max = std::max(l_max, like(i));
    const double k = 1.0 / l_max;
    const double rate = *sampled.acceptance_rate;
    const long long attempts = std::llround(1'000'000.0 / rate);
    const double sigma =
        std::sqrt(rate * (1.0 - rate) / static_cast<double>(attempts)) / k;
    worst_sigmas =
        std::max(worst_sigmas, std::abs(sampled.evidence - exact.evidence) / sigma);
  }
  outcome.require(worst_tv <= 0.01, "TV " + fmt(worst_tv));
  outcome.require(worst_sigmas <= 4.0, "evidence deviation " + fmt(worst_sigmas) + " sigma");
  outcome.note("max_tv=" + fmt(worst_tv) + " max_evidence_sigmas=" + fmt(worst_sigmas));
  return outcome;
}

// ---------------------------------------------------------------------------
// 6. Resistance example: fitted lognormal parameters within 1% of the closed
//    form (5.0, 0.5), and log-grid histogram TV <= 0.01.
Outcome criterion_resistance() {
  Outcome outcome;
  const ResistanceReport report =
      run_resistance_demo(10.0, 2.0, 0.3, 0.4, cfg_of(606, 1'000'000));
  outcome.require(std::abs(report.r0_hat - 5.0) / 5.0 <= 0.01,
                  "R0_hat " + fmt(report.r0_hat));
  outcome.require(std::abs(report.sigma_r_hat - 0.5) / 0.5 <= 0.01,
                  "sigmaR_hat " + fmt(report.sigma_r_hat));
  outcome.require(report.tv_log_grid <= 0.01, "TV " + fmt(report.tv_log_grid));
  outcome.note("R0_hat=" + fmt(report.r0_hat) + " sigmaR_hat=" + fmt(report.sigma_r_hat) +
               " tv=" + fmt(report.tv_log_grid));
  return outcome;
}

// ---------------------------------------------------------------------------
// 7. Sphere coincidence sampler: three tilings with the tile area halving
//    each step; TV to the exact normalized product <= 0.02 at the finest and
//    non-increasing within a 0.005 noise margin.
Outcome criterion_sphere() {
  Outcome outcome;
  const SphereBump f1{{std::sqrt(3.0) / 2.0, 0.0, 0.5}, 4.0};
  const SphereBump f2{{std::sqrt(3.0) / 2.0, 0.0, -0.5}, 4.0};
  const SphereReport report =
      run_sphere_demo({{8, 16}, {16, 16}, {16, 32}}, f1, f2, cfg_of(707, 1'000'000));
  std::string tvs;
  for (size_t i = 0; i < report.resolutions.size(); ++i) {
    const auto& r = report.resolutions[i];
    tvs += (i ? "," : "") + fmt(r.tv_to_product);
    if (i > 0) {
      const double half_prev = 0.5 * report.resolutions[i - 1].tile_area;
      outcome.require(std::abs(r.tile_area - half_prev) <= 1e-12 * half_prev,
                      "tile area halving");
      outcome.require(r.tv_to_product <=
                          report.resolutions[i - 1].tv_to_product + 0.005,
                      "TV non-increasing at step " + std::to_string(i));
    }
  }
  outcome.require(report.resolutions.back().tv_to_product <= 0.02,
                  "finest TV " + fmt(report.resolutions.back().tv_to_product));
  outcome.note("tv=[" + tvs + "]");
  return outcome;
}

// ---------------------------------------------------------------------------
// 8. Volume-measure invariance: period- and frequency-space log-interval
//    volumes agree within 1e-12 relative; pushforward probabilities of
//    corresponding intervals agree within 1e-12.
Outcome criterion_volume_invariance() {
  Outcome outcome;
  double worst_volume = 0.0;
  double worst_prob = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    InstanceGen gen(808, static_cast<std::uint64_t>(trial));
    const Eigen::Index cells = 1 + gen.below(12);
    Eigen::ArrayXd periods(cells + 1);
    double edge = gen.uniform(1e-3, 10.0);
    for (Eigen::Index i = 0; i <= cells; ++i) {
      periods(i) = edge;
      edge *= gen.uniform(1.02, 5.0);
    }
    Eigen::ArrayXd omegas(cells + 1);
    for (Eigen::Index i = 0; i <= cells; ++i)
      omegas(cells - i) = 2.0 * std::numbers::pi / periods(i);

    const SpacePtr period_space = log_interval_space("T", periods);
    const SpacePtr omega_space = log_interval_space("w", omegas);
    for (Eigen::Index i = 0; i < cells; ++i) {
      const double vt = period_space->volume(i);
      const double vw = omega_space->volume(cells - 1 - i);
      worst_volume = std::max(worst_volume, std::abs(vt - vw) / vt);
    }

    // Reparameterization as a cell mapping; interval probabilities carry over.
    std::vector<Eigen::Index> table(static_cast<size_t>(cells));
    for (Eigen::Index i = 0; i < cells; ++i) table[static_cast<size_t>(i)] = cells - 1 - i;
    const CellMapping reverse(period_space, omega_space, std::move(table));
    const GridMeasure m = gen.probability_measure(period_space, false);
    const GridMeasure pushed = pushforward(m, reverse);
    for (int k = 0; k < 8; ++k) {
      const Eigen::Index lo = gen.below(cells);
      const Eigen::Index hi = lo + gen.below(cells - lo);
      std::vector<Eigen::Index> range, image;
      for (Eigen::Index i = lo; i <= hi; ++i) {
        range.push_back(i);
        image.push_back(cells - 1 - i);
      }
      const double p_period = measure_of(m, CellSet(period_space, range));
      const double p_omega = measure_of(pushed, CellSet(omega_space, image));
      worst_prob = std::max(worst_prob, std::abs(p_period - p_omega));
    }
  }
  outcome.require(worst_volume <= 1e-12, "volume gap " + fmt(worst_volume));
  outcome.require(worst_prob <= 1e-12, "probability gap " + fmt(worst_prob));
  outcome.note("max_volume_rel_gap=" + fmt(worst_volume) +
               " max_prob_gap=" + fmt(worst_prob));
  return outcome;
}

// ---------------------------------------------------------------------------
// 9. Determinism: rerunning any sampling pipeline with the same seed yields
//    byte-identical CSV output.
Outcome criterion_determinism() {
  Outcome outcome;

  const ResistanceReport first = run_resistance_demo(10.0, 2.0, 0.3, 0.4, cfg_of(909, 100000));
  const ResistanceReport second =
      run_resistance_demo(10.0, 2.0, 0.3, 0.4, cfg_of(909, 100000));
  outcome.require(measure_csv(first.histogram) == measure_csv(second.histogram),
                  "resistance histogram bytes");
  outcome.require(measure_csv(first.exact) == measure_csv(second.exact),
                  "resistance law bytes");

  InstanceGen gen(910);
  const SpacePtr s = gen.space(4, 12, "s", /*unit_volumes=*/true);
  const GridMeasure p1 = gen.probability_measure(s, false);
  const GridMeasure p2 = gen.probability_measure(s, false);
  const CoincidenceResult run1 = coincidence_intersect(p1, p2, cfg_of(911, 50000, 3));
  const CoincidenceResult run2 = coincidence_intersect(p1, p2, cfg_of(911, 50000, 3));
  outcome.require(particles_csv(run1.cloud) == particles_csv(run2.cloud),
                  "coincidence particle bytes");
  outcome.require(measure_csv(histogram(run1.cloud, s).measure) ==
                      measure_csv(histogram(run2.cloud, s).measure),
                  "coincidence histogram bytes");

  const CoincidenceResult other = coincidence_intersect(p1, p2, cfg_of(912, 50000, 3));
  outcome.require(particles_csv(run1.cloud) != particles_csv(other.cloud),
                  "different seeds must differ");
  outcome.note("csv reruns byte-identical");
  return outcome;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none stated
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "compatibility-theorem", 10.0, criterion_compatibility},
      {2, "change-of-variables", 10.0, criterion_change_of_variables},
      {3, "set-correspondences", 0.0, criterion_set_correspondences},
      {4, "conditioning-reduction", 0.0, criterion_conditioning},
      {5, "rejection-vs-exact", 120.0, criterion_rejection_sampler},
      {6, "resistance-example", 30.0, criterion_resistance},
      {7, "sphere-coincidence", 120.0, criterion_sphere},
      {8, "volume-invariance", 0.0, criterion_volume_invariance},
      {9, "determinism", 0.0, criterion_determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& criterion : criteria()) {
    if (only != 0 && criterion.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
      outcome.pass = false;
      outcome.detail += " over time limit";
    }
    std::cout << "[c" << criterion.id << "] " << criterion.name << ": "
              << (outcome.pass ? "PASS" : "FAIL") << "  " << outcome.detail << "  ("
              << fmt(elapsed) << " s";
    if (criterion.time_limit_s > 0.0) std::cout << ", limit " << criterion.time_limit_s << " s";
    std::cout << ")\n";
    if (!outcome.pass) ++failures;
  }
  if (only == 0)
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " failed")
              << "\n";
  return failures;
}
