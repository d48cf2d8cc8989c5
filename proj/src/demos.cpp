// SPDX-License-Identifier: Apache-2.0
#include "mcal/demos.hpp"

#include <cmath>
#include <numbers>

#include "mcal/generators.hpp"

namespace mcal {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

SpacePtr lognormal_axis(double median, double sigma, int cells, double span_sigmas) {
  if (!(median > 0.0)) fail(errc::nonpositive_edge, "axis median must be positive");
  if (cells < 1) fail(errc::invalid_config, "axis needs at least one cell");
  const double span = std::max(span_sigmas * sigma, 1e-6);
  Eigen::ArrayXd edges(cells + 1);
  for (int i = 0; i <= cells; ++i)
    edges(i) = median * std::exp(span * (2.0 * i / cells - 1.0));
  return log_interval_space("log_axis", edges);
}

GridMeasure lognormal_on_log_axis(const SpacePtr& axis, double median, double sigma) {
  if (!(median > 0.0)) fail(errc::invalid_config, "lognormal median must be positive");
  if (sigma < 0.0) fail(errc::invalid_config, "lognormal sigma must be nonnegative");
  const Eigen::ArrayXd& edges = axis->edges();
  Eigen::ArrayXd prob(axis->cell_count());
  if (sigma == 0.0) {
    for (Eigen::Index c = 0; c < prob.size(); ++c)
      prob(c) = (edges(c) <= median && median < edges(c + 1)) ? 1.0 : 0.0;
  } else {
    const double mu = std::log(median);
    for (Eigen::Index c = 0; c < prob.size(); ++c)
      prob(c) = normal_cdf((std::log(edges(c + 1)) - mu) / sigma) -
                normal_cdf((std::log(edges(c)) - mu) / sigma);
  }
  double total = 0.0;
  for (Eigen::Index c = 0; c < prob.size(); ++c) total += prob(c);
  if (total <= 0.0) fail(errc::invalid_config, "lognormal law has no mass on the axis");
  return GridMeasure(axis, prob / (total * axis->volumes()), MeasureKind::probability);
}

ResistanceReport run_resistance_demo(double v0, double i0, double sigma_v, double sigma_i,
                                     const SamplerConfig& cfg, int grid_cells,
                                     double span_sigmas) {
  if (!(v0 > 0.0) || !(i0 > 0.0))
    fail(errc::invalid_config, "central values V0, I0 must be positive");
  if (sigma_v < 0.0 || sigma_i < 0.0)
    fail(errc::invalid_config, "log-standard deviations must be nonnegative");
  if (cfg.n_samples < 10'000)
    fail(errc::invalid_config, "resistance demo needs at least 10^4 samples");

  const CoordSampler vi_sampler{
      {"V", "I"}, [v0, i0, sigma_v, sigma_i](StreamRng& rng) {
        Eigen::VectorXd x(2);
        x(0) = v0 * std::exp(sigma_v * rng.next_normal());
        x(1) = i0 * std::exp(sigma_i * rng.next_normal());
        return x;
      }};
  const ParticleMeasure vi_cloud = sample_coords(vi_sampler, cfg);
  const ExprMapping ratio({"V", "I"}, {{"R", "V/I"}});
  const ParticleMeasure r_cloud = transport(vi_cloud, ratio);

  // Lognormal fit: mean and standard deviation of log R (two fixed-order
  // passes).
  const Eigen::Index n = r_cloud.size();
  double mean_log = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) mean_log += std::log(r_cloud.coords()(i, 0));
  mean_log /= static_cast<double>(n);
  double var_log = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = std::log(r_cloud.coords()(i, 0)) - mean_log;
    var_log += d * d;
  }
  var_log /= static_cast<double>(n);

  const double r0_expected = v0 / i0;
  const double sigma_r_expected = std::sqrt(sigma_v * sigma_v + sigma_i * sigma_i);

  const SpacePtr axis = lognormal_axis(r0_expected, sigma_r_expected, grid_cells, span_sigmas);
  const HistogramResult hist = histogram(r_cloud, axis);
  const GridMeasure exact = lognormal_on_log_axis(axis, r0_expected, sigma_r_expected);

  ResistanceReport report{
      std::exp(mean_log),
      std::sqrt(var_log),
      r0_expected,
      sigma_r_expected,
      tv_distance(hist.measure, exact),
      hist.out_of_range,
      hist.measure,
      exact,
  };
  return report;
}

SphereReport run_sphere_demo(const std::vector<std::pair<int, int>>& resolutions,
                             const SphereBump& f1, const SphereBump& f2,
                             const SamplerConfig& cfg) {
  if (resolutions.empty()) fail(errc::invalid_config, "need at least one tiling resolution");
  SphereReport report;
  for (const auto& [bands, sectors] : resolutions) {
    const SphereTiling tiling(bands, sectors);
    const GridMeasure m1 = tiling.discretize(f1);
    const GridMeasure m2 = tiling.discretize(f2);
    const GridMeasure oracle = tiling.product_oracle(f1, f2);

    const CoincidenceResult run = coincidence_intersect(m1, m2, cfg);
    const HistogramResult hist = histogram(run.cloud, tiling.space());

    double predicted = 0.0;
    for (Eigen::Index c = 0; c < m1.density().size(); ++c)
      predicted += m1.density()(c) * m2.density()(c) * tiling.tile_area() * tiling.tile_area();

    report.resolutions.push_back(SphereResolutionReport{
        bands, sectors, tiling.tile_area(), tv_distance(hist.measure, oracle), run.attempts,
        run.acceptance_rate, predicted, hist.measure, oracle});
  }
  return report;
}

SetsDemoReport run_sets_demo(std::uint64_t seed) {
  InstanceGen gen(seed);
  const SpacePtr x = gen.space(4, 8, "x");
  const SpacePtr y = gen.space(3, 6, "y");
  const CellMapping phi = gen.mapping(x, y);
  const CellSet x_prior = gen.cellset(x, false);
  const CellSet y_obs = gen.cellset(y, false);
  return SetsDemoReport{set_inference_demo(x_prior, y_obs, phi), x_prior, y_obs};
}

}  // namespace mcal
