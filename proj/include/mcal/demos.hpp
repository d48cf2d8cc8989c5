// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "mcal/inference.hpp"
#include "mcal/sampling.hpp"
#include "mcal/sphere.hpp"

namespace mcal {

/// Exact cell probabilities on a log axis of a lognormal law with the given
/// median and log-standard deviation, renormalized over the axis;
/// sigma = 0 degenerates to a point mass in the cell containing the median.
GridMeasure lognormal_on_log_axis(const SpacePtr& axis, double median, double sigma);

/// Geometric grid of `cells` log-equal steps covering
/// median * exp(+-span_sigmas * sigma).
SpacePtr lognormal_axis(double median, double sigma, int cells, double span_sigmas);

struct ResistanceReport {
  double r0_hat = 0.0;
  double sigma_r_hat = 0.0;
  double r0_expected = 0.0;
  double sigma_r_expected = 0.0;
  double tv_log_grid = 0.0;
  long long out_of_range = 0;
  GridMeasure histogram;  // sampled ratio histogram on the log grid
  GridMeasure exact;      // closed-form law on the same grid
};

/// Uncertainty propagation through R = V/I: samples independent lognormal
/// (V, I), transports the cloud through the ratio, and checks the fitted
/// lognormal parameters and the log-grid histogram against the closed form
/// (median V0/I0, log-sd sqrt(sigma_v^2 + sigma_i^2)).
ResistanceReport run_resistance_demo(double v0, double i0, double sigma_v, double sigma_i,
                                     const SamplerConfig& cfg, int grid_cells = 80,
                                     double span_sigmas = 5.0);

struct SphereResolutionReport {
  int bands = 0;
  int sectors = 0;
  double tile_area = 0.0;
  double tv_to_product = 0.0;
  long long attempts = 0;
  double acceptance_rate = 0.0;
  double predicted_rate = 0.0;  // sum of cellwise probability products
  std::optional<GridMeasure> histogram;
  std::optional<GridMeasure> oracle;
};

struct SphereReport {
  std::vector<SphereResolutionReport> resolutions;
};

/// Coincidence intersection on the sphere at a sequence of equal-area
/// tilings: at each resolution the accepted-pair histogram is compared (in
/// total variation) to the quadrature integral of the pointwise product
/// f1*f2, normalized on the same tiling.
SphereReport run_sphere_demo(const std::vector<std::pair<int, int>>& resolutions,
                             const SphereBump& f1, const SphereBump& f2,
                             const SamplerConfig& cfg);

struct SetsDemoReport {
  SetInference result;
  CellSet x_prior;
  CellSet y_obs;
};

/// Small worked instance of set-level inference (randomized by seed), checked
/// through both the set-algebra and measure-algebra pipelines.
SetsDemoReport run_sets_demo(std::uint64_t seed);

}  // namespace mcal
