// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mcal/mapping.hpp"
#include "mcal/measure.hpp"
#include "mcal/rng.hpp"

namespace mcal {

/// Randomized desk-scale instances for the theorem suites: small spaces,
/// positive (optionally zero-padded) densities, arbitrary cell maps.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}

  StreamRng& rng() noexcept { return rng_; }
  double uniform(double lo, double hi);
  Eigen::Index below(Eigen::Index n);
  bool coin(double p = 0.5);

  SpacePtr space(Eigen::Index min_cells, Eigen::Index max_cells, const std::string& id,
                 bool unit_volumes = false);
  /// Positive densities in [0.05, 3); with_zeros adds adversarial zero cells
  /// (always keeping at least one positive).
  GridMeasure raw_measure(const SpacePtr& s, bool with_zeros);
  GridMeasure probability_measure(const SpacePtr& s, bool with_zeros);
  CellMapping mapping(const SpacePtr& domain, const SpacePtr& codomain);
  CellSet cellset(const SpacePtr& s, bool allow_empty);

 private:
  StreamRng rng_;
};

struct CompatSuiteResult {
  double max_abs_gap = 0.0;
  double max_measure_gap = 0.0;
  int degenerate = 0;
  int trials = 0;
};

/// Randomized compatibility-theorem suite: `trials` independent (pi, tau,
/// phi) instances on spaces of up to `max_cells` cells, every fourth one with
/// adversarial zero densities. Returns the worst gaps observed.
CompatSuiteResult run_compat_suite(Eigen::Index max_cells, int trials, std::uint64_t seed,
                                   NormalizationMode mode);

}  // namespace mcal
