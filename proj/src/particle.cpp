// SPDX-License-Identifier: Apache-2.0
#include "mcal/particle.hpp"

#include <cmath>

#include "mcal/errors.hpp"

namespace mcal {

void SamplerConfig::validate() const {
  if (streams < 1) fail(errc::invalid_config, "streams must be >= 1");
  if (n_samples < 1) fail(errc::invalid_config, "n_samples must be >= 1");
  if (attempt_cap < 1) fail(errc::invalid_config, "attempt_cap must be >= 1");
  if (acceptance_scale &&
      (!(*acceptance_scale > 0.0) || !std::isfinite(*acceptance_scale)))
    fail(errc::invalid_acceptance_scale, "acceptance scale must be a positive real");
}

namespace {
std::vector<long long> default_offsets(Eigen::Index n) {
  return {0, static_cast<long long>(n)};
}

void check_weights(const Eigen::ArrayXd& weights) {
  for (Eigen::Index i = 0; i < weights.size(); ++i)
    if (!(weights(i) >= 0.0) || !std::isfinite(weights(i)))
      fail(errc::invalid_config, "particle weight at " + std::to_string(i) + " is " +
                                     std::to_string(weights(i)));
}
}  // namespace

ParticleMeasure ParticleMeasure::cell_cloud(SpacePtr space, Eigen::VectorXi cells,
                                            Eigen::ArrayXd weights,
                                            std::vector<long long> stream_offsets) {
  if (!space) fail(errc::empty_space, "particle cloud over null space");
  if (cells.size() != weights.size())
    fail(errc::length_mismatch, "points/weights length mismatch");
  check_weights(weights);
  for (Eigen::Index i = 0; i < cells.size(); ++i)
    if (cells(i) < 0 || cells(i) >= space->cell_count())
      fail(errc::foreign_cell_set, "particle " + std::to_string(i) + " in cell " +
                                       std::to_string(cells(i)) + " outside the space");
  ParticleMeasure p;
  p.space_ = std::move(space);
  p.cells_ = std::move(cells);
  p.weights_ = std::move(weights);
  p.stream_offsets_ =
      stream_offsets.empty() ? default_offsets(p.weights_.size()) : std::move(stream_offsets);
  return p;
}

ParticleMeasure ParticleMeasure::coord_cloud(std::vector<std::string> coord_names,
                                             Eigen::MatrixXd coords, Eigen::ArrayXd weights,
                                             std::vector<long long> stream_offsets) {
  if (coords.rows() != weights.size())
    fail(errc::length_mismatch, "points/weights length mismatch");
  if (static_cast<Eigen::Index>(coord_names.size()) != coords.cols())
    fail(errc::length_mismatch, "coordinate names/columns mismatch");
  check_weights(weights);
  ParticleMeasure p;
  p.coord_names_ = std::move(coord_names);
  p.coords_ = std::move(coords);
  p.weights_ = std::move(weights);
  p.stream_offsets_ =
      stream_offsets.empty() ? default_offsets(p.weights_.size()) : std::move(stream_offsets);
  return p;
}

}  // namespace mcal
