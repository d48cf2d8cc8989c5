// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcal/space.hpp"

namespace mcal {

/// Sampling run configuration. Determinism contract: results are a pure
/// function of (seed, streams, n_samples, acceptance_scale), never of thread
/// count or scheduling.
struct SamplerConfig {
  std::uint64_t seed = 0;
  int streams = 1;
  long long n_samples = 0;
  /// Rejection acceptance scale k; unset means auto (exact grid maximum, or a
  /// pilot-run estimate with 20% headroom in analytic mode).
  std::optional<double> acceptance_scale = std::nullopt;
  /// Total attempted draws allowed before the run aborts.
  long long attempt_cap = 1'000'000'000;

  void validate() const;
};

/// A weighted multiset of points: either cells of a Space (grid clouds) or
/// real coordinate vectors (analytic clouds). Represents measures that need
/// not have a grid density, e.g. singular pushforwards.
class ParticleMeasure {
 public:
  ParticleMeasure() = default;  // empty cloud

  static ParticleMeasure cell_cloud(SpacePtr space, Eigen::VectorXi cells,
                                    Eigen::ArrayXd weights,
                                    std::vector<long long> stream_offsets = {});
  static ParticleMeasure coord_cloud(std::vector<std::string> coord_names,
                                     Eigen::MatrixXd coords, Eigen::ArrayXd weights,
                                     std::vector<long long> stream_offsets = {});

  bool is_cell_cloud() const noexcept { return space_ != nullptr; }
  Eigen::Index size() const noexcept { return weights_.size(); }

  const SpacePtr& space() const { return space_; }
  const Eigen::VectorXi& cells() const { return cells_; }
  const std::vector<std::string>& coord_names() const { return coord_names_; }
  const Eigen::MatrixXd& coords() const { return coords_; }  // one row per particle
  const Eigen::ArrayXd& weights() const noexcept { return weights_; }

  /// Half-open [offset[s], offset[s+1]) particle ranges per stream, in stream
  /// order; a single range covering everything when unset.
  const std::vector<long long>& stream_offsets() const noexcept { return stream_offsets_; }

 private:
  SpacePtr space_;
  Eigen::VectorXi cells_;
  std::vector<std::string> coord_names_;
  Eigen::MatrixXd coords_;
  Eigen::ArrayXd weights_;
  std::vector<long long> stream_offsets_;
};

}  // namespace mcal
