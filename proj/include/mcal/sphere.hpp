// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "mcal/measure.hpp"
#include "mcal/space.hpp"

namespace mcal {

/// Smooth positive density bump on the unit sphere, proportional to
/// exp(kappa * <p, center>).
struct SphereBump {
  Eigen::Vector3d center{0.0, 0.0, 1.0};
  double kappa = 1.0;
};

double bump_value(const SphereBump& bump, const Eigen::Vector3d& p);

/// Equal-area tiling of the unit sphere: `bands` latitude bands of equal
/// z-height, each cut into `sectors` longitude sectors. Every tile has the
/// identical area 4*pi / (bands*sectors), exactly.
class SphereTiling {
 public:
  SphereTiling(int bands, int sectors);

  const SpacePtr& space() const noexcept { return space_; }
  int bands() const noexcept { return bands_; }
  int sectors() const noexcept { return sectors_; }
  double tile_area() const noexcept { return tile_area_; }

  /// Tile containing the point at height z in [-1, 1] and longitude
  /// lon in [0, 2*pi).
  Eigen::Index tile_of(double z, double lon) const;

  /// Probability measure on the tiles with cell masses proportional to
  /// the per-tile integrals of the bump (Gauss-Legendre quadrature).
  GridMeasure discretize(const SphereBump& f) const;

  /// Probability measure with cell masses proportional to the per-tile
  /// integrals of the pointwise product f1*f2: the normalized-product
  /// reference the coincidence sampler is checked against.
  GridMeasure product_oracle(const SphereBump& f1, const SphereBump& f2) const;

 private:
  GridMeasure integrate_tiles(const SphereBump& f1, const SphereBump* f2) const;

  int bands_;
  int sectors_;
  double tile_area_;
  SpacePtr space_;
};

}  // namespace mcal
