// SPDX-License-Identifier: Apache-2.0
#include "mcal/sphere.hpp"

#include <cmath>
#include <numbers>

namespace mcal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr int kQuadN = 8;
constexpr double kQuadX[kQuadN] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr double kQuadW[kQuadN] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

Eigen::Vector3d sphere_point(double z, double lon) {
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(lon), s * std::sin(lon), z};
}

}  // namespace

double bump_value(const SphereBump& bump, const Eigen::Vector3d& p) {
  return std::exp(bump.kappa * bump.center.normalized().dot(p));
}

SphereTiling::SphereTiling(int bands, int sectors) : bands_(bands), sectors_(sectors) {
  if (bands < 1 || sectors < 1)
    fail(errc::invalid_config, "tiling needs at least one band and one sector");
  tile_area_ = 4.0 * std::numbers::pi / (static_cast<double>(bands) * sectors);
  const Eigen::Index n = static_cast<Eigen::Index>(bands) * sectors;
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int b = 0; b < bands; ++b)
    for (int s = 0; s < sectors; ++s)
      labels.push_back("b" + std::to_string(b) + "s" + std::to_string(s));
  space_ = make_space("sphere" + std::to_string(bands) + "x" + std::to_string(sectors),
                      std::move(labels), Eigen::ArrayXd::Constant(n, tile_area_));
}

Eigen::Index SphereTiling::tile_of(double z, double lon) const {
  auto band = static_cast<Eigen::Index>((z + 1.0) / 2.0 * bands_);
  band = std::min<Eigen::Index>(std::max<Eigen::Index>(band, 0), bands_ - 1);
  double wrapped = std::fmod(lon, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  auto sector = static_cast<Eigen::Index>(wrapped / kTwoPi * sectors_);
  sector = std::min<Eigen::Index>(sector, sectors_ - 1);
  return band * sectors_ + sector;
}

GridMeasure SphereTiling::integrate_tiles(const SphereBump& f1, const SphereBump* f2) const {
  // Surface area element on the unit sphere is dz * dlon, so a tensor
  // Gauss-Legendre rule over [z0,z1] x [lon0,lon1] integrates exactly in
  // those variables.
  const double dz = 2.0 / bands_;
  const double dlon = kTwoPi / sectors_;
  Eigen::ArrayXd masses(space_->cell_count());
  for (int b = 0; b < bands_; ++b) {
    const double z0 = -1.0 + b * dz;
    for (int s = 0; s < sectors_; ++s) {
      const double lon0 = s * dlon;
      double acc = 0.0;
      for (int i = 0; i < kQuadN; ++i) {
        const double z = z0 + 0.5 * dz * (1.0 + kQuadX[i]);
        for (int j = 0; j < kQuadN; ++j) {
          const double lon = lon0 + 0.5 * dlon * (1.0 + kQuadX[j]);
          const Eigen::Vector3d p = sphere_point(z, lon);
          double value = bump_value(f1, p);
          if (f2) value *= bump_value(*f2, p);
          acc += kQuadW[i] * kQuadW[j] * value;
        }
      }
      masses(static_cast<Eigen::Index>(b) * sectors_ + s) = acc * 0.25 * dz * dlon;
    }
  }
  double total = 0.0;
  for (Eigen::Index c = 0; c < masses.size(); ++c) total += masses(c);
  return GridMeasure(space_, masses / (total * tile_area_), MeasureKind::probability);
}

GridMeasure SphereTiling::discretize(const SphereBump& f) const {
  return integrate_tiles(f, nullptr);
}

GridMeasure SphereTiling::product_oracle(const SphereBump& f1, const SphereBump& f2) const {
  return integrate_tiles(f1, &f2);
}

}  // namespace mcal
