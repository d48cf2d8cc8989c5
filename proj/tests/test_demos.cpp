// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "mcal/demos.hpp"

using namespace mcal;

namespace {
SamplerConfig cfg_of(std::uint64_t seed, long long n, int streams = 4) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  cfg.streams = streams;
  return cfg;
}
}  // namespace

TEST_CASE("lognormal law on a log axis") {
  const SpacePtr axis = lognormal_axis(5.0, 0.5, 40, 5.0);
  CHECK(axis->cell_count() == 40);
  const GridMeasure law = lognormal_on_log_axis(axis, 5.0, 0.5);
  CHECK(total_mass(law) == doctest::Approx(1.0).epsilon(1e-12));

  // The median splits the law in half.
  std::vector<Eigen::Index> lower;
  for (Eigen::Index c = 0; c < axis->cell_count(); ++c)
    if (axis->edges()(c + 1) <= 5.0 + 1e-12) lower.push_back(c);
  CHECK(measure_of(law, CellSet(axis, lower)) == doctest::Approx(0.5).epsilon(1e-6));

  // sigma = 0 is a point mass in the cell containing the median.
  const GridMeasure point = lognormal_on_log_axis(axis, 5.0, 0.0);
  CHECK(total_mass(point) == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::Index hot = -1;
  for (Eigen::Index c = 0; c < axis->cell_count(); ++c)
    if (point.density()(c) > 0.0) hot = c;
  REQUIRE(hot >= 0);
  CHECK(axis->edges()(hot) <= 5.0);
  CHECK(5.0 < axis->edges()(hot + 1));
}

TEST_CASE("resistance demo converges to the closed form") {
  const ResistanceReport report = run_resistance_demo(10.0, 2.0, 0.3, 0.4, cfg_of(1, 100000));
  CHECK(report.r0_expected == 5.0);
  CHECK(report.sigma_r_expected == 0.5);
  CHECK(std::abs(report.r0_hat - 5.0) / 5.0 <= 0.02);
  CHECK(std::abs(report.sigma_r_hat - 0.5) / 0.5 <= 0.02);
  CHECK(report.tv_log_grid <= 0.02);

  // Degenerate spread: every ratio equals V0/I0 exactly and the histogram
  // collapses onto the law's point-mass cell.
  const CoordSampler degenerate{{"V", "I"}, [](StreamRng&) {
                                  Eigen::VectorXd x(2);
                                  x << 10.0 * std::exp(0.0), 2.0 * std::exp(0.0);
                                  return x;
                                }};
  const ParticleMeasure ratios =
      transport(sample_coords(degenerate, cfg_of(2, 1000)), ExprMapping({"V", "I"}, {{"R", "V/I"}}));
  CHECK((ratios.coords().col(0).array() == 5.0).all());

  const ResistanceReport exact_case =
      run_resistance_demo(10.0, 2.0, 0.0, 0.0, cfg_of(2, 10000));
  CHECK(exact_case.r0_hat == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(exact_case.sigma_r_hat <= 1e-12);
  CHECK(exact_case.tv_log_grid == 0.0);

  CHECK_THROWS_AS(run_resistance_demo(10.0, 2.0, 0.3, 0.4, cfg_of(3, 100)), Error);
  CHECK_THROWS_AS(run_resistance_demo(-1.0, 2.0, 0.3, 0.4, cfg_of(3, 10000)), Error);
}

TEST_CASE("sphere tiling is equal-area and locates points") {
  const SphereTiling tiling(4, 8);
  CHECK(tiling.space()->cell_count() == 32);
  CHECK(tiling.tile_area() == 4.0 * std::numbers::pi / 32.0);
  CHECK((tiling.space()->volumes() == tiling.tile_area()).all());

  // Brute-force check of the locator against the band/sector edges.
  for (int b = 0; b < 4; ++b)
    for (int s = 0; s < 8; ++s) {
      const double z = -1.0 + (b + 0.5) * 0.5;
      const double lon = (s + 0.5) * std::numbers::pi / 4.0;
      CHECK(tiling.tile_of(z, lon) == b * 8 + s);
    }
  CHECK(tiling.tile_of(-1.0, 0.0) == 0);
  CHECK(tiling.tile_of(1.0, 2.0 * std::numbers::pi - 1e-9) == 31);

  // kappa = 0 discretizes to the uniform tile measure.
  const GridMeasure flat = tiling.discretize(SphereBump{{0, 0, 1}, 0.0});
  for (Eigen::Index c = 0; c < 32; ++c)
    CHECK(flat.density()(c) ==
          doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("sphere demo: uniform bumps give a uniform intersection") {
  const SphereBump flat1{{0, 0, 1}, 0.0};
  const SphereBump flat2{{1, 0, 0}, 0.0};
  const SphereReport report =
      run_sphere_demo({{4, 8}}, flat1, flat2, cfg_of(4, 200000));
  REQUIRE(report.resolutions.size() == 1);
  CHECK(report.resolutions[0].tv_to_product <= 0.01);
  // Uniform measures coincide in every tile with probability 1/N.
  CHECK(report.resolutions[0].predicted_rate == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("sphere demo TV shrinks as tiles halve") {
  const SphereBump f1{{std::sqrt(3.0) / 2.0, 0.0, 0.5}, 4.0};
  const SphereBump f2{{std::sqrt(3.0) / 2.0, 0.0, -0.5}, 4.0};
  const SphereReport report =
      run_sphere_demo({{4, 8}, {8, 8}}, f1, f2, cfg_of(5, 200000));
  REQUIRE(report.resolutions.size() == 2);
  CHECK(report.resolutions[1].tile_area ==
        doctest::Approx(report.resolutions[0].tile_area / 2.0));
  CHECK(report.resolutions[1].tv_to_product <=
        report.resolutions[0].tv_to_product + 0.005);
}

TEST_CASE("sets demo runs consistently over seeds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetsDemoReport report = run_sets_demo(seed);
    CHECK(set_equal(report.result.y_post,
                    image_set(CellMapping::identity(report.result.y_post.space()),
                              report.result.y_post)));
  }
}
