// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <functional>

#include "mcal/generators.hpp"
#include "mcal/mapping.hpp"

using namespace mcal;

namespace {

Eigen::ArrayXd arr(std::initializer_list<double> values) {
  Eigen::ArrayXd a(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) a(i++) = v;
  return a;
}

const SpacePtr unit3 = make_space("x3", {"x0", "x1", "x2"}, {1.0, 1.0, 1.0});
const SpacePtr unit2 = make_space("y2", {"a", "b"}, {1.0, 1.0});
const CellMapping merge(unit3, unit2, {0, 0, 1});  // {x0->a, x1->a, x2->b}

}  // namespace

TEST_CASE("preimage is a table lookup with the indicator identity") {
  const CellMapping id = CellMapping::identity(unit3);
  CHECK(set_equal(preimage(id, CellSet(unit3, {1})), CellSet(unit3, {1})));
  CHECK(set_equal(preimage(merge, CellSet(unit2, {0})), CellSet(unit3, {0, 1})));
  CHECK(set_equal(preimage(merge, CellSet::empty(unit2)), CellSet::empty(unit3)));

  InstanceGen gen(21);
  for (int round = 0; round < 100; ++round) {
    const SpacePtr x = gen.space(1, 8, "x");
    const SpacePtr y = gen.space(1, 8, "y");
    const CellMapping phi = gen.mapping(x, y);
    const CellSet b = gen.cellset(y, true);
    const Eigen::ArrayXd chi_b = b.indicator();
    const Eigen::ArrayXd xi = preimage(phi, b).indicator();
    for (Eigen::Index i = 0; i < x->cell_count(); ++i) CHECK(xi(i) == chi_b(phi(i)));
  }
}

TEST_CASE("pushforward accumulates preimage masses") {
  const GridMeasure pi(unit3, arr({0.2, 0.3, 0.5}), MeasureKind::probability);
  const GridMeasure image = pushforward(pi, merge);
  CHECK(image.density()(0) == 0.5);
  CHECK(image.density()(1) == 0.5);
  CHECK(total_mass(image) == 1.0);

  const GridMeasure same = pushforward(pi, CellMapping::identity(unit3));
  CHECK((same.density() == pi.density()).all());

  const SpacePtr one = make_space("one", {"o"}, {1.0});
  const CellMapping collapse(unit3, one, {0, 0, 0});
  CHECK(pushforward(pi, collapse).density()(0) == total_mass(pi));

  CHECK_THROWS_AS(pushforward(GridMeasure(unit2, arr({1.0, 1.0})), merge), Error);
}

TEST_CASE("pushforward satisfies the defining relation and support law") {
  InstanceGen gen(23);
  for (int round = 0; round < 200; ++round) {
    const SpacePtr x = gen.space(1, 10, "x");
    const SpacePtr y = gen.space(1, 10, "y");
    const CellMapping phi = gen.mapping(x, y);
    const GridMeasure pi = gen.raw_measure(x, round % 3 == 0);
    const GridMeasure image = pushforward(pi, phi);

    CHECK(measure_of(image, CellSet::empty(y)) == 0.0);
    for (int trial = 0; trial < 6; ++trial) {
      const CellSet f = gen.cellset(y, true);
      CHECK(std::abs(measure_of(image, f) - measure_of(pi, preimage(phi, f))) <= 1e-12);
    }
    CHECK(set_equal(support(image), image_set(phi, support(pi))));
  }
}

TEST_CASE("pullback composes the codomain density") {
  const SpacePtr y = make_space("y", {"y0", "y1"}, {1.0, 1.0});
  const GridMeasure tau(y, arr({2.0, 0.0}));
  const CellMapping phi(unit3, y, {0, 0, 1});
  const GridMeasure back = pullback(tau, phi, NormalizationMode::renormalize);
  CHECK(back.density()(0) == 0.5);
  CHECK(back.density()(1) == 0.5);
  CHECK(back.density()(2) == 0.0);

  // tau = nu pulls back to a constant density: the reciprocal image of the
  // base measure is proportional to the domain base measure.
  const GridMeasure base(y, arr({1.0, 1.0}));
  const GridMeasure flat = pullback(base, phi, NormalizationMode::unit_constant);
  CHECK((flat.density() == arr({1.0, 1.0, 1.0})).all());

  const GridMeasure outside(y, arr({0.0, 1.0}));
  const CellMapping into_y0(unit3, y, {0, 0, 0});
  CHECK_THROWS_AS(pullback(outside, into_y0, NormalizationMode::renormalize), Error);
}

TEST_CASE("pullback of a measure-set is the measure-set of the preimage") {
  InstanceGen gen(25);
  for (int round = 0; round < 200; ++round) {
    const SpacePtr x = gen.space(1, 9, "x");
    const SpacePtr y = gen.space(1, 9, "y");
    const CellMapping phi = gen.mapping(x, y);
    const CellSet b = gen.cellset(y, true);
    const auto unit = NormalizationMode::unit_constant;
    const GridMeasure pulled = pullback(measure_set(y, b, unit), phi, unit);
    CHECK((pulled.density() == measure_set(x, preimage(phi, b), unit).density()).all());
    CHECK(set_equal(support(pulled), preimage(phi, b)));
  }
}

TEST_CASE("change of variables: both integral routes agree") {
  InstanceGen gen(27);
  for (int round = 0; round < 300; ++round) {
    const SpacePtr x = gen.space(1, 10, "x");
    const SpacePtr y = gen.space(1, 10, "y");
    const CellMapping phi = gen.mapping(x, y);
    const GridMeasure pi = gen.raw_measure(x, round % 4 == 0);
    Eigen::ArrayXd k_values(y->cell_count());
    for (Eigen::Index i = 0; i < k_values.size(); ++i) k_values(i) = gen.uniform(-2.0, 2.0);
    const TestFunction k(y, k_values);
    const CellSet f = gen.cellset(y, true);

    const double via_image = integrate_against(k, pushforward(pi, phi), f);

    Eigen::ArrayXd composed(x->cell_count());
    for (Eigen::Index i = 0; i < composed.size(); ++i) composed(i) = k_values(phi(i));
    const double via_preimage =
        integrate_against(TestFunction(x, composed), pi, preimage(phi, f));

    CHECK(std::abs(via_image - via_preimage) <= 1e-12);
  }
}

TEST_CASE("integrate_against reduces to measure_of on indicators") {
  const GridMeasure m(unit3, arr({0.2, 0.3, 0.5}), MeasureKind::probability);
  const TestFunction ones(unit3, arr({1.0, 1.0, 1.0}));
  CHECK(integrate_against(ones, m, CellSet::full(unit3)) == 1.0);

  const CellSet f_prime(unit3, {1, 2});
  const TestFunction indicator(unit3, f_prime.indicator());
  const CellSet f(unit3, {0, 1});
  CHECK(integrate_against(indicator, m, f) ==
        measure_of(m, set_intersection(f, f_prime)));
}

TEST_CASE("compatibility identity holds on randomized instances") {
  InstanceGen gen(29);
  for (int round = 0; round < 200; ++round) {
    const SpacePtr x = gen.space(1, 12, "x");
    const SpacePtr y = gen.space(1, 12, "y");
    const CellMapping phi = gen.mapping(x, y);
    const GridMeasure pi = gen.raw_measure(x, round % 4 == 3);
    const GridMeasure tau = gen.raw_measure(y, round % 4 == 3);
    const auto mode = round % 2 == 0 ? NormalizationMode::renormalize
                                     : NormalizationMode::unit_constant;
    const CompatReport report = check_compatibility(pi, tau, phi, mode);
    CHECK(report.max_abs_gap <= 1e-12);
  }
}

TEST_CASE("compatibility on measure-sets reproduces the set identity") {
  InstanceGen gen(31);
  for (int round = 0; round < 100; ++round) {
    const SpacePtr x = gen.space(2, 9, "x");
    const SpacePtr y = gen.space(2, 9, "y");
    const CellMapping phi = gen.mapping(x, y);
    const CellSet a = gen.cellset(x, false);
    const CellSet b = gen.cellset(y, false);
    const auto unit = NormalizationMode::unit_constant;
    const CompatReport report = check_compatibility(
        measure_set(x, a, unit), measure_set(y, b, unit), phi, unit);
    CHECK(report.max_abs_gap <= 1e-12);
    const CellSet expected = image_set(phi, set_intersection(a, preimage(phi, b)));
    CHECK(set_equal(support(report.lhs), expected));
    CHECK(set_equal(support(report.rhs), expected));
  }
}

TEST_CASE("intersecting the pushforward with the base measure is the identity") {
  InstanceGen gen(33);
  const SpacePtr x = gen.space(2, 8, "x");
  const SpacePtr y = gen.space(2, 8, "y");
  const CellMapping phi = gen.mapping(x, y);
  const GridMeasure pi = gen.probability_measure(x, false);
  const GridMeasure base(y, Eigen::ArrayXd::Ones(y->cell_count()));
  const CompatReport report =
      check_compatibility(pi, base, phi, NormalizationMode::renormalize);
  const GridMeasure forward = pushforward(pi, phi);
  for (Eigen::Index c = 0; c < y->cell_count(); ++c)
    CHECK(report.rhs.density()(c) == doctest::Approx(forward.density()(c)).epsilon(1e-12));
}

TEST_CASE("degenerate compatibility reports gap zero instead of erroring") {
  const GridMeasure pi(unit3, arr({1.0, 0.0, 0.0}));
  const SpacePtr y = make_space("y", {"y0", "y1"}, {1.0, 1.0});
  const GridMeasure tau(y, arr({0.0, 1.0}));
  const CellMapping into_y0(unit3, y, {0, 0, 0});
  const CompatReport report =
      check_compatibility(pi, tau, into_y0, NormalizationMode::renormalize);
  CHECK(report.degenerate);
  CHECK(report.max_abs_gap == 0.0);

  // Set-image containment: the support of the pushforward of intersected
  // measure-sets is contained in the intersection of the image supports.
  InstanceGen gen(35);
  for (int round = 0; round < 100; ++round) {
    const SpacePtr xs = gen.space(2, 9, "x");
    const SpacePtr ys = gen.space(2, 9, "y");
    const CellMapping phi = gen.mapping(xs, ys);
    const CellSet a1 = gen.cellset(xs, false);
    const CellSet a2 = gen.cellset(xs, false);
    const auto unit = NormalizationMode::unit_constant;
    const CellSet lhs = support(pushforward(
        intersect(measure_set(xs, a1, unit), measure_set(xs, a2, unit), unit), phi));
    const CellSet rhs = set_intersection(image_set(phi, a1), image_set(phi, a2));
    CHECK(set_equal(set_intersection(lhs, rhs), lhs));  // lhs is a subset of rhs
  }
}
