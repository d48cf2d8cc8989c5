// SPDX-License-Identifier: Apache-2.0
#include "mcal/measure.hpp"

#include <cmath>

namespace mcal {

GridMeasure::GridMeasure(SpacePtr space, Eigen::ArrayXd density, MeasureKind kind)
    : space_(std::move(space)), density_(std::move(density)), kind_(kind) {
  if (!space_) fail(errc::empty_space, "measure over null space");
  if (density_.size() != space_->cell_count())
    fail(errc::length_mismatch, "density has " + std::to_string(density_.size()) +
                                    " entries for " + std::to_string(space_->cell_count()) +
                                    " cells");
  for (Eigen::Index i = 0; i < density_.size(); ++i)
    if (!(density_(i) >= 0.0) || !std::isfinite(density_(i)))
      fail(errc::invalid_config, "density at cell " + std::to_string(i) + " is " +
                                     std::to_string(density_(i)));
  if (kind_ == MeasureKind::probability) {
    if (std::abs(total_mass(*this) - 1.0) > kProbabilityMassTol)
      fail(errc::not_probability,
           "total mass " + std::to_string(total_mass(*this)) + " differs from 1");
  }
}

double total_mass(const GridMeasure& m) {
  double sum = 0.0;
  const auto& d = m.density();
  const auto& v = m.space()->volumes();
  for (Eigen::Index i = 0; i < d.size(); ++i) sum += d(i) * v(i);
  return sum;
}

double measure_of(const GridMeasure& m, const CellSet& f) {
  if (!same_space(*m.space(), *f.space()))
    fail(errc::foreign_cell_set, "cell set belongs to space '" + f.space()->id() + "', not '" +
                                     m.space()->id() + "'");
  double sum = 0.0;
  for (Eigen::Index c : f.members()) sum += m.density()(c) * m.space()->volume(c);
  return sum;
}

GridMeasure measure_set(const SpacePtr& s, const CellSet& a, NormalizationMode mode) {
  if (!same_space(*s, *a.space()))
    fail(errc::foreign_cell_set, "cell set belongs to space '" + a.space()->id() + "', not '" +
                                     s->id() + "'");
  if (mode == NormalizationMode::renormalize && a.is_empty())
    fail(errc::empty_set_renormalize, "cannot renormalize the measure-set of an empty set");
  const double n_a = mode == NormalizationMode::renormalize ? set_volume(*s, a) : 1.0;
  Eigen::ArrayXd density = Eigen::ArrayXd::Zero(s->cell_count());
  for (Eigen::Index c : a.members()) density(c) = 1.0 / n_a;
  return GridMeasure(s, std::move(density),
                     mode == NormalizationMode::renormalize ? MeasureKind::probability
                                                            : MeasureKind::raw);
}

GridMeasure uniform_probability(const SpacePtr& s) {
  return measure_set(s, CellSet::full(s), NormalizationMode::renormalize);
}

void require_same_space(const GridMeasure& a, const GridMeasure& b) {
  if (!same_space(*a.space(), *b.space()))
    fail(errc::space_mismatch,
         "measures live on different spaces ('" + a.space()->id() + "' vs '" +
             b.space()->id() + "')");
}

GridMeasure intersect(const GridMeasure& nu1, const GridMeasure& nu2, NormalizationMode mode) {
  require_same_space(nu1, nu2);
  Eigen::ArrayXd product = nu1.density() * nu2.density();
  if (mode == NormalizationMode::unit_constant)
    return GridMeasure(nu1.space(), std::move(product), MeasureKind::raw);
  double n = 0.0;
  const auto& v = nu1.space()->volumes();
  for (Eigen::Index i = 0; i < product.size(); ++i) n += product(i) * v(i);
  if (n == 0.0)
    fail(errc::zero_overlap, "density product has zero total mass; intersection undefined");
  if (!std::isfinite(n)) fail(errc::zero_overlap, "density product has non-finite total mass");
  product /= n;
  return GridMeasure(nu1.space(), std::move(product), MeasureKind::probability);
}

GridMeasure condition(const GridMeasure& nu, const CellSet& a) {
  if (nu.kind() != MeasureKind::probability)
    fail(errc::not_probability, "conditioning requires a probability measure");
  if (measure_of(nu, a) == 0.0)
    fail(errc::zero_probability_conditioning,
         "conditioning set has zero probability under the measure");
  return intersect(nu, measure_set(nu.space(), a, NormalizationMode::renormalize),
                   NormalizationMode::renormalize);
}

CellSet support(const GridMeasure& m) {
  std::vector<Eigen::Index> cells;
  for (Eigen::Index i = 0; i < m.density().size(); ++i)
    if (m.density()(i) * m.space()->volume(i) > 0.0) cells.push_back(i);
  return CellSet(m.space(), std::move(cells));
}

}  // namespace mcal
