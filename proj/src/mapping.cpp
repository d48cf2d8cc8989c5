// SPDX-License-Identifier: Apache-2.0
#include "mcal/mapping.hpp"

#include <cmath>

namespace mcal {

CellMapping::CellMapping(SpacePtr domain, SpacePtr codomain, std::vector<Eigen::Index> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (!domain_ || !codomain_) fail(errc::empty_space, "mapping over null space");
  if (static_cast<Eigen::Index>(table_.size()) != domain_->cell_count())
    fail(errc::length_mismatch, "mapping table has " + std::to_string(table_.size()) +
                                    " entries for " + std::to_string(domain_->cell_count()) +
                                    " domain cells");
  for (Eigen::Index t : table_)
    if (t < 0 || t >= codomain_->cell_count())
      fail(errc::foreign_cell_set,
           "mapping table entry " + std::to_string(t) + " outside codomain '" +
               codomain_->id() + "'");
}

CellMapping CellMapping::identity(SpacePtr space) {
  std::vector<Eigen::Index> table(static_cast<size_t>(space->cell_count()));
  for (size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Eigen::Index>(i);
  return CellMapping(space, space, std::move(table));
}

TestFunction::TestFunction(SpacePtr space_in, Eigen::ArrayXd values_in)
    : space(std::move(space_in)), values(std::move(values_in)) {
  if (values.size() != space->cell_count())
    fail(errc::length_mismatch, "test function has " + std::to_string(values.size()) +
                                    " values for " + std::to_string(space->cell_count()) +
                                    " cells");
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (!std::isfinite(values(i)))
      fail(errc::invalid_config, "test function value at cell " + std::to_string(i) +
                                     " is not finite");
}

CellSet preimage(const CellMapping& phi, const CellSet& f) {
  if (!same_space(*phi.codomain(), *f.space()))
    fail(errc::foreign_cell_set, "preimage set must live on the mapping codomain");
  std::vector<Eigen::Index> cells;
  for (Eigen::Index i = 0; i < phi.domain()->cell_count(); ++i)
    if (f.contains(phi(i))) cells.push_back(i);
  return CellSet(phi.domain(), std::move(cells));
}

CellSet image_set(const CellMapping& phi, const CellSet& a) {
  if (!same_space(*phi.domain(), *a.space()))
    fail(errc::foreign_cell_set, "image set must live on the mapping domain");
  std::vector<Eigen::Index> cells;
  for (Eigen::Index i : a.members()) cells.push_back(phi(i));
  return CellSet(phi.codomain(), std::move(cells));
}

GridMeasure pushforward(const GridMeasure& pi, const CellMapping& phi) {
  if (!same_space(*pi.space(), *phi.domain()))
    fail(errc::space_mismatch, "measure does not live on the mapping domain");
  Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(phi.codomain()->cell_count());
  const auto& d = pi.density();
  const auto& v = pi.space()->volumes();
  for (Eigen::Index i = 0; i < d.size(); ++i) mass(phi(i)) += d(i) * v(i);
  return GridMeasure(phi.codomain(), mass / phi.codomain()->volumes(), pi.kind());
}

GridMeasure pullback(const GridMeasure& tau, const CellMapping& phi, NormalizationMode mode) {
  if (!same_space(*tau.space(), *phi.codomain()))
    fail(errc::space_mismatch, "measure does not live on the mapping codomain");
  Eigen::ArrayXd composed(phi.domain()->cell_count());
  for (Eigen::Index i = 0; i < composed.size(); ++i) composed(i) = tau.density()(phi(i));
  if (mode == NormalizationMode::unit_constant)
    return GridMeasure(phi.domain(), std::move(composed), MeasureKind::raw);
  double n = 0.0;
  const auto& v = phi.domain()->volumes();
  for (Eigen::Index i = 0; i < composed.size(); ++i) n += composed(i) * v(i);
  if (n == 0.0)
    fail(errc::zero_pullback_mass, "composed density has zero mass against the domain base");
  if (!std::isfinite(n))
    fail(errc::zero_pullback_mass, "composed density has non-finite mass");
  composed /= n;
  return GridMeasure(phi.domain(), std::move(composed), MeasureKind::probability);
}

double integrate_against(const TestFunction& k, const GridMeasure& m, const CellSet& f) {
  if (!same_space(*k.space, *m.space()))
    fail(errc::space_mismatch, "test function does not live on the measure's space");
  if (!same_space(*f.space(), *m.space()))
    fail(errc::foreign_cell_set, "integration set does not live on the measure's space");
  double sum = 0.0;
  for (Eigen::Index c : f.members())
    sum += k.values(c) * m.density()(c) * m.space()->volume(c);
  return sum;
}

CompatReport check_compatibility(const GridMeasure& pi, const GridMeasure& tau,
                                 const CellMapping& phi, NormalizationMode mode) {
  if (!same_space(*pi.space(), *phi.domain()))
    fail(errc::space_mismatch, "pi does not live on the mapping domain");
  if (!same_space(*tau.space(), *phi.codomain()))
    fail(errc::space_mismatch, "tau does not live on the mapping codomain");

  if (mode == NormalizationMode::renormalize) {
    // Shared normalization constant of both sides; zero means the identity
    // holds vacuously (both sides vanish).
    double n = 0.0;
    const auto& v = pi.space()->volumes();
    for (Eigen::Index i = 0; i < pi.density().size(); ++i)
      n += pi.density()(i) * tau.density()(phi(i)) * v(i);
    if (n == 0.0) {
      GridMeasure zero(phi.codomain(), Eigen::ArrayXd::Zero(phi.codomain()->cell_count()));
      return CompatReport{zero, zero, 0.0, 0.0, true};
    }
  }

  GridMeasure lhs = pushforward(intersect(pi, pullback(tau, phi, mode), mode), phi);
  GridMeasure rhs = intersect(pushforward(pi, phi), tau, mode);
  const bool degenerate = total_mass(lhs) == 0.0 && total_mass(rhs) == 0.0;

  double max_density_gap = 0.0;
  double max_measure_gap = 0.0;
  for (Eigen::Index c = 0; c < lhs.density().size(); ++c) {
    const double dgap = std::abs(lhs.density()(c) - rhs.density()(c));
    max_density_gap = std::max(max_density_gap, dgap);
    max_measure_gap = std::max(max_measure_gap, dgap * phi.codomain()->volume(c));
  }
  return CompatReport{std::move(lhs), std::move(rhs), max_density_gap, max_measure_gap,
                      degenerate};
}

}  // namespace mcal
