// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "mcal/measure.hpp"
#include "mcal/space.hpp"

namespace mcal {

/// A measurable map between finite partitions, given as a total
/// domain-cell -> codomain-cell table.
class CellMapping {
 public:
  CellMapping(SpacePtr domain, SpacePtr codomain, std::vector<Eigen::Index> table);

  static CellMapping identity(SpacePtr space);

  const SpacePtr& domain() const noexcept { return domain_; }
  const SpacePtr& codomain() const noexcept { return codomain_; }
  const std::vector<Eigen::Index>& table() const noexcept { return table_; }
  Eigen::Index operator()(Eigen::Index domain_cell) const {
    return table_[static_cast<size_t>(domain_cell)];
  }

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<Eigen::Index> table_;
};

/// A simple measurable function: one finite real value per cell.
struct TestFunction {
  TestFunction(SpacePtr space, Eigen::ArrayXd values);
  SpacePtr space;
  Eigen::ArrayXd values;
};

/// All domain cells whose image lies in `f`. Satisfies the indicator
/// identity: indicator(preimage(phi, B)) == indicator(B) composed with phi.
CellSet preimage(const CellMapping& phi, const CellSet& f);

/// Set-theoretic image {phi(i) : i in a}.
CellSet image_set(const CellMapping& phi, const CellSet& a);

/// Image measure phi[pi]: mass of each codomain cell is the mass of its
/// preimage, accumulated in ascending domain-cell order; the density is the
/// mass divided by the codomain cell volume.
GridMeasure pushforward(const GridMeasure& pi, const CellMapping& phi);

/// Reciprocal image: density on the domain is the codomain density composed
/// with phi, divided by n = 1 (unit_constant) or by its integral against the
/// domain base measure (renormalize; requires 0 < n < inf).
GridMeasure pullback(const GridMeasure& tau, const CellMapping& phi, NormalizationMode mode);

/// Integral of K over `f` against m: fold of K*density*volume over members.
double integrate_against(const TestFunction& k, const GridMeasure& m, const CellSet& f);

struct CompatReport {
  GridMeasure lhs;          ///< phi[pi & pullback(tau)]
  GridMeasure rhs;          ///< phi[pi] & tau
  double max_abs_gap;       ///< max cellwise |lhs - rhs| density gap
  double max_measure_gap;   ///< max gap of measures over singleton cell sets
  bool degenerate;          ///< both sides vanish; the identity holds vacuously
};

/// Evaluates both sides of the identity phi[pi & phi^-1[tau]] = phi[pi] & tau
/// by independent routes and reports the cellwise gaps. In renormalize mode
/// each side is normalized to a probability measure before comparison; when
/// the shared normalization constant vanishes the report is degenerate with
/// gap 0 instead of an error.
CompatReport check_compatibility(const GridMeasure& pi, const GridMeasure& tau,
                                 const CellMapping& phi, NormalizationMode mode);

}  // namespace mcal
