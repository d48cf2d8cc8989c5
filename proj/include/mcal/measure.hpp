// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "mcal/space.hpp"

namespace mcal {

/// Normalization policy for operations that carry a free constant:
/// unit_constant keeps n = 1 (arbitrary measures), renormalize divides by the
/// total so the result is a probability measure.
enum class NormalizationMode { unit_constant, renormalize };

enum class MeasureKind { raw, probability };

/// Tolerance on |total mass - 1| accepted for probability-kind measures.
inline constexpr double kProbabilityMassTol = 1e-12;

/// A measure absolutely continuous w.r.t. its space's base measure: one
/// nonnegative density value per cell (the piecewise-constant Radon-Nikodym
/// derivative). Immutable value type; operations are pure functions.
class GridMeasure {
 public:
  GridMeasure(SpacePtr space, Eigen::ArrayXd density, MeasureKind kind = MeasureKind::raw);

  const SpacePtr& space() const noexcept { return space_; }
  const Eigen::ArrayXd& density() const noexcept { return density_; }
  MeasureKind kind() const noexcept { return kind_; }

  /// Per-cell masses density*volume (an Eigen expression-friendly copy).
  Eigen::ArrayXd cell_masses() const { return density_ * space_->volumes(); }

 private:
  SpacePtr space_;
  Eigen::ArrayXd density_;
  MeasureKind kind_;
};

/// Total mass: left-to-right fold of density*volume in cell order.
double total_mass(const GridMeasure& m);

/// Measure of a set of cells: fold of density*volume over the members.
double measure_of(const GridMeasure& m, const CellSet& f);

/// Measure with density proportional to the set's characteristic function:
/// 1/n_A on members, 0 elsewhere, with n_A = 1 (unit_constant) or the set's
/// base volume (renormalize, yielding a probability measure).
GridMeasure measure_set(const SpacePtr& s, const CellSet& a, NormalizationMode mode);

/// Uniform probability measure (constant density 1/total volume).
GridMeasure uniform_probability(const SpacePtr& s);

/// Intersection of two measures on the same space: cellwise density product
/// divided by n, where n = 1 (unit_constant) or the product's total mass
/// (renormalize; requires 0 < n < inf, else ZeroOverlap).
GridMeasure intersect(const GridMeasure& nu1, const GridMeasure& nu2, NormalizationMode mode);

/// Conditioning of a probability measure on a set: the intersection with the
/// renormalized measure-set of `a`, which reproduces the Kolmogorov quotient
/// nu[F & A] / nu[A].
GridMeasure condition(const GridMeasure& nu, const CellSet& a);

/// Cells with strictly positive mass.
CellSet support(const GridMeasure& m);

void require_same_space(const GridMeasure& a, const GridMeasure& b);

}  // namespace mcal
