// SPDX-License-Identifier: Apache-2.0
#include "mcal/generators.hpp"

#include <algorithm>

namespace mcal {

double InstanceGen::uniform(double lo, double hi) {
  return lo + (hi - lo) * rng_.next_double();
}

Eigen::Index InstanceGen::below(Eigen::Index n) {
  return static_cast<Eigen::Index>(rng_.next_double() * static_cast<double>(n));
}

bool InstanceGen::coin(double p) { return rng_.next_double() < p; }

SpacePtr InstanceGen::space(Eigen::Index min_cells, Eigen::Index max_cells,
                            const std::string& id, bool unit_volumes) {
  const Eigen::Index n = min_cells + below(max_cells - min_cells + 1);
  std::vector<std::string> labels;
  Eigen::ArrayXd volumes(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    labels.push_back(id + std::to_string(i));
    volumes(i) = unit_volumes ? 1.0 : uniform(0.2, 2.0);
  }
  return make_space(id, std::move(labels), std::move(volumes));
}

GridMeasure InstanceGen::raw_measure(const SpacePtr& s, bool with_zeros) {
  Eigen::ArrayXd density(s->cell_count());
  for (Eigen::Index i = 0; i < density.size(); ++i) density(i) = uniform(0.05, 3.0);
  if (with_zeros) {
    for (Eigen::Index i = 0; i < density.size(); ++i)
      if (coin(0.4)) density(i) = 0.0;
    density(below(density.size())) = uniform(0.05, 3.0);  // keep the measure nonzero
  }
  return GridMeasure(s, std::move(density), MeasureKind::raw);
}

GridMeasure InstanceGen::probability_measure(const SpacePtr& s, bool with_zeros) {
  GridMeasure raw = raw_measure(s, with_zeros);
  const double total = total_mass(raw);
  return GridMeasure(s, raw.density() / total, MeasureKind::probability);
}

CellMapping InstanceGen::mapping(const SpacePtr& domain, const SpacePtr& codomain) {
  std::vector<Eigen::Index> table(static_cast<size_t>(domain->cell_count()));
  for (auto& t : table) t = below(codomain->cell_count());
  return CellMapping(domain, codomain, std::move(table));
}

CellSet InstanceGen::cellset(const SpacePtr& s, bool allow_empty) {
  std::vector<Eigen::Index> members;
  for (Eigen::Index i = 0; i < s->cell_count(); ++i)
    if (coin()) members.push_back(i);
  if (!allow_empty && members.empty()) members.push_back(below(s->cell_count()));
  return CellSet(s, std::move(members));
}

CompatSuiteResult run_compat_suite(Eigen::Index max_cells, int trials, std::uint64_t seed,
                                   NormalizationMode mode) {
  CompatSuiteResult result;
  result.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    InstanceGen gen(seed, static_cast<std::uint64_t>(trial));
    const bool with_zeros = trial % 4 == 3;
    const SpacePtr x = gen.space(1, max_cells, "x");
    const SpacePtr y = gen.space(1, max_cells, "y");
    const GridMeasure pi = gen.raw_measure(x, with_zeros);
    const GridMeasure tau = gen.raw_measure(y, with_zeros);
    const CellMapping phi = gen.mapping(x, y);
    const CompatReport report = check_compatibility(pi, tau, phi, mode);
    if (report.degenerate) ++result.degenerate;
    result.max_abs_gap = std::max(result.max_abs_gap, report.max_abs_gap);
    result.max_measure_gap = std::max(result.max_measure_gap, report.max_measure_gap);
  }
  return result;
}

}  // namespace mcal
