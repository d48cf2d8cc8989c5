// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mcal/mapping.hpp"
#include "mcal/measure.hpp"
#include "mcal/particle.hpp"

namespace mcal {

/// Shortest-roundtrip 17-significant-digit decimal form.
std::string g17(double value);

/// One row per cell: cell_label,volume,density,probability
/// (probability = density * volume).
std::string measure_csv(const GridMeasure& m);

/// One row per particle: stream,index,cell_or_coords,weight. Coordinates of
/// multi-D particles are joined with ';'.
std::string particles_csv(const ParticleMeasure& p);

/// One row per codomain cell: cell,lhs_density,rhs_density,gap.
std::string compat_csv(const CompatReport& report);

}  // namespace mcal
