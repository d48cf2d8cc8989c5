// SPDX-License-Identifier: Apache-2.0
#include "mcal/csv.hpp"

#include <cmath>
#include <cstdio>

namespace mcal {

std::string g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string measure_csv(const GridMeasure& m) {
  std::string out = "cell_label,volume,density,probability\n";
  for (Eigen::Index c = 0; c < m.space()->cell_count(); ++c) {
    const double vol = m.space()->volume(c);
    const double d = m.density()(c);
    out += m.space()->label(c);
    out += ',';
    out += g17(vol);
    out += ',';
    out += g17(d);
    out += ',';
    out += g17(d * vol);
    out += '\n';
  }
  return out;
}

std::string particles_csv(const ParticleMeasure& p) {
  std::string out = "stream,index,cell_or_coords,weight\n";
  const auto& offsets = p.stream_offsets();
  size_t stream = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    while (stream + 1 < offsets.size() && i >= offsets[stream + 1]) ++stream;
    out += std::to_string(stream);
    out += ',';
    out += std::to_string(i - offsets[stream]);
    out += ',';
    if (p.is_cell_cloud()) {
      out += p.space()->label(p.cells()(i));
    } else {
      for (Eigen::Index j = 0; j < p.coords().cols(); ++j) {
        if (j > 0) out += ';';
        out += g17(p.coords()(i, j));
      }
    }
    out += ',';
    out += g17(p.weights()(i));
    out += '\n';
  }
  return out;
}

std::string compat_csv(const CompatReport& report) {
  std::string out = "cell,lhs_density,rhs_density,gap\n";
  const auto& space = *report.lhs.space();
  for (Eigen::Index c = 0; c < space.cell_count(); ++c) {
    out += space.label(c);
    out += ',';
    out += g17(report.lhs.density()(c));
    out += ',';
    out += g17(report.rhs.density()(c));
    out += ',';
    out += g17(std::abs(report.lhs.density()(c) - report.rhs.density()(c)));
    out += '\n';
  }
  return out;
}

}  // namespace mcal
