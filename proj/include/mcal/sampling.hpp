// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "mcal/expr.hpp"
#include "mcal/mapping.hpp"
#include "mcal/measure.hpp"
#include "mcal/particle.hpp"
#include "mcal/rng.hpp"

namespace mcal {

class GridCellSamplerImpl;

/// Reusable O(1) sampler of cells from a grid measure's cell probabilities.
class GridCellSampler {
 public:
  explicit GridCellSampler(const GridMeasure& m);
  Eigen::Index draw(StreamRng& rng) const;

 private:
  std::shared_ptr<const GridCellSamplerImpl> impl_;
};

/// n_samples cells drawn i.i.d. with probability density*volume/total mass,
/// unit weights; bit-identical for identical (seed, streams, n_samples).
ParticleMeasure sample_grid(const GridMeasure& m, const SamplerConfig& cfg);

struct CoincidenceResult {
  ParticleMeasure cloud;
  long long attempts = 0;
  double acceptance_rate = 0.0;
};

/// Draws a pair (one cell from each probability measure) and keeps the cell
/// only when both draws coincide; accepted cells are distributed as the
/// renormalized intersection. Runs until n_samples acceptances or the
/// attempt cap.
CoincidenceResult coincidence_intersect(const GridMeasure& p1, const GridMeasure& p2,
                                        const SamplerConfig& cfg);

struct RejectionResult {
  ParticleMeasure cloud;
  long long attempts = 0;
  double acceptance_rate = 0.0;
  double scale_k = 0.0;          ///< acceptance scale actually used
  double evidence_estimate = 0;  ///< acceptance_rate / scale_k
};

/// Conserve-or-discard sampling over a grid prior: a prior draw x is kept
/// with probability k * likelihood(x). Kept cells sample the normalized
/// prior*likelihood measure.
RejectionResult rejection_posterior(const GridMeasure& prior, const Eigen::ArrayXd& likelihood,
                                    const SamplerConfig& cfg);

/// Analytic sampling source: named coordinates plus a draw function.
struct CoordSampler {
  std::vector<std::string> coord_names;
  std::function<Eigen::VectorXd(StreamRng&)> draw;
};

/// Rejection over an analytic prior sampler; auto acceptance scale comes from
/// a pilot run (10^4 draws, 20% headroom). A likelihood value exceeding the
/// pilot bound during the main run raises UnboundedLikelihood.
RejectionResult rejection_posterior(const CoordSampler& prior,
                                    const std::function<double(const Eigen::VectorXd&)>& likelihood,
                                    const SamplerConfig& cfg);

/// i.i.d. coordinate draws from an analytic sampling source.
ParticleMeasure sample_coords(const CoordSampler& source, const SamplerConfig& cfg);

/// Pointwise application of a mapping; weights carried unchanged.
ParticleMeasure transport(const ParticleMeasure& p, const CellMapping& phi);
ParticleMeasure transport(const ParticleMeasure& p, const ExprMapping& phi);

struct HistogramResult {
  GridMeasure measure;
  long long out_of_range = 0;
};

/// Empirical probability measure of a cloud on a target space. Cell clouds
/// must live on the target; 1-D coordinate clouds are binned by the target's
/// axis edges, with out-of-range particles counted and excluded.
HistogramResult histogram(const ParticleMeasure& p, const SpacePtr& target);

/// Total variation distance between two probability measures on one space:
/// half the fold of |p_i - q_i| over cell probabilities.
double tv_distance(const GridMeasure& a, const GridMeasure& b);

}  // namespace mcal
