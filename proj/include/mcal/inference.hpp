// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>

#include "mcal/expr.hpp"
#include "mcal/mapping.hpp"
#include "mcal/measure.hpp"
#include "mcal/sampling.hpp"

namespace mcal {

/// Prior on the model space, observation on the data space, and the forward
/// map between them. Base measures are the spaces' volume measures.
struct InferenceProblem {
  SpacePtr model_space;
  SpacePtr data_space;
  std::variant<CellMapping, ExprMapping> forward;
  GridMeasure prior;     // on the model space
  GridMeasure observed;  // on the data space, a.c. by grid construction
  NormalizationMode mode = NormalizationMode::renormalize;

  void validate() const;
};

struct Posterior {
  std::variant<ParticleMeasure, GridMeasure> model_posterior;
  std::variant<ParticleMeasure, GridMeasure> data_posterior;
  /// Normalization constant of the posterior: the observed density composed
  /// with the forward map, integrated against the prior.
  double evidence = 0.0;
  std::optional<double> acceptance_rate;  // sampled mode
  std::optional<double> compat_gap;       // grid mode: max gap between the two
                                          // data-posterior factorizations
};

/// Observed density (w.r.t. the data-space base measure) at forward(x).
double likelihood(const InferenceProblem& problem, Eigen::Index model_cell);
double likelihood(const InferenceProblem& problem, const Eigen::VectorXd& coords);

/// The likelihood at every model cell (grid forward map only).
Eigen::ArrayXd likelihood_table(const InferenceProblem& problem);

/// Exact grid solution: model posterior is the prior intersected with the
/// pulled-back observation; data posterior is its pushforward. Evidence must
/// be nonzero (ZeroEvidence otherwise).
Posterior solve_exact(const InferenceProblem& problem);

/// Rejection-sampled solution: conserved prior draws sample the model
/// posterior, their images sample the data posterior, and the evidence is
/// estimated as acceptance_rate / k.
Posterior solve_sampled(const InferenceProblem& problem, const SamplerConfig& cfg);

/// Probability of a model-space set under the posterior: exact in grid form,
/// the weighted particle fraction in particle form.
double posterior_probability(const Posterior& post, const CellSet& e);

struct SetInference {
  CellSet x_post;
  CellSet y_post;
};

/// Set-level inference computed two ways — direct set operations and supports
/// of the measure-set pipeline — asserting that they coincide.
SetInference set_inference_demo(const CellSet& x_prior, const CellSet& y_obs,
                                const CellMapping& phi);

}  // namespace mcal
