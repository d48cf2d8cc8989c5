// SPDX-License-Identifier: Apache-2.0
#include "mcal/inference.hpp"

#include <algorithm>
#include <cmath>

namespace mcal {

namespace {

Eigen::Index locate_axis_cell(const Space& axis, double x) {
  const Eigen::ArrayXd& edges = axis.edges();
  if (!(x >= edges(0)) || !(x < edges(edges.size() - 1))) return -1;
  const double* begin = edges.data();
  const double* end = edges.data() + edges.size();
  return static_cast<Eigen::Index>(std::upper_bound(begin, end, x) - begin) - 1;
}

const CellMapping& require_cell_forward(const InferenceProblem& problem) {
  if (const auto* cell = std::get_if<CellMapping>(&problem.forward)) return *cell;
  fail(errc::invalid_config, "this operation needs a grid (cell table) forward map");
}

}  // namespace

void InferenceProblem::validate() const {
  if (!model_space || !data_space) fail(errc::empty_space, "inference problem over null spaces");
  if (!same_space(*prior.space(), *model_space))
    fail(errc::space_mismatch, "prior does not live on the model space");
  if (!same_space(*observed.space(), *data_space))
    fail(errc::space_mismatch, "observation does not live on the data space");
  if (const auto* cell = std::get_if<CellMapping>(&forward)) {
    if (!same_space(*cell->domain(), *model_space) ||
        !same_space(*cell->codomain(), *data_space))
      fail(errc::space_mismatch, "forward map does not connect the model and data spaces");
  } else {
    const auto& expr = std::get<ExprMapping>(forward);
    if (expr.inputs().size() != 1 || expr.output_names().size() != 1)
      fail(errc::invalid_config,
           "analytic forward maps on gridded axes must be single-input, single-output");
    if (!model_space->has_edges() || !data_space->has_edges())
      fail(errc::invalid_config, "analytic forward maps need gridded axis spaces");
  }
  if (!(total_mass(prior) > 0.0)) fail(errc::invalid_config, "prior has zero total mass");
  if (!(total_mass(observed) > 0.0))
    fail(errc::invalid_config, "observation has zero total mass");
}

double likelihood(const InferenceProblem& problem, Eigen::Index model_cell) {
  const CellMapping& phi = require_cell_forward(problem);
  if (model_cell < 0 || model_cell >= problem.model_space->cell_count())
    fail(errc::mapping_domain, "cell " + std::to_string(model_cell) +
                                   " outside the model space");
  return problem.observed.density()(phi(model_cell));
}

double likelihood(const InferenceProblem& problem, const Eigen::VectorXd& coords) {
  const auto* expr = std::get_if<ExprMapping>(&problem.forward);
  if (!expr) fail(errc::invalid_config, "coordinate likelihood needs an analytic forward map");
  const Eigen::VectorXd y = expr->apply(coords);
  const Eigen::Index cell = locate_axis_cell(*problem.data_space, y(0));
  return cell < 0 ? 0.0 : problem.observed.density()(cell);
}

Eigen::ArrayXd likelihood_table(const InferenceProblem& problem) {
  const CellMapping& phi = require_cell_forward(problem);
  Eigen::ArrayXd table(problem.model_space->cell_count());
  for (Eigen::Index i = 0; i < table.size(); ++i)
    table(i) = problem.observed.density()(phi(i));
  return table;
}

Posterior solve_exact(const InferenceProblem& problem) {
  problem.validate();
  const CellMapping& phi = require_cell_forward(problem);

  const Eigen::ArrayXd like = likelihood_table(problem);
  double evidence = 0.0;
  const auto& v = problem.model_space->volumes();
  for (Eigen::Index i = 0; i < like.size(); ++i)
    evidence += like(i) * problem.prior.density()(i) * v(i);
  if (evidence == 0.0)
    fail(errc::zero_evidence, "observation is incompatible with the prior through the map");

  GridMeasure model_post = intersect(
      problem.prior, pullback(problem.observed, phi, problem.mode), problem.mode);
  GridMeasure data_post = pushforward(model_post, phi);

  // The other factorization of the data posterior; the gap between the two
  // routes is reported for diagnostics.
  GridMeasure data_post_alt = intersect(pushforward(problem.prior, phi), problem.observed,
                                        problem.mode);
  double gap = 0.0;
  for (Eigen::Index c = 0; c < data_post.density().size(); ++c)
    gap = std::max(gap, std::abs(data_post.density()(c) - data_post_alt.density()(c)));

  Posterior post;
  post.model_posterior = std::move(model_post);
  post.data_posterior = std::move(data_post);
  post.evidence = evidence;
  post.compat_gap = gap;
  return post;
}

Posterior solve_sampled(const InferenceProblem& problem, const SamplerConfig& cfg) {
  problem.validate();
  Posterior post;
  if (const auto* phi = std::get_if<CellMapping>(&problem.forward)) {
    RejectionResult r = rejection_posterior(problem.prior, likelihood_table(problem), cfg);
    post.data_posterior = transport(r.cloud, *phi);
    post.model_posterior = std::move(r.cloud);
    post.evidence = r.evidence_estimate;
    post.acceptance_rate = r.acceptance_rate;
    return post;
  }

  // Analytic forward on gridded axes: draw axis coordinates from the prior
  // (cell by mass, then within-cell position under the log volume measure)
  // and weigh them by the observed density at the mapped point.
  const auto& expr = std::get<ExprMapping>(problem.forward);
  const GridCellSampler cells(problem.prior);
  const SpacePtr axis = problem.model_space;
  CoordSampler prior_sampler{
      expr.inputs(), [cells, axis](StreamRng& rng) {
        const Eigen::Index c = cells.draw(rng);
        const double lo = axis->edges()(c);
        const double hi = axis->edges()(c + 1);
        const double u = rng.next_double();
        Eigen::VectorXd x(1);
        x(0) = lo * std::pow(hi / lo, u);
        return x;
      }};
  const auto like = [&problem](const Eigen::VectorXd& x) { return likelihood(problem, x); };
  RejectionResult r = rejection_posterior(prior_sampler, like, cfg);
  post.data_posterior = transport(r.cloud, expr);
  post.model_posterior = std::move(r.cloud);
  post.evidence = r.evidence_estimate;
  post.acceptance_rate = r.acceptance_rate;
  return post;
}

double posterior_probability(const Posterior& post, const CellSet& e) {
  if (const auto* grid = std::get_if<GridMeasure>(&post.model_posterior))
    return measure_of(*grid, e);
  const auto& cloud = std::get<ParticleMeasure>(post.model_posterior);
  double total = 0.0;
  double inside = 0.0;
  for (Eigen::Index i = 0; i < cloud.size(); ++i) {
    const double w = cloud.weights()(i);
    total += w;
    Eigen::Index cell;
    if (cloud.is_cell_cloud()) {
      if (!same_space(*cloud.space(), *e.space()))
        fail(errc::foreign_cell_set, "set does not live on the posterior's space");
      cell = cloud.cells()(i);
    } else {
      if (cloud.coords().cols() != 1)
        fail(errc::invalid_config, "posterior probability of a multi-D cloud needs a 1-D axis");
      cell = locate_axis_cell(*e.space(), cloud.coords()(i, 0));
    }
    if (cell >= 0 && e.contains(cell)) inside += w;
  }
  if (total == 0.0) fail(errc::empty_cloud, "posterior cloud has zero total weight");
  return inside / total;
}

SetInference set_inference_demo(const CellSet& x_prior, const CellSet& y_obs,
                                const CellMapping& phi) {
  // Route 1: plain set algebra.
  const CellSet x_post = set_intersection(x_prior, preimage(phi, y_obs));
  const CellSet y_post = set_intersection(image_set(phi, x_prior), y_obs);

  // Route 2: supports of the measure-set pipeline (unit constants).
  const auto mode = NormalizationMode::unit_constant;
  const GridMeasure mu_a = measure_set(x_prior.space(), x_prior, mode);
  const GridMeasure nu_b = measure_set(y_obs.space(), y_obs, mode);
  const CellSet x_post_meas = support(intersect(mu_a, pullback(nu_b, phi, mode), mode));
  const CellSet y_post_meas = support(intersect(pushforward(mu_a, phi), nu_b, mode));

  if (!set_equal(x_post, x_post_meas) || !set_equal(y_post, y_post_meas))
    fail(errc::inconsistent_oracles,
         "set-level and measure-level inference pipelines disagree");
  if (!set_equal(y_post, image_set(phi, x_post)))
    fail(errc::inconsistent_oracles,
         "posterior data set is not the image of the posterior model set");
  return SetInference{x_post, y_post};
}

}  // namespace mcal
