// SPDX-License-Identifier: Apache-2.0
#include "mcal/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace mcal {

namespace {

/// Walker/Vose alias table: O(1) draws from a finite distribution with one
/// uniform per draw. Construction is deterministic in the input order.
class AliasTable {
 public:
  explicit AliasTable(const Eigen::ArrayXd& weights) : n_(weights.size()) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i) total += weights(i);
    prob_.resize(static_cast<size_t>(n_));
    alias_.resize(static_cast<size_t>(n_), 0);
    std::vector<Eigen::Index> small, large;
    std::vector<double> scaled(static_cast<size_t>(n_));
    for (Eigen::Index i = 0; i < n_; ++i) {
      scaled[static_cast<size_t>(i)] = weights(i) / total * static_cast<double>(n_);
      (scaled[static_cast<size_t>(i)] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      const Eigen::Index s = small.back();
      const Eigen::Index l = large.back();
      small.pop_back();
      prob_[static_cast<size_t>(s)] = scaled[static_cast<size_t>(s)];
      alias_[static_cast<size_t>(s)] = l;
      scaled[static_cast<size_t>(l)] -= 1.0 - scaled[static_cast<size_t>(s)];
      if (scaled[static_cast<size_t>(l)] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    for (Eigen::Index i : large) prob_[static_cast<size_t>(i)] = 1.0;
    for (Eigen::Index i : small) prob_[static_cast<size_t>(i)] = 1.0;
  }

  int draw(StreamRng& rng) const {
    const double u = rng.next_double() * static_cast<double>(n_);
    auto i = static_cast<Eigen::Index>(u);
    if (i >= n_) i = n_ - 1;
    const double frac = u - static_cast<double>(i);
    return static_cast<int>(frac < prob_[static_cast<size_t>(i)]
                                ? i
                                : alias_[static_cast<size_t>(i)]);
  }

 private:
  Eigen::Index n_;
  std::vector<double> prob_;
  std::vector<Eigen::Index> alias_;
};

struct StreamPlan {
  std::vector<long long> counts;
  std::vector<long long> offsets;  // length streams+1
};

StreamPlan plan_streams(long long n, int streams) {
  StreamPlan plan;
  plan.counts.resize(static_cast<size_t>(streams));
  plan.offsets.resize(static_cast<size_t>(streams) + 1, 0);
  for (int s = 0; s < streams; ++s) {
    plan.counts[static_cast<size_t>(s)] = n / streams + (s < n % streams ? 1 : 0);
    plan.offsets[static_cast<size_t>(s) + 1] =
        plan.offsets[static_cast<size_t>(s)] + plan.counts[static_cast<size_t>(s)];
  }
  return plan;
}

/// Runs fn(stream) for every stream, possibly in parallel. Failures are
/// rethrown for the lowest failing stream index so errors are deterministic.
template <typename Fn>
void for_each_stream(int streams, Fn&& fn) {
  if (streams == 1 || std::thread::hardware_concurrency() <= 1) {
    for (int s = 0; s < streams; ++s) fn(s);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<size_t>(streams));
  for (int s = 0; s < streams; ++s)
    futures.push_back(std::async(std::launch::async, [&fn, s] { fn(s); }));
  std::exception_ptr first_error;
  for (auto& f : futures) {
    try {
      f.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

Eigen::ArrayXd cell_probabilities(const GridMeasure& m) {
  const double total = total_mass(m);
  if (total <= 0.0) fail(errc::zero_mass_sampling, "measure has zero total mass");
  return m.cell_masses() / total;
}

}  // namespace

class GridCellSamplerImpl : public AliasTable {
 public:
  using AliasTable::AliasTable;
};

GridCellSampler::GridCellSampler(const GridMeasure& m)
    : impl_(std::make_shared<const GridCellSamplerImpl>(cell_probabilities(m))) {}

Eigen::Index GridCellSampler::draw(StreamRng& rng) const { return impl_->draw(rng); }

ParticleMeasure sample_grid(const GridMeasure& m, const SamplerConfig& cfg) {
  cfg.validate();
  const AliasTable alias(cell_probabilities(m));
  const StreamPlan plan = plan_streams(cfg.n_samples, cfg.streams);
  Eigen::VectorXi cells(cfg.n_samples);
  for_each_stream(cfg.streams, [&](int s) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(s));
    const long long begin = plan.offsets[static_cast<size_t>(s)];
    const long long count = plan.counts[static_cast<size_t>(s)];
    for (long long i = 0; i < count; ++i) cells(begin + i) = alias.draw(rng);
  });
  return ParticleMeasure::cell_cloud(m.space(), std::move(cells),
                                     Eigen::ArrayXd::Ones(cfg.n_samples), plan.offsets);
}

CoincidenceResult coincidence_intersect(const GridMeasure& p1, const GridMeasure& p2,
                                        const SamplerConfig& cfg) {
  cfg.validate();
  require_same_space(p1, p2);
  if (p1.kind() != MeasureKind::probability || p2.kind() != MeasureKind::probability)
    fail(errc::not_probability, "coincidence sampling needs two probability measures");
  // Pair matching samples the intersection only when every cell has the same
  // volume (the tiled construction's identical-Delta-S assumption); unequal
  // volumes would weight cells by an extra volume factor.
  const auto& vols = p1.space()->volumes();
  if (!(vols == vols(0)).all())
    fail(errc::invalid_config, "coincidence matching needs equal cell volumes");
  // Exact intersection consulted first: disjoint supports fail fast instead
  // of exhausting the attempt budget.
  (void)intersect(p1, p2, NormalizationMode::renormalize);

  const AliasTable alias1(cell_probabilities(p1));
  const AliasTable alias2(cell_probabilities(p2));
  const StreamPlan plan = plan_streams(cfg.n_samples, cfg.streams);
  const long long cap_per_stream = std::max<long long>(1, cfg.attempt_cap / cfg.streams);

  Eigen::VectorXi cells(cfg.n_samples);
  std::vector<long long> attempts(static_cast<size_t>(cfg.streams), 0);
  for_each_stream(cfg.streams, [&](int s) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(s));
    const long long begin = plan.offsets[static_cast<size_t>(s)];
    const long long target = plan.counts[static_cast<size_t>(s)];
    long long accepted = 0;
    long long tried = 0;
    while (accepted < target) {
      if (tried >= cap_per_stream)
        fail(errc::attempt_budget_exhausted,
             "stream " + std::to_string(s) + " used " + std::to_string(tried) +
                 " attempts for " + std::to_string(accepted) + "/" + std::to_string(target) +
                 " acceptances");
      ++tried;
      const int c1 = alias1.draw(rng);
      const int c2 = alias2.draw(rng);
      if (c1 == c2) cells(begin + accepted++) = c1;
    }
    attempts[static_cast<size_t>(s)] = tried;
  });

  long long total_attempts = 0;
  for (long long a : attempts) total_attempts += a;
  CoincidenceResult result;
  result.cloud = ParticleMeasure::cell_cloud(p1.space(), std::move(cells),
                                             Eigen::ArrayXd::Ones(cfg.n_samples), plan.offsets);
  result.attempts = total_attempts;
  result.acceptance_rate =
      static_cast<double>(cfg.n_samples) / static_cast<double>(total_attempts);
  return result;
}

RejectionResult rejection_posterior(const GridMeasure& prior, const Eigen::ArrayXd& likelihood,
                                    const SamplerConfig& cfg) {
  cfg.validate();
  if (likelihood.size() != prior.space()->cell_count())
    fail(errc::length_mismatch, "likelihood table size does not match the prior space");
  for (Eigen::Index i = 0; i < likelihood.size(); ++i)
    if (!(likelihood(i) >= 0.0) || !std::isfinite(likelihood(i)))
      fail(errc::unbounded_likelihood,
           "likelihood at cell " + std::to_string(i) + " is not a finite nonnegative value");

  const Eigen::ArrayXd prior_prob = cell_probabilities(prior);
  double l_max = 0.0;   // exact maximum over the prior's support
  double l_mean = 0.0;  // exact expectation under the prior
  for (Eigen::Index i = 0; i < likelihood.size(); ++i) {
    if (prior_prob(i) > 0.0) l_max = std::max(l_max, likelihood(i));
    l_mean += prior_prob(i) * likelihood(i);
  }
  if (l_mean == 0.0)
    fail(errc::zero_acceptance, "likelihood vanishes on the prior's support");
  const double k = cfg.acceptance_scale ? *cfg.acceptance_scale : 1.0 / l_max;
  if (k * l_max > 1.0 + 1e-15)
    fail(errc::invalid_acceptance_scale,
         "k * max likelihood = " + std::to_string(k * l_max) + " exceeds 1");

  const AliasTable alias(prior_prob);
  const StreamPlan plan = plan_streams(cfg.n_samples, cfg.streams);
  const long long cap_per_stream = std::max<long long>(1, cfg.attempt_cap / cfg.streams);

  Eigen::VectorXi cells(cfg.n_samples);
  std::vector<long long> attempts(static_cast<size_t>(cfg.streams), 0);
  for_each_stream(cfg.streams, [&](int s) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(s));
    const long long begin = plan.offsets[static_cast<size_t>(s)];
    const long long target = plan.counts[static_cast<size_t>(s)];
    long long accepted = 0;
    long long tried = 0;
    while (accepted < target) {
      if (tried >= cap_per_stream)
        fail(accepted == 0 ? errc::zero_acceptance : errc::attempt_budget_exhausted,
             "stream " + std::to_string(s) + " used " + std::to_string(tried) +
                 " attempts for " + std::to_string(accepted) + "/" + std::to_string(target) +
                 " acceptances");
      ++tried;
      const int c = alias.draw(rng);
      if (rng.next_double() < k * likelihood(c)) cells(begin + accepted++) = c;
    }
    attempts[static_cast<size_t>(s)] = tried;
  });

  long long total_attempts = 0;
  for (long long a : attempts) total_attempts += a;
  RejectionResult result;
  result.cloud = ParticleMeasure::cell_cloud(prior.space(), std::move(cells),
                                             Eigen::ArrayXd::Ones(cfg.n_samples), plan.offsets);
  result.attempts = total_attempts;
  result.acceptance_rate =
      static_cast<double>(cfg.n_samples) / static_cast<double>(total_attempts);
  result.scale_k = k;
  result.evidence_estimate = result.acceptance_rate / k;
  return result;
}

RejectionResult rejection_posterior(
    const CoordSampler& prior, const std::function<double(const Eigen::VectorXd&)>& likelihood,
    const SamplerConfig& cfg) {
  cfg.validate();
  const auto dim = static_cast<Eigen::Index>(prior.coord_names.size());

  double k;
  if (cfg.acceptance_scale) {
    k = *cfg.acceptance_scale;
  } else {
    // Pilot run on a dedicated stream. A second-half maximum far above the
    // first-half maximum means the likelihood is still growing with the
    // sample size, i.e. no usable bound was found.
    constexpr long long kPilot = 10'000;
    StreamRng pilot_rng(cfg.seed, static_cast<std::uint64_t>(cfg.streams));
    double max_first = 0.0, max_second = 0.0;
    for (long long i = 0; i < kPilot; ++i) {
      const double value = likelihood(prior.draw(pilot_rng));
      if (!(value >= 0.0) || !std::isfinite(value))
        fail(errc::unbounded_likelihood, "likelihood returned a non-finite value in the pilot");
      (i < kPilot / 2 ? max_first : max_second) = std::max(
          i < kPilot / 2 ? max_first : max_second, value);
    }
    const double pilot_max = std::max(max_first, max_second);
    if (pilot_max == 0.0)
      fail(errc::zero_acceptance, "likelihood vanished on every pilot draw");
    if (max_second > 1.5 * max_first)
      fail(errc::unbounded_likelihood,
           "pilot maximum did not stabilize (first half " + std::to_string(max_first) +
               ", second half " + std::to_string(max_second) + ")");
    k = 1.0 / (1.2 * pilot_max);
  }

  const StreamPlan plan = plan_streams(cfg.n_samples, cfg.streams);
  const long long cap_per_stream = std::max<long long>(1, cfg.attempt_cap / cfg.streams);
  Eigen::MatrixXd coords(cfg.n_samples, dim);
  std::vector<long long> attempts(static_cast<size_t>(cfg.streams), 0);
  const bool explicit_k = cfg.acceptance_scale.has_value();
  for_each_stream(cfg.streams, [&](int s) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(s));
    const long long begin = plan.offsets[static_cast<size_t>(s)];
    const long long target = plan.counts[static_cast<size_t>(s)];
    long long accepted = 0;
    long long tried = 0;
    while (accepted < target) {
      if (tried >= cap_per_stream)
        fail(accepted == 0 ? errc::zero_acceptance : errc::attempt_budget_exhausted,
             "stream " + std::to_string(s) + " used " + std::to_string(tried) +
                 " attempts for " + std::to_string(accepted) + "/" + std::to_string(target) +
                 " acceptances");
      ++tried;
      const Eigen::VectorXd x = prior.draw(rng);
      const double value = likelihood(x);
      if (!(value >= 0.0) || !std::isfinite(value))
        fail(errc::unbounded_likelihood, "likelihood returned a non-finite value");
      const double p_keep = k * value;
      if (p_keep > 1.0)
        fail(explicit_k ? errc::invalid_acceptance_scale : errc::unbounded_likelihood,
             "acceptance probability " + std::to_string(p_keep) + " exceeds 1 at a draw");
      if (rng.next_double() < p_keep) coords.row(begin + accepted++) = x.transpose();
    }
    attempts[static_cast<size_t>(s)] = tried;
  });

  long long total_attempts = 0;
  for (long long a : attempts) total_attempts += a;
  RejectionResult result;
  result.cloud = ParticleMeasure::coord_cloud(prior.coord_names, std::move(coords),
                                              Eigen::ArrayXd::Ones(cfg.n_samples), plan.offsets);
  result.attempts = total_attempts;
  result.acceptance_rate =
      static_cast<double>(cfg.n_samples) / static_cast<double>(total_attempts);
  result.scale_k = k;
  result.evidence_estimate = result.acceptance_rate / k;
  return result;
}

ParticleMeasure sample_coords(const CoordSampler& source, const SamplerConfig& cfg) {
  cfg.validate();
  const auto dim = static_cast<Eigen::Index>(source.coord_names.size());
  const StreamPlan plan = plan_streams(cfg.n_samples, cfg.streams);
  Eigen::MatrixXd coords(cfg.n_samples, dim);
  for_each_stream(cfg.streams, [&](int s) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(s));
    const long long begin = plan.offsets[static_cast<size_t>(s)];
    const long long count = plan.counts[static_cast<size_t>(s)];
    for (long long i = 0; i < count; ++i) coords.row(begin + i) = source.draw(rng).transpose();
  });
  return ParticleMeasure::coord_cloud(source.coord_names, std::move(coords),
                                      Eigen::ArrayXd::Ones(cfg.n_samples), plan.offsets);
}

ParticleMeasure transport(const ParticleMeasure& p, const CellMapping& phi) {
  if (!p.is_cell_cloud())
    fail(errc::mapping_domain, "cell mapping applied to a coordinate cloud");
  if (!same_space(*p.space(), *phi.domain()))
    fail(errc::space_mismatch, "cloud does not live on the mapping domain");
  Eigen::VectorXi mapped(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    mapped(i) = static_cast<int>(phi(p.cells()(i)));
  return ParticleMeasure::cell_cloud(phi.codomain(), std::move(mapped), p.weights(),
                                     p.stream_offsets());
}

ParticleMeasure transport(const ParticleMeasure& p, const ExprMapping& phi) {
  if (p.is_cell_cloud())
    fail(errc::mapping_domain, "analytic mapping applied to a cell cloud");
  if (p.coord_names() != phi.inputs())
    fail(errc::space_mismatch, "cloud coordinates do not match the mapping inputs");
  const auto out_dim = static_cast<Eigen::Index>(phi.output_names().size());
  Eigen::MatrixXd out(p.size(), out_dim);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    try {
      out.row(i) = phi.apply(p.coords().row(i).transpose()).transpose();
    } catch (const Error& e) {
      if (e.code() == errc::mapping_domain)
        fail(errc::mapping_domain,
             std::string(e.what()) + " (particle " + std::to_string(i) + ")");
      throw;
    }
  }
  return ParticleMeasure::coord_cloud(phi.output_names(), std::move(out), p.weights(),
                                      p.stream_offsets());
}

HistogramResult histogram(const ParticleMeasure& p, const SpacePtr& target) {
  if (p.size() == 0) fail(errc::empty_cloud, "cannot histogram an empty cloud");
  Eigen::ArrayXd weight_per_cell = Eigen::ArrayXd::Zero(target->cell_count());
  long long out_of_range = 0;
  if (p.is_cell_cloud()) {
    if (!same_space(*p.space(), *target))
      fail(errc::space_mismatch, "cell cloud does not live on the target space");
    for (Eigen::Index i = 0; i < p.size(); ++i)
      weight_per_cell(p.cells()(i)) += p.weights()(i);
  } else {
    if (p.coords().cols() != 1)
      fail(errc::invalid_config, "axis binning needs 1-D coordinates");
    const Eigen::ArrayXd& edges = target->edges();
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const double x = p.coords()(i, 0);
      if (!(x >= edges(0)) || !(x < edges(edges.size() - 1))) {
        ++out_of_range;
        continue;
      }
      // Cell c spans [edges[c], edges[c+1]).
      const double* begin = edges.data();
      const double* end = edges.data() + edges.size();
      const auto c = static_cast<Eigen::Index>(std::upper_bound(begin, end, x) - begin) - 1;
      weight_per_cell(c) += p.weights()(i);
    }
  }
  double total = 0.0;
  for (Eigen::Index c = 0; c < weight_per_cell.size(); ++c) total += weight_per_cell(c);
  if (total <= 0.0)
    fail(errc::empty_cloud, "no particle with positive weight landed in the target space");
  HistogramResult result{
      GridMeasure(target, weight_per_cell / (total * target->volumes()),
                  MeasureKind::probability),
      out_of_range};
  return result;
}

double tv_distance(const GridMeasure& a, const GridMeasure& b) {
  require_same_space(a, b);
  if (a.kind() != MeasureKind::probability || b.kind() != MeasureKind::probability)
    fail(errc::not_probability, "total variation distance needs probability measures");
  double sum = 0.0;
  const auto& v = a.space()->volumes();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    sum += std::abs(a.density()(i) * v(i) - b.density()(i) * v(i));
  return 0.5 * sum;
}

}  // namespace mcal
