// SPDX-License-Identifier: Apache-2.0
#include "mcal/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace mcal {

Space::Space(std::string id, std::vector<std::string> labels, Eigen::ArrayXd volumes,
             std::optional<Eigen::ArrayXd> edges)
    : id_(std::move(id)), labels_(std::move(labels)), volumes_(std::move(volumes)),
      edges_(std::move(edges)) {
  if (labels_.empty()) fail(errc::empty_space, "space '" + id_ + "' has no cells");
  if (static_cast<Eigen::Index>(labels_.size()) != volumes_.size())
    fail(errc::length_mismatch, "space '" + id_ + "': " + std::to_string(labels_.size()) +
                                    " labels vs " + std::to_string(volumes_.size()) + " volumes");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) fail(errc::duplicate_label, "cell label '" + l + "'");
  for (Eigen::Index i = 0; i < volumes_.size(); ++i)
    if (!(volumes_(i) > 0.0) || !std::isfinite(volumes_(i)))
      fail(errc::nonpositive_volume,
           "cell '" + labels_[static_cast<size_t>(i)] + "' volume " + std::to_string(volumes_(i)));
  // Fixed fold order: cell index ascending.
  for (Eigen::Index i = 0; i < volumes_.size(); ++i) total_volume_ += volumes_(i);
  if (!std::isfinite(total_volume_))
    fail(errc::nonpositive_volume, "total volume of space '" + id_ + "' is not finite");
  if (edges_ && edges_->size() != volumes_.size() + 1)
    fail(errc::length_mismatch, "space '" + id_ + "': edge count must be cell count + 1");
}

const Eigen::ArrayXd& Space::edges() const {
  if (!edges_) fail(errc::invalid_config, "space '" + id_ + "' carries no axis edges");
  return *edges_;
}

Eigen::Index Space::index_of(std::string_view label) const noexcept {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Eigen::Index>(i);
  return -1;
}

bool same_space(const Space& a, const Space& b) noexcept {
  if (&a == &b) return true;
  if (a.cell_count() != b.cell_count()) return false;
  if (a.labels() != b.labels()) return false;
  return (a.volumes() == b.volumes()).all();
}

SpacePtr make_space(std::string id, std::vector<std::string> labels, Eigen::ArrayXd volumes) {
  return std::make_shared<Space>(std::move(id), std::move(labels), std::move(volumes));
}

SpacePtr make_space(std::string id, std::vector<std::string> labels,
                    std::initializer_list<double> volumes) {
  return make_space(std::move(id), std::move(labels),
                    Eigen::Map<const Eigen::ArrayXd>(std::data(volumes),
                                                     static_cast<Eigen::Index>(volumes.size())));
}

namespace {
std::string edge_label(double lo, double hi) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "[%.15g,%.15g)", lo, hi);
  return buffer;
}
}  // namespace

SpacePtr log_interval_space(std::string id, const Eigen::ArrayXd& t_edges) {
  if (t_edges.size() < 2) fail(errc::empty_space, "need at least two edges");
  std::vector<std::string> labels;
  Eigen::ArrayXd volumes(t_edges.size() - 1);
  for (Eigen::Index i = 0; i < t_edges.size(); ++i) {
    if (!(t_edges(i) > 0.0) || !std::isfinite(t_edges(i)))
      fail(errc::nonpositive_edge, "edge " + std::to_string(t_edges(i)));
    if (i > 0 && !(t_edges(i) > t_edges(i - 1)))
      fail(errc::nonincreasing_edges, "edges must be strictly increasing at index " +
                                          std::to_string(i));
  }
  for (Eigen::Index i = 0; i + 1 < t_edges.size(); ++i) {
    volumes(i) = std::log(t_edges(i + 1) / t_edges(i));
    labels.push_back(edge_label(t_edges(i), t_edges(i + 1)));
  }
  return std::make_shared<Space>(std::move(id), std::move(labels), std::move(volumes),
                                 t_edges);
}

CellSet::CellSet(SpacePtr space, std::vector<Eigen::Index> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) fail(errc::empty_space, "cell set over null space");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Eigen::Index m : members_)
    if (m < 0 || m >= space_->cell_count())
      fail(errc::foreign_cell_set, "cell index " + std::to_string(m) + " outside space '" +
                                       space_->id() + "'");
}

CellSet CellSet::full(SpacePtr space) {
  std::vector<Eigen::Index> all(static_cast<size_t>(space->cell_count()));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Eigen::Index>(i);
  return CellSet(std::move(space), std::move(all));
}

bool CellSet::contains(Eigen::Index cell) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), cell);
}

Eigen::ArrayXd CellSet::indicator() const {
  Eigen::ArrayXd chi = Eigen::ArrayXd::Zero(space_->cell_count());
  for (Eigen::Index m : members_) chi(m) = 1.0;
  return chi;
}

double set_volume(const Space& s, const CellSet& a) {
  if (!same_space(s, *a.space()))
    fail(errc::foreign_cell_set, "cell set belongs to space '" + a.space()->id() + "', not '" +
                                     s.id() + "'");
  double sum = 0.0;
  for (Eigen::Index m : a.members()) sum += s.volume(m);
  return sum;
}

double set_volume(const CellSet& a) { return set_volume(*a.space(), a); }

namespace {
void require_same_space(const CellSet& a, const CellSet& b) {
  if (!same_space(*a.space(), *b.space()))
    fail(errc::foreign_cell_set, "cell sets live on different spaces");
}
}  // namespace

CellSet set_union(const CellSet& a, const CellSet& b) {
  require_same_space(a, b);
  std::vector<Eigen::Index> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return CellSet(a.space(), std::move(out));
}

CellSet set_intersection(const CellSet& a, const CellSet& b) {
  require_same_space(a, b);
  std::vector<Eigen::Index> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return CellSet(a.space(), std::move(out));
}

CellSet set_complement(const CellSet& a) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < a.space()->cell_count(); ++i)
    if (!a.contains(i)) out.push_back(i);
  return CellSet(a.space(), std::move(out));
}

bool set_equal(const CellSet& a, const CellSet& b) {
  return same_space(*a.space(), *b.space()) && a.members() == b.members();
}

}  // namespace mcal
