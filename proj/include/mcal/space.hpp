// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcal/errors.hpp"

namespace mcal {

/// Finite partition of a sample set: ordered cells, each with a strictly
/// positive, finite volume under the space's base measure. Immutable after
/// construction; share freely across threads.
class Space {
 public:
  /// Validates: nonempty, unique labels, volumes finite and > 0, finite total.
  /// `edges` is set when the space is a gridded 1-D axis (cell i spans
  /// [edges[i], edges[i+1])); it enables coordinate binning and density
  /// families defined on the axis.
  Space(std::string id, std::vector<std::string> labels, Eigen::ArrayXd volumes,
        std::optional<Eigen::ArrayXd> edges = std::nullopt);

  const std::string& id() const noexcept { return id_; }
  Eigen::Index cell_count() const noexcept { return volumes_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Eigen::Index i) const { return labels_.at(static_cast<size_t>(i)); }
  const Eigen::ArrayXd& volumes() const noexcept { return volumes_; }
  double volume(Eigen::Index i) const { return volumes_(i); }
  double total_volume() const noexcept { return total_volume_; }

  bool has_edges() const noexcept { return edges_.has_value(); }
  const Eigen::ArrayXd& edges() const;

  /// Index of a cell label, or -1 when absent.
  Eigen::Index index_of(std::string_view label) const noexcept;

 private:
  std::string id_;
  std::vector<std::string> labels_;
  Eigen::ArrayXd volumes_;
  std::optional<Eigen::ArrayXd> edges_;
  double total_volume_ = 0.0;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Two spaces are interchangeable when they are the same object or have
/// identical labels and bit-identical volumes.
bool same_space(const Space& a, const Space& b) noexcept;

SpacePtr make_space(std::string id, std::vector<std::string> labels, Eigen::ArrayXd volumes);
SpacePtr make_space(std::string id, std::vector<std::string> labels,
                    std::initializer_list<double> volumes);

/// Space of consecutive intervals (t_i, t_{i+1}) with the scale-invariant
/// volume log(t_{i+1}/t_i). Edges must be strictly increasing and positive.
/// Cell labels are half-open interval strings in input order.
SpacePtr log_interval_space(std::string id, const Eigen::ArrayXd& t_edges);

/// Subset of a space's cells, kept sorted ascending (canonical order).
class CellSet {
 public:
  CellSet(SpacePtr space, std::vector<Eigen::Index> members);

  static CellSet empty(SpacePtr space) { return CellSet(std::move(space), {}); }
  static CellSet full(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<Eigen::Index>& members() const noexcept { return members_; }
  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(members_.size()); }
  bool is_empty() const noexcept { return members_.empty(); }
  bool contains(Eigen::Index cell) const noexcept;

  /// 0/1 indicator per cell (the set's characteristic function).
  Eigen::ArrayXd indicator() const;

 private:
  SpacePtr space_;
  std::vector<Eigen::Index> members_;
};

/// Base-measure volume of a set's cells, left-to-right fold in cell order.
/// Throws ForeignCellSet when `a` does not belong to `s`.
double set_volume(const Space& s, const CellSet& a);
double set_volume(const CellSet& a);

CellSet set_union(const CellSet& a, const CellSet& b);
CellSet set_intersection(const CellSet& a, const CellSet& b);
CellSet set_complement(const CellSet& a);
bool set_equal(const CellSet& a, const CellSet& b);

}  // namespace mcal
