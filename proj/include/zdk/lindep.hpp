#pragma once

#include <optional>
#include <vector>

#include "zdk/field.hpp"

namespace zdk {

/// Detects the first linear dependency in a stream of vectors of length dim.
/// Keeps the absorbed vectors as a reduced row-echelon basis together with, for
/// every basis row, its expression in terms of the absorbed vectors.
template <class K>
class LinDepMill {
 public:
  using Elem = typename K::Elem;
  using Vec = std::vector<Elem>;

  LinDepMill(K field, std::size_t dim) : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1) {}

  /// If v = sum_j c_j w_j over the vectors w_0..w_{k-1} absorbed so far, returns
  /// (c_0..c_{k-1}) and leaves the state unchanged; otherwise absorbs v.
  /// The zero vector yields the empty combination when nothing was absorbed.
  /// Throws DimensionMismatch.
  std::optional<Vec> feed(const Vec& v);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  K field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;  // rows_[r] = sum_j combos_[r][j] * w_j
  std::vector<int> pivot_row_;
};

}  // namespace zdk
