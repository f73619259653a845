#pragma once

#include "minrep/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace minrep {

using WeightKey = std::vector<int>;

/// A linear action of finitely many generators on a space with a weight grading
/// by coordinate index. Each generator must map weight spaces to weight spaces.
struct GradedAction {
  std::size_t generator_count = 0;
  std::function<linalg::SparseVec(std::size_t g, const linalg::SparseVec&)> act;
  std::function<WeightKey(std::uint32_t index)> weight_of_index;
};

/// Subspace stored as one echelon basis per weight.
class GradedSpan {
public:
  /// Splits v into weight components and inserts each. Returns inserted rows.
  std::vector<linalg::SparseVec> insert(const linalg::SparseVec& v, const GradedAction& g);
  [[nodiscard]] bool contains(const linalg::SparseVec& v, const GradedAction& g) const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] std::size_t rank_at(const WeightKey& w) const;
  [[nodiscard]] const std::map<WeightKey, linalg::EchelonBasis>& pieces() const { return pieces_; }
  /// Every row of every piece, weights in ascending order.
  [[nodiscard]] std::vector<linalg::SparseVec> basis() const;

  /// Read-only reduction of a homogeneous vector of weight w.
  [[nodiscard]] linalg::SparseVec reduce(const WeightKey& w, linalg::SparseVec v) const;
  /// Inserts a homogeneous vector already reduced against the span.
  void insert_reduced(const WeightKey& w, linalg::SparseVec v);

private:
  std::map<WeightKey, linalg::EchelonBasis> pieces_;
};

std::vector<std::pair<WeightKey, linalg::SparseVec>> split_by_weight(const linalg::SparseVec& v,
                                                                     const GradedAction& g);

/// Smallest generator-stable subspace containing the seeds.
GradedSpan closure_serial(const std::vector<linalg::SparseVec>& seeds, const GradedAction& g);
/// Same subspace; generator images of each frontier are computed and
/// pre-reduced in parallel, then merged serially.
GradedSpan closure_parallel(const std::vector<linalg::SparseVec>& seeds, const GradedAction& g);

/// True iff every generator maps the span into itself.
bool is_stable(const GradedSpan& span, const GradedAction& g);

} // namespace minrep
