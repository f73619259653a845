#pragma once

#include "minrep/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace minrep::linalg {

/// Sparse rational vector: entries sorted by index, no stored zeros.
class SparseVec {
public:
  using Entry = std::pair<std::uint32_t, Rat>;

  SparseVec() = default;
  /// Entries may be unsorted and contain duplicates or zeros; they are merged.
  explicit SparseVec(std::vector<Entry> entries);
  explicit SparseVec(const std::map<std::uint32_t, Rat>& m);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] Rat at(std::uint32_t index) const;
  [[nodiscard]] std::uint32_t leading_index() const { return entries_.front().first; }

  /// this += c * other
  void axpy(const Rat& c, const SparseVec& other);
  void scale(const Rat& c);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
  std::vector<Entry> entries_;
};

/// Incrementally built row-echelon basis of a subspace of Q^N.
/// Rows are normalized so that the pivot coefficient is 1.
class EchelonBasis {
public:
  /// Remainder of v after elimination against the current rows.
  [[nodiscard]] SparseVec reduce(SparseVec v) const;
  [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v if independent; returns whether the rank grew.
  bool insert(SparseVec v);
  /// Adds a vector already reduced against this basis. Must be nonzero.
  void insert_reduced(SparseVec v);

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::map<std::uint32_t, SparseVec>& rows() const { return rows_; }

private:
  std::map<std::uint32_t, SparseVec> rows_;  // keyed by pivot index
};

using DenseMatrix = std::vector<std::vector<Rat>>;

/// Rank of a dense matrix (rows x cols) by exact elimination.
std::size_t rank(DenseMatrix m);

/// Basis of {x : m x = 0}; the free variable of each basis vector is 1.
std::vector<std::vector<Rat>> nullspace(DenseMatrix m, std::size_t cols);

/// Solves m x = rhs. Returns false if inconsistent; otherwise fills a particular
/// solution and a nullspace basis.
bool solve_affine(DenseMatrix m, std::vector<Rat> rhs, std::size_t cols,
                  std::vector<Rat>& particular, std::vector<std::vector<Rat>>& kernel);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, const Rat& c);
DenseMatrix zeros(std::size_t rows, std::size_t cols);
std::vector<Rat> apply(const DenseMatrix& a, std::span<const Rat> x);

} // namespace minrep::linalg
