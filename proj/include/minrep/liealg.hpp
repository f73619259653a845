#pragma once

#include "minrep/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace minrep {

/// (λ₁,…,λₙ) with Σ λᵢ = 0. Indexing through operator() is 1-based.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Rat> entries);
  Weight(std::initializer_list<Rat> entries) : Weight(std::vector<Rat>(entries)) {}

  /// Zero weight of rank n.
  static Weight zero(int n);
  /// e_i - e_j
  static Weight root(int i, int j, int n);

  [[nodiscard]] int n() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] const Rat& operator()(int i) const { return entries_.at(i - 1); }
  [[nodiscard]] const std::vector<Rat>& entries() const { return entries_; }

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  friend Weight operator*(const Rat& c, const Weight& w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.entries_ < b.entries_; }

private:
  std::vector<Rat> entries_;
};

/// Σ λᵢ μᵢ
Rat inner(const Weight& a, const Weight& b);

/// Element of sl(n) stored as its n×n matrix, A = Σ A_ij T_ij.
class TracelessMatrix {
public:
  TracelessMatrix() = default;
  explicit TracelessMatrix(int n);
  /// Row-major entries; throws PreconditionError if the trace is nonzero.
  TracelessMatrix(int n, std::vector<Rat> entries);

  /// T_ij = E_ij - δ_ij I/n
  static TracelessMatrix basis(int i, int j, int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Rat& operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Rat& v);
  /// Adds v at (i,j). The caller restores tracelessness before use.
  void add_to(int i, int j, const Rat& v) { a_[idx(i, j)] += v; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rat trace() const;

  TracelessMatrix operator+(const TracelessMatrix& o) const;
  TracelessMatrix operator-(const TracelessMatrix& o) const;
  TracelessMatrix operator-() const;
  friend TracelessMatrix operator*(const Rat& c, const TracelessMatrix& x);

  friend bool operator==(const TracelessMatrix&, const TracelessMatrix&) = default;

private:
  [[nodiscard]] std::size_t idx(int i, int j) const;
  void check_same(const TracelessMatrix& o) const;

  int n_ = 0;
  std::vector<Rat> a_;
};

/// Plain matrix product (not traceless in general), n×n row-major.
std::vector<Rat> matmul(const TracelessMatrix& x, const TracelessMatrix& y);

TracelessMatrix bracket(const TracelessMatrix& x, const TracelessMatrix& y);
/// [T_rs, T_ij] = δ_is T_rj - δ_rj T_is, from the closed formula rather than
/// matrix products. This is the structure table the symbolic modules use.
TracelessMatrix basis_bracket(int r, int s, int i, int j, int n);
Rat trace_form(const TracelessMatrix& x, const TracelessMatrix& y);
Weight weight_of_basis(int i, int j, int n);
Weight rho(int n);

/// Reduced basis of sl(n): T_ij with (i,j) != (n,n), using T_nn = -Σ_{i<n} T_ii.
/// Index of T_ij is (i-1)n + (j-1), so indices run over 0..n²-2.
namespace reduced {

using Coords = std::vector<std::pair<int, Rat>>;

inline int dim(int n) { return n * n - 1; }
inline int index(int i, int j, int n) { return (i - 1) * n + (j - 1); }
inline std::pair<int, int> pair(int p, int n) { return {p / n + 1, p % n + 1}; }

/// Sparse coordinates, ascending index.
Coords coords(const TracelessMatrix& a);
TracelessMatrix from_coords(int n, const Coords& c);
/// e_i - e_j as integer vector (zero for diagonal elements).
std::vector<int> weight(int p, int n);

/// table[r][p] = coordinates of [T_r, T_p], from basis_bracket. Cached per
/// (n, active fault); the returned reference stays valid for the process.
using StructureTable = std::vector<std::vector<Coords>>;
const StructureTable& structure_table(int n);

} // namespace reduced

/// Weyl dimension of the irreducible sl(n)-module with highest weight λ
/// (λ given in e-coordinates, dominant integral).
Rat weyl_dimension(const Weight& lambda);

/// λ_i - λ_{i+1} ∈ ℕ for all i.
bool is_dominant_integral(const Weight& lambda);

} // namespace minrep
