#pragma once

#include "minrep/closure.hpp"
#include "minrep/liealg.hpp"
#include "minrep/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minrep {

/// Element of C ⊕ g ⊕ S²(g). Quadratic monomials are keyed by unordered pairs
/// (p <= q) of reduced-basis indices; the key (p,q) stands for T_p T_q.
class Poly2Elem {
public:
  using Key = std::pair<int, int>;

  Poly2Elem() = default;
  explicit Poly2Elem(int n);

  static Poly2Elem constant(int n, const Rat& c);
  static Poly2Elem linear(const TracelessMatrix& a);
  /// Symmetric-algebra product x·y of two elements of g.
  static Poly2Elem product(const TracelessMatrix& x, const TracelessMatrix& y);
  /// T_ij T_kl
  static Poly2Elem monomial(int i, int j, int k, int l, int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Rat& scalar() const { return scalar_; }
  [[nodiscard]] const TracelessMatrix& linear_part() const { return linear_; }
  [[nodiscard]] const std::map<Key, Rat>& quadratic() const { return quad_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_purely_quadratic() const { return scalar_ == 0 && linear_.is_zero(); }

  void add_scalar(const Rat& c) { scalar_ += c; }
  void add_linear(const TracelessMatrix& a) { linear_ = linear_ + a; }
  void add_quadratic(int p, int q, const Rat& c);

  Poly2Elem operator+(const Poly2Elem& o) const;
  Poly2Elem operator-(const Poly2Elem& o) const;
  friend Poly2Elem operator*(const Rat& c, const Poly2Elem& v);

  friend bool operator==(const Poly2Elem&, const Poly2Elem&) = default;

private:
  void check_same(const Poly2Elem& o) const;

  int n_ = 0;
  Rat scalar_;
  TracelessMatrix linear_;
  std::map<Key, Rat> quad_;
};

/// Coordinate layout of C ⊕ g ⊕ S²(g) as a single vector space.
/// Index 0 is the scalar, 1 + p the linear T_p, then quadratic pairs.
class S2Layout {
public:
  explicit S2Layout(int n);
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::uint32_t size() const;
  [[nodiscard]] std::uint32_t quad_index(int p, int q) const;
  [[nodiscard]] std::pair<int, int> quad_pair(std::uint32_t index) const;
  [[nodiscard]] bool is_quadratic(std::uint32_t index) const { return index > static_cast<std::uint32_t>(d_); }

  [[nodiscard]] linalg::SparseVec encode(const Poly2Elem& v) const;
  [[nodiscard]] Poly2Elem decode(const linalg::SparseVec& v) const;
  [[nodiscard]] WeightKey weight(std::uint32_t index) const;

  /// Adjoint action of the simple root vectors E_{i,i+1}, E_{i+1,i}.
  [[nodiscard]] GradedAction simple_action() const;
  /// Adjoint action of reduced basis element T_r on a coordinate vector.
  [[nodiscard]] linalg::SparseVec act(int r, const linalg::SparseVec& v) const;

private:
  int n_;
  int d_;
  std::vector<std::uint32_t> row_offset_;
};

struct SubspaceBasis {
  int n = 0;
  std::string description;
  bool submodule = false;
  std::vector<Poly2Elem> elements;
  [[nodiscard]] std::size_t dim() const { return elements.size(); }
};

Poly2Elem adjoint_act(const TracelessMatrix& x, const Poly2Elem& v);
Poly2Elem casimir_element(int n);
Poly2Elem f1m1_embed(const TracelessMatrix& a, const Rat& param);
SubspaceBasis f1111_generators(int n);
Poly2Elem t_map(const TracelessMatrix& strictly_upper);
SubspaceBasis m_space(int i, int j, int k, int l, int n);
SubspaceBasis zero_weight_f1111(int n);
Rat hermitian_product(const Poly2Elem& u, const Poly2Elem& v);
SubspaceBasis fa_space(int n, const Rat& param);
std::vector<Poly2Elem> fa_lowest_vectors(int n, const Rat& param);

/// Rank of a family of elements.
std::size_t rank_of(const std::vector<Poly2Elem>& family);
/// Basis of the span (rows of an echelon form, weight-homogeneous).
std::vector<Poly2Elem> span_basis(const std::vector<Poly2Elem>& family);
/// Adjoint closure of seeds, returned as a basis.
SubspaceBasis adjoint_closure(const std::vector<Poly2Elem>& seeds, bool parallel = true);
/// Whether the span of the elements is stable under the adjoint action.
bool is_adjoint_stable(const std::vector<Poly2Elem>& family);
/// Weight components of v, keyed by e-coordinates.
std::map<WeightKey, Poly2Elem> weight_components(const Poly2Elem& v);

/// Highest weight vectors of the summands of S²(g), with their highest weights.
struct S2Summand {
  std::string label;
  Weight highest_weight;
  Poly2Elem hw_vector;
};
std::vector<S2Summand> s2_summands(int n);

struct S2Decomposition {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> closure_dims;
  std::vector<Rat> weyl_dims;
  std::size_t combined_rank = 0;
  std::size_t expected_total = 0;
  bool hw_vectors_primitive = true;
  [[nodiscard]] bool ok() const;
};
S2Decomposition decompose_s2(int n, bool parallel = true);

} // namespace minrep
