#pragma once

#include "minrep/envelope.hpp"
#include "minrep/linalg.hpp"

#include <optional>
#include <vector>

namespace minrep {

/// Polynomial of degree at most m in t, coefficients a_0..a_m.
struct PolyT {
  int m = 0;
  std::vector<Rat> coeffs;

  PolyT() = default;
  explicit PolyT(int m) : m(m), coeffs(m + 1, Rat(0)) {}
  PolyT(int m, std::vector<Rat> c);

  [[nodiscard]] bool is_zero() const;
  /// Lowest index with a nonzero coefficient; -1 for zero.
  [[nodiscard]] int low_degree() const;
  /// Scaled so that the lowest nonzero coefficient is 1.
  [[nodiscard]] PolyT normalized() const;
  /// -t^m p(-1/t).
  [[nodiscard]] PolyT m_reversal() const;
  [[nodiscard]] bool proportional_to(const PolyT& o) const;
  /// True if all coefficients of the wrong parity vanish.
  [[nodiscard]] bool has_parity(int parity) const;
  friend bool operator==(const PolyT&, const PolyT&) = default;
};

struct MPair {
  int m = 0;
  PolyT q1;
  PolyT q2;
  [[nodiscard]] bool proportional_to(const MPair& o) const;
};

enum class SL2Gen { kH, kE, kF };

/// Matrix of π_m on the basis 1, t, ..., t^m (columns are images).
linalg::DenseMatrix pi_m(SL2Gen g, int m);
/// The differential operator π_m(4X), assembled from its coefficient formula.
linalg::DenseMatrix operator_4X(int m, const Rat& a);
/// The same operator composed from the displayed factors
/// (π(F)+π(E))π(H) + (1+2a)(π(E)−π(F)).
linalg::DenseMatrix operator_4X_factored(int m, const Rat& a);
PolyT apply(const linalg::DenseMatrix& op, const PolyT& p);

/// Kernel basis of operator_4X from the two parity chains of the coefficient
/// recurrence. Requires m odd.
std::vector<PolyT> recurrence_solve(int m, const Rat& a);

/// k_0 = (m-1-2a)/4.
Rat k0_of(int m, const Rat& a);
/// ₂F₁(−m/2, −k₀; k₀+1−m/2; t²) when k₀ ∈ {0..(m−1)/2}, otherwise nullopt.
std::optional<PolyT> truncated_2f1(int m, const Rat& a);
/// The displayed q(a,k;t²) in P_{m(a,k)}[t].
PolyT q_poly(const Rat& a, int k);
int m_of(const Rat& a, int k);

/// Conditions (i)-(iii) on a pair.
bool is_m_invariant(const MPair& p);
/// Basis of the q1-space for odd m (monomials t^j of the allowed parity);
/// empty for even m.
std::vector<PolyT> m_invariant_pairs(int m);
MPair pair_from_q1(const PolyT& q1);

/// M-invariant pairs in the kernel, via the recurrence.
std::vector<MPair> kernel_pairs(int m, const Rat& a);
/// Same space from a dense nullspace of the stacked constraints.
std::vector<MPair> kernel_pairs_dense(int m, const Rat& a);

struct KernelEntry {
  int m = 0;
  MPair pair;
  /// Proportional to the displayed pair built from q(a,k) and q(−a,k).
  bool matches_display_at_a = false;
  bool matches_display_at_minus_a = false;
  /// The displayed pair satisfies the relation q2 = −t^m q1(−1/t).
  bool display_is_m_invariant = false;
};

struct KernelReport {
  Rat a;
  int m_max = 0;
  std::vector<KernelEntry> entries;
  /// (m, dimension of the kernel on the pair space) for every odd m ≤ m_max.
  std::vector<std::pair<int, int>> dims;
  [[nodiscard]] bool empty() const { return entries.empty(); }
};

/// The displayed kernel basis element at (a, k) with q taken from q_poly(b, k).
MPair displayed_pair(const Rat& a, int k, const Rat& b);

KernelReport kernel_report(const Rat& a, int m_max);
KernelReport kernel_report_serial(const Rat& a, int m_max);

struct Lambda2aResult {
  bool holds = false;
  UEElem lowest;
  UEElem reduced_12;  // [T12, v] mod I(b,λ)
  UEElem reduced_23;  // [T23, v] mod I(b,λ)
  Rat coeff_32;       // coefficient of T32 in reduced_12
  Rat coeff_21;       // coefficient of T21 in reduced_23
  bool shape_ok = false;  // no other monomials appear
};

/// Lowest weight vector of ι∘sym(F^a) for sl(3).
UEElem iota_sym_lowest(const Rat& a);
Lambda2aResult lambda2a_detail(const Rat& a, const Weight& lambda);
bool lambda2a_check(const Rat& a, const Weight& lambda);

/// (T21−T12)(T32−T23) + (a+1/2)(T31−T13) in normal form.
UEElem x_element(const Rat& a);

} // namespace minrep
