#pragma once

#include "minrep/envelope.hpp"
#include "minrep/liealg.hpp"
#include "minrep/symdecomp.hpp"

#include <string>
#include <vector>

namespace minrep {

struct HWLabel {
  int n = 2;
  int i = 1;
  Rat a;
};

Weight lambda_ia(int n, int i, const Rat& a);

/// u applied to the highest weight vector of the Verma module M(λ): an element
/// supported on lowering monomials.
struct VermaState {
  Weight lambda;
  UEElem amplitude;
  /// Coefficient of m_λ itself.
  [[nodiscard]] Rat scalar() const { return amplitude.coefficient({}); }
};

VermaState act_on_hwv(const UEElem& u, const Weight& lambda);

/// Zero weight part of sym(space), prepared once and evaluated on many weights.
class AnnihilatorProbe {
public:
  /// Throws PreconditionError if the span of `space` is not adjoint stable.
  explicit AnnihilatorProbe(const SubspaceBasis& space);
  [[nodiscard]] bool annihilates(const Weight& lambda) const;
  [[nodiscard]] std::vector<Rat> scalars(const Weight& lambda) const;
  [[nodiscard]] std::size_t zero_weight_dim() const { return zero_weight_.size(); }

private:
  int n_;
  std::vector<UEElem> zero_weight_;
};

bool annihilates_hwv(const SubspaceBasis& space, const Weight& lambda);

struct LabeledWeight {
  Weight lambda;
  std::vector<int> labels;  // every i with λ(i,a) = lambda
};

struct AnnihilatorSolution {
  bool all_weights = false;
  std::vector<LabeledWeight> weights;
};

/// Weights satisfying the factored quadratic conditions for sym(F^a) to kill
/// L(λ), found by branching over the factors.
AnnihilatorSolution solve_annihilator_weights(int n, const Rat& a);

struct CasimirPaths {
  Rat norm_path;    // ‖λ+ρ‖² − ‖ρ‖²
  Rat action_path;  // scalar of sym(Ω) on m_λ
};
CasimirPaths casimir_paths(const Weight& lambda);
/// Throws std::logic_error if the two computation paths disagree.
Rat casimir_scalar(const Weight& lambda);
/// (n−1)(2a+n)(2a−n)/(4n)
Rat casimir_expected(int n, const Rat& a);

struct GvmResult {
  bool passed = false;
  std::string reason;
  Weight lambda;
  std::vector<UEElem> residuals;  // reductions of sym of the lowest vectors
  Rat casimir;
};

GvmResult check_generalized_verma_at(int n, const Rat& a, const ParabolicSpec& q, const Weight& lambda);
/// λ = λ(1,a) for q(1,n−1), λ(n,a) for q(n−1,1).
GvmResult check_generalized_verma_detail(int n, const Rat& a, const ParabolicSpec& q);
bool check_generalized_verma(int n, const Rat& a, const ParabolicSpec& q);

/// Dominant integral test on λ(i,a).
bool is_finite_dimensional(const HWLabel& label);
/// (i = 1 and a ∈ n/2+ℕ) or (i = n and a ∈ −n/2−ℕ).
bool finite_dimensional_by_condition(const HWLabel& label);

} // namespace minrep
