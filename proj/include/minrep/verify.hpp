#pragma once

#include "minrep/envelope.hpp"
#include "minrep/linalg.hpp"

#include <string>
#include <vector>

namespace minrep {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  std::vector<CheckResult> checks;
};

struct VerifyOptions {
  int max_n = 6;
  bool parallel = true;
  /// Criterion 10 also reruns the suite under an injected sign flip and
  /// expects it to fail.
  bool include_mutation = true;
};

/// Image of u in the defining (n×n) or adjoint ((n²−1)×(n²−1)) representation,
/// computed from matrix products only.
enum class Rep { kDefining, kAdjoint };
linalg::DenseMatrix represent(const UEElem& u, Rep rep);

/// The per-module property suites (Jacobi, invariance, equivariance,
/// associativity and the serial/parallel agreements).
std::vector<CheckResult> property_suite(bool parallel);

CriterionResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);
std::string criterion_title(int id);

} // namespace minrep
