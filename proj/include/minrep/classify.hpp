#pragma once

#include "minrep/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minrep {

struct RealFormSpec {
  enum class Kind { kSU, kSLR };
  Kind kind = Kind::kSU;
  int p = 1;
  int q = 1;
  int n = 2;

  static RealFormSpec su(int p, int q);
  static RealFormSpec slR(int n);
  /// Accepts "su(p,q)", "sl(n,R)" and "sl(n,ℝ)".
  static RealFormSpec parse(const std::string& text);
  [[nodiscard]] std::string name() const;
};

enum class Family { kHighestWeight, kLowestWeightDual, kPSTriv, kPSSgn, kGenuine };
std::string family_name(Family f);

/// One isomorphism class of a-minimal (g,k)-modules. For highest weight
/// families `weight` is λ(i,a); for duals it is λ(i,−a) so that the module
/// is L(weight)^∨. Weights are absent when a is flagged nonreal.
struct MinimalCert {
  RealFormSpec form;
  Rat a;
  bool nonreal = false;
  Family family = Family::kHighestWeight;
  std::vector<int> labels;
  std::optional<Weight> weight;
  std::vector<std::string> conditions;
  /// Set when two clauses produced the same module outside the quoted
  /// coincidence λ(p, ∓(p−q)/2) = λ(p+1, ∓(p−q)/2).
  bool unexpected_collision = false;
};

struct KTypePencil {
  Weight mu0;
  Weight step;
  int count = 0;
  [[nodiscard]] std::vector<Weight> weights() const;
};

/// {k ∈ ℕ, k ≤ bound : |a| − n/2 − k ∈ 2ℕ}; empty for nonreal a.
std::vector<int> z_set(int n, const Rat& a, int bound, bool nonreal = false);
/// The whole (finite) Z set.
std::vector<int> z_set_full(int n, const Rat& a, bool nonreal = false);

std::vector<MinimalCert> classify_su(int p, int q, const Rat& a, bool nonreal = false);
std::vector<MinimalCert> classify_slnR(int n, const Rat& a, bool nonreal = false);
std::vector<MinimalCert> classify(const RealFormSpec& form, const Rat& a, bool nonreal = false);

/// The table of counts, evaluated from its row conditions alone.
int table1_count(const RealFormSpec& form, const Rat& a, bool nonreal = false);

/// Block-wise order reversal on the first p and last q coordinates.
Weight longest_compact_weyl(const Weight& w, int p);
/// Consecutive differences inside each block are in ℕ.
bool is_compact_dominant(const Weight& w, int p);

KTypePencil ktypes_su_pencil(const MinimalCert& cert, int count);
std::vector<Weight> ktypes_su(const MinimalCert& cert, int count);
/// Harmonic degrees (principal series) or SU(2) parameters m (genuine).
std::vector<int> ktypes_slnR(const MinimalCert& cert, int count);

/// so(n) weight in ε-coordinates (rank ⌊n/2⌋).
struct SoWeight {
  std::vector<Rat> eps;
};
/// so(n) highest weight of the harmonic space of degree k: kε₁.
SoWeight harmonic_weight(int n, int k);
/// so(3) highest weight of S^m C² under su(2) ≅ so(3): (m/2)ε₁.
SoWeight su2_weight(int m);
/// μ ∈ ℕψ/2 (n ≥ 4) or ℕψ/4 (n = 3), with ψ = 2ε₁.
bool lattice_check(const RealFormSpec& form, const SoWeight& mu);

} // namespace minrep
