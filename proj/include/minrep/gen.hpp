#pragma once

#include "minrep/envelope.hpp"
#include "minrep/liealg.hpp"
#include "minrep/symdecomp.hpp"

#include <cstdint>
#include <random>

namespace minrep {

/// Deterministic generators of random test data.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rat rat(int num_bound = 5, int den_bound = 3);
  Rat nonzero_rat(int num_bound = 5, int den_bound = 3);
  Weight weight(int n, int num_bound = 5, int den_bound = 3);
  /// A weight that sums to zero and is not the zero weight.
  Weight nonzero_weight(int n, int num_bound = 3, int den_bound = 2);
  TracelessMatrix traceless(int n, int nonzeros = 3);
  Poly2Elem poly2(int n, int quad_terms = 3);
  /// Sum of a few random PBW words of length <= max_len.
  UEElem ue(int n, int max_len = 2, int terms = 3);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace minrep
