#include "doctest.h"

#include "minrep/gen.hpp"
#include "minrep/verma.hpp"

#include <algorithm>

using namespace minrep;

namespace {

TracelessMatrix T(int i, int j, int n) { return TracelessMatrix::basis(i, j, n); }

Rat sum(const Weight& w)
{
  Rat s = 0;
  for (auto& x : w.entries()) s += x;
  return s;
}

} // namespace

TEST_CASE("lambda(i,a)")
{
  Rat a = frac(5, 7);
  CHECK(lambda_ia(3, 2, a) == Weight{-frac(1, 2) - a / 3, 2 * a / 3, frac(1, 2) - a / 3});
  CHECK(lambda_ia(2, 1, a) == Weight{(a - 1) / 2, (1 - a) / 2});
  Gen g(2);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 7);
    int i = g.uniform(1, n);
    CHECK(sum(lambda_ia(n, i, g.rat())) == 0);
  }
  CHECK_THROWS_AS(lambda_ia(3, 4, 0), PreconditionError);
  CHECK_THROWS_AS(lambda_ia(1, 1, 0), DimensionError);
}

TEST_CASE("action on the highest weight vector")
{
  Gen g(4);
  for (int t = 0; t < 20; ++t) {
    int n = g.uniform(2, 4);
    int r = g.uniform(1, n - 1), s = g.uniform(r + 1, n);
    auto lambda = g.weight(n);
    auto p = Poly2Elem::product(T(r, r, n), T(s, s, n)) - Poly2Elem::product(T(r, s, n), T(s, r, n));
    auto st = act_on_hwv(symmetrize(p), lambda);
    for (auto& [m, c] : st.amplitude.terms()) CHECK(m.empty());
    CHECK(st.scalar() == lambda(r) * lambda(s) - (lambda(r) - lambda(s)) / 2);
  }
  auto lambda = Weight{Rat(1), Rat(-1)};
  auto low = act_on_hwv(UEElem::from_matrix(T(2, 1, 2)), lambda);
  CHECK(low.amplitude == UEElem::from_matrix(T(2, 1, 2)));
  CHECK(act_on_hwv(UEElem::from_matrix(T(1, 2, 2)), lambda).amplitude.is_zero());
  CHECK(act_on_hwv(UEElem::from_matrix(T(1, 1, 2)), lambda).scalar() == 1);
}

TEST_CASE("sym(F^a) kills exactly the weights lambda(i,a)")
{
  for (int n = 3; n <= 4; ++n)
    for (const Rat& a : {Rat(0), Rat(1), frac(5, 2)}) {
      AnnihilatorProbe probe(fa_space(n, a));
      for (int i = 1; i <= n; ++i) {
        auto lambda = lambda_ia(n, i, a);
        CHECK(probe.annihilates(lambda));
        auto moved = lambda + Weight::root(1, 2, n);
        bool known = moved == Weight::zero(n);
        for (int j = 1; j <= n; ++j) known = known || moved == lambda_ia(n, j, a);
        if (!known) CHECK_FALSE(probe.annihilates(moved));
      }
    }
  CHECK(annihilates_hwv(fa_space(2, 3), Weight{Rat(7), Rat(-7)}));
}

TEST_CASE("probe agrees with direct evaluation")
{
  Gen g(9);
  auto space = fa_space(3, frac(1, 2));
  AnnihilatorProbe probe(space);
  for (int t = 0; t < 15; ++t) {
    auto lambda = g.weight(3);
    bool direct = true;
    for (auto& v : space.elements) {
      auto st = act_on_hwv(symmetrize(v), lambda);
      for (auto& [m, c] : st.amplitude.terms()) {
        if (!m.empty()) continue;
        if (c != 0) direct = false;
      }
    }
    CHECK(probe.annihilates(lambda) == direct);
  }
  SubspaceBasis unstable{3, "T12 only", false, {Poly2Elem::linear(T(1, 2, 3))}};
  CHECK_THROWS_AS(AnnihilatorProbe{unstable}, PreconditionError);
}

TEST_CASE("annihilator weight solver")
{
  auto s2 = solve_annihilator_weights(2, frac(1, 3));
  CHECK(s2.all_weights);

  auto s3 = solve_annihilator_weights(3, 0);
  CHECK_FALSE(s3.all_weights);
  std::vector<Weight> want{{Rat(-1), frac(1, 2), frac(1, 2)},
                           {-frac(1, 2), Rat(0), frac(1, 2)},
                           {-frac(1, 2), -frac(1, 2), Rat(1)}};
  std::vector<Weight> labeled;
  for (auto& lw : s3.weights)
    if (!lw.labels.empty()) labeled.push_back(lw.lambda);
  std::sort(labeled.begin(), labeled.end());
  std::sort(want.begin(), want.end());
  CHECK(labeled == want);

  // λ(1,1) = λ(2,1) when n = 4, so the four labels land on three weights.
  auto s4 = solve_annihilator_weights(4, 1);
  std::vector<int> seen;
  for (auto& lw : s4.weights)
    for (int i : lw.labels) {
      seen.push_back(i);
      CHECK(lw.lambda == lambda_ia(4, i, 1));
    }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{1, 2, 3, 4});
  auto s4b = solve_annihilator_weights(4, 3);
  int distinct = 0;
  for (auto& lw : s4b.weights) distinct += !lw.labels.empty();
  CHECK(distinct == 4);
}

TEST_CASE("solver extras are exactly the zero weight")
{
  for (const Rat& a : {Rat(0), Rat(1), frac(-7, 3)})
    for (int n = 3; n <= 4; ++n)
      for (auto& lw : solve_annihilator_weights(n, a).weights)
        if (lw.labels.empty()) CHECK(lw.lambda == Weight::zero(n));
}

TEST_CASE("Casimir scalar")
{
  CHECK(casimir_scalar(lambda_ia(3, 2, 0)) == -frac(3, 2));
  Gen g(6);
  for (int t = 0; t < 30; ++t) {
    int n = g.uniform(2, 5);
    auto p = casimir_paths(g.weight(n));
    CHECK(p.norm_path == p.action_path);
  }
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) {
      Rat a = frac(i * 3 - 4, 5);
      CHECK(casimir_scalar(lambda_ia(n, i, a)) == casimir_expected(n, a));
    }
}

TEST_CASE("generalized Verma modules")
{
  ParabolicSpec::Kind kinds[] = {ParabolicSpec::Kind::kQ1, ParabolicSpec::Kind::kQn1};
  for (int n = 3; n <= 5; ++n)
    for (const Rat& a : {Rat(0), Rat(1), frac(-7, 3)})
      for (auto k : kinds) CHECK(check_generalized_verma(n, a, ParabolicSpec{k, n}));
  ParabolicSpec q1{ParabolicSpec::Kind::kQ1, 4};
  auto wrong = check_generalized_verma_at(4, 2, q1, lambda_ia(4, 2, 2));
  CHECK_FALSE(wrong.passed);
  auto bad = check_generalized_verma_at(4, 1, q1, lambda_ia(4, 1, 2));
  CHECK_FALSE(bad.passed);
}

TEST_CASE("finite dimensionality")
{
  CHECK(is_finite_dimensional({3, 1, frac(3, 2)}));
  CHECK(is_finite_dimensional({4, 4, Rat(-2)}));
  for (int k = -10; k <= 10; ++k) {
    Rat a = frac(k, 2);
    CHECK_FALSE(is_finite_dimensional({3, 2, a}));
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i <= n; ++i) {
        HWLabel l{n, i, a};
        CHECK(is_finite_dimensional(l) == finite_dimensional_by_condition(l));
      }
  }
}
