#include "doctest.h"

#include "minrep/gen.hpp"
#include "minrep/sl3kernel.hpp"
#include "minrep/verma.hpp"

using namespace minrep;

namespace {

TracelessMatrix T(int i, int j) { return TracelessMatrix::basis(i, j, 3); }

// Rank of the combined span equals the rank of each family.
bool same_span(const std::vector<PolyT>& x, const std::vector<PolyT>& y)
{
  linalg::DenseMatrix a, b, both;
  for (auto& p : x) a.push_back(p.coeffs), both.push_back(p.coeffs);
  for (auto& p : y) b.push_back(p.coeffs), both.push_back(p.coeffs);
  auto r = linalg::rank(both);
  return r == linalg::rank(a) && r == linalg::rank(b);
}

std::vector<PolyT> dense_kernel(int m, const Rat& a)
{
  auto op = operator_4X(m, a);
  std::vector<PolyT> out;
  for (auto& v : linalg::nullspace(op, m + 1)) out.emplace_back(m, v);
  return out;
}

// Cartan involution X ↦ −Xᵗ extended to U(g) as an automorphism.
UEElem theta(const UEElem& u)
{
  const auto& env = envelope(3);
  UEElem out(3);
  for (auto& [mono, c] : u.terms()) {
    UEElem prod = UEElem::scalar(3, c);
    for (auto id : mono) {
      auto x = env.matrix(id);
      TracelessMatrix y(3);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) y.set(i, j, -x(j, i));
      prod = prod * UEElem::from_matrix(y);
    }
    out = out + prod;
  }
  return out;
}

} // namespace

TEST_CASE("sl2 action on P_m")
{
  auto h = pi_m(SL2Gen::kH, 1);
  CHECK(h[0][0] == 1);
  CHECK(h[1][1] == -1);
  CHECK(minrep::apply(pi_m(SL2Gen::kE, 2), PolyT(2, {0, 0, 1})) == PolyT(2, {0, -2, 0}));
  for (int m = 0; m <= 7; ++m) {
    auto H = pi_m(SL2Gen::kH, m), E = pi_m(SL2Gen::kE, m), F = pi_m(SL2Gen::kF, m);
    auto comm = [](const linalg::DenseMatrix& x, const linalg::DenseMatrix& y) {
      return linalg::add(linalg::multiply(x, y), linalg::scaled(linalg::multiply(y, x), -1));
    };
    CHECK(comm(H, E) == linalg::scaled(E, 2));
    CHECK(comm(H, F) == linalg::scaled(F, -2));
    CHECK(comm(E, F) == H);
  }
}

TEST_CASE("4X operator")
{
  auto op = operator_4X(1, 0);
  for (auto& row : op)
    for (auto& x : row) CHECK(x == 0);
  Gen g(1);
  for (int t = 0; t < 20; ++t) {
    int m = g.uniform(0, 12);
    Rat a = g.rat();
    CHECK(operator_4X(m, a) == operator_4X_factored(m, a));
  }
}

TEST_CASE("recurrence solutions")
{
  auto s5 = recurrence_solve(5, 0);
  int even = 0;
  for (auto& p : s5)
    if (p.has_parity(0)) {
      ++even;
      CHECK(p.normalized() == PolyT(5, {1, 0, -5, 0, 0, 0}));
    }
  CHECK(even == 1);
  CHECK(recurrence_solve(3, 0).empty());
  auto s1 = recurrence_solve(1, 0);
  CHECK(s1.size() == 2);
  CHECK(same_span(s1, {PolyT(1, {1, 0}), PolyT(1, {0, 1})}));
  CHECK_THROWS_AS(recurrence_solve(4, 0), PreconditionError);
}

TEST_CASE("recurrence agrees with the dense kernel")
{
  for (int m = 1; m <= 25; m += 2)
    for (int k = -8; k <= 8; ++k) {
      Rat a = frac(k, 2);
      auto rec = recurrence_solve(m, a);
      auto dense = dense_kernel(m, a);
      CHECK(rec.size() == dense.size());
      CHECK(same_span(rec, dense));
      for (auto& p : rec) CHECK(minrep::apply(operator_4X(m, a), p).is_zero());
    }
}

TEST_CASE("truncated hypergeometric series")
{
  auto f = truncated_2f1(5, 0);
  REQUIRE(f.has_value());
  CHECK(*f == PolyT(5, {1, 0, -5, 0, 0, 0}));
  CHECK_FALSE(truncated_2f1(3, 0).has_value());
  CHECK(k0_of(5, 0) == 1);
  for (int m = 1; m <= 21; m += 2)
    for (int a = -6; a <= 6; ++a) {
      auto s = truncated_2f1(m, a);
      if (!s) continue;
      CHECK(minrep::apply(operator_4X(m, a), *s).is_zero());
    }
}

TEST_CASE("displayed polynomial is the kernel at -a")
{
  CHECK(q_poly(0, 0) == PolyT(m_of(0, 0), {1, 0}));
  CHECK(q_poly(0, 1) == PolyT(5, {1, 0, -5, 0, 0, 0}));
  CHECK(m_of(2, 0) == 5);
  for (int a = -5; a <= 5; ++a)
    for (int k = 0; k < 5; ++k) {
      auto q = q_poly(a, k);
      CHECK(minrep::apply(operator_4X(q.m, -a), q).is_zero());
      auto f = truncated_2f1(q.m, -a);
      REQUIRE(f.has_value());
      CHECK(q.proportional_to(*f));
    }
  CHECK_THROWS_AS(q_poly(frac(1, 2), 0), PreconditionError);
}

TEST_CASE("M-invariant pair spaces")
{
  CHECK(m_invariant_pairs(0).empty());
  CHECK(m_invariant_pairs(2).empty());
  auto p1 = m_invariant_pairs(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == PolyT(1, {0, 1}));
  auto p3 = m_invariant_pairs(3);
  CHECK(p3.size() == 2);
  for (auto& q : p3) CHECK(q.has_parity(0));
  for (int m = 1; m <= 15; m += 2)
    for (auto& q : m_invariant_pairs(m)) {
      auto pair = pair_from_q1(q);
      CHECK(is_m_invariant(pair));
      CHECK(pair.q2 == q.m_reversal());
    }
  auto bad = pair_from_q1(PolyT(3, {1, 0, 0, 0}));
  for (auto& c : bad.q2.coeffs) c = -c;
  CHECK_FALSE(is_m_invariant(bad));
}

TEST_CASE("kernel reports")
{
  CHECK(kernel_report(frac(1, 2), 20).empty());
  std::vector<int> ms;
  for (auto& e : kernel_report(0, 13).entries) ms.push_back(e.m);
  CHECK(ms == std::vector<int>{1, 5, 9, 13});
  ms.clear();
  for (auto& e : kernel_report(2, 20).entries) ms.push_back(e.m);
  CHECK(ms == std::vector<int>{5, 9, 13, 17});
  for (int a = -4; a <= 4; ++a) {
    auto r = kernel_report(a, 31);
    for (auto& [m, d] : r.dims) CHECK(d <= 1);
    for (auto& e : r.entries) {
      CHECK(is_m_invariant(e.pair));
      bool odd = a % 2 != 0;
      CHECK(e.matches_display_at_minus_a == odd);
      CHECK(e.display_is_m_invariant == odd);
      CHECK_FALSE(e.matches_display_at_a);
      if (odd) continue;
      // Even a: the displayed pair holds once the second component changes sign.
      int k = (e.m - m_of(-a, 0)) / 4;
      auto q = q_poly(-a, k);
      PolyT r(q.m), minus_q(q.m);
      for (int j = 0; j <= q.m; ++j) {
        r.coeffs[j] = -q.coeffs[q.m - j];
        minus_q.coeffs[j] = -q.coeffs[j];
      }
      CHECK(e.pair.proportional_to(MPair{e.m, r, minus_q}));
    }
  }
}

TEST_CASE("recurrence and dense pair routes agree")
{
  for (int m = 1; m <= 21; m += 2)
    for (int k = -6; k <= 6; ++k) {
      Rat a = frac(k, 3);
      auto x = kernel_pairs(m, a), y = kernel_pairs_dense(m, a);
      REQUIRE(x.size() == y.size());
      for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].proportional_to(y[i]));
    }
}

TEST_CASE("serial and parallel kernel reports agree")
{
  for (const Rat& a : {Rat(0), Rat(-3), frac(1, 2)}) {
    auto p = kernel_report(a, 41), s = kernel_report_serial(a, 41);
    CHECK(p.dims == s.dims);
    REQUIRE(p.entries.size() == s.entries.size());
    for (std::size_t i = 0; i < p.entries.size(); ++i) CHECK(p.entries[i].pair.proportional_to(s.entries[i].pair));
  }
}

TEST_CASE("weight forced to lambda(2,-a)")
{
  CHECK(lambda2a_check(0, lambda_ia(3, 2, 0)));
  CHECK_FALSE(lambda2a_check(1, Weight::zero(3)));
  for (const Rat& a : {Rat(1), Rat(-2), frac(5, 2), frac(-7, 3)}) {
    CHECK(lambda2a_check(a, lambda_ia(3, 2, -a)));
    CHECK_FALSE(lambda2a_check(a, lambda_ia(3, 2, a)));
    auto d = lambda2a_detail(a, lambda_ia(3, 2, -a));
    CHECK(d.shape_ok);
    CHECK(d.coeff_21 == 0);
    CHECK(d.coeff_32 == 0);
  }
}

TEST_CASE("the element X")
{
  ParabolicSpec borel{ParabolicSpec::Kind::kBorel, 3};
  for (const Rat& a : {Rat(0), Rat(1), Rat(-2)}) {
    auto x = x_element(a);
    CHECK(theta(x) == x);
    auto lambda = lambda_ia(3, 2, -a);
    CHECK(reduce_mod_ideal(x - iota_sym_lowest(a), borel, lambda).is_zero());
    CHECK(iota(x_element(a)) == x_element(-a));
  }
}
