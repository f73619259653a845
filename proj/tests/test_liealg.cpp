#include "doctest.h"

#include "minrep/gen.hpp"
#include "minrep/liealg.hpp"

using namespace minrep;

namespace {

TracelessMatrix T(int i, int j, int n) { return TracelessMatrix::basis(i, j, n); }

long binom(long n, long k)
{
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// e-coordinates made to sum to zero
Weight shifted(std::vector<long> v)
{
  Rat mean = 0;
  for (auto x : v) mean += x;
  mean /= static_cast<long>(v.size());
  std::vector<Rat> out;
  for (auto x : v) out.push_back(Rat(x) - mean);
  return Weight(out);
}

} // namespace

TEST_CASE("bracket examples")
{
  CHECK(bracket(T(1, 2, 2), T(2, 1, 2)) == T(1, 1, 2) - T(2, 2, 2));
  CHECK(bracket(T(1, 1, 2), T(1, 1, 2)).is_zero());
  CHECK(bracket(T(1, 3, 3), T(2, 1, 3)) == -T(2, 3, 3));
  CHECK(basis_bracket(1, 3, 2, 1, 3) == -T(2, 3, 3));
}

TEST_CASE("trace form examples")
{
  CHECK(trace_form(T(1, 2, 2), T(2, 1, 2)) == 1);
  CHECK(trace_form(T(1, 2, 3), T(1, 2, 3)) == 0);
  CHECK(trace_form(T(1, 1, 3), T(1, 1, 3)) == frac(2, 3));
}

TEST_CASE("weights of basis elements and rho")
{
  CHECK(weight_of_basis(1, 2, 3) == Weight{1, -1, 0});
  CHECK(weight_of_basis(3, 1, 3) == Weight{-1, 0, 1});
  CHECK(weight_of_basis(1, 4, 4) == Weight{1, 0, 0, -1});
  CHECK(rho(2) == Weight{frac(1, 2), frac(-1, 2)});
  CHECK(rho(3) == Weight{1, 0, -1});
  for (int n = 2; n <= 8; ++n) {
    Rat s = 0;
    auto r = rho(n);
    for (auto& x : r.entries()) s += x;
    CHECK(s == 0);
  }
}

TEST_CASE("weights must sum to zero")
{
  CHECK_THROWS(Weight{1, 0});
  CHECK_THROWS(TracelessMatrix(2, {Rat(1), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("Weyl dimension against closed forms")
{
  for (int a = 0; a <= 6; ++a) CHECK(weyl_dimension(shifted({a, 0})) == a + 1);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      CHECK(weyl_dimension(shifted({a + b, b, 0})) == (a + 1) * (b + 1) * (a + b + 2) / 2);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 4; ++k) {
      std::vector<long> sym(n, 0);
      sym[0] = k;
      CHECK(weyl_dimension(shifted(sym)) == binom(n + k - 1, k));
    }
    for (int k = 1; k < n; ++k) {
      std::vector<long> wedge(n, 0);
      for (int i = 0; i < k; ++i) wedge[i] = 1;
      CHECK(weyl_dimension(shifted(wedge)) == binom(n, k));
    }
    CHECK(weyl_dimension(Weight::root(1, n, n)) == n * n - 1);
  }
}

TEST_CASE("reduced coordinates round trip")
{
  Gen g(3);
  for (int t = 0; t < 50; ++t) {
    int n = g.uniform(2, 5);
    auto x = g.traceless(n, 4);
    CHECK(reduced::from_coords(n, reduced::coords(x)) == x);
  }
}

TEST_CASE("structure table agrees with matrix commutators on random elements")
{
  Gen g(5);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 4);
    auto x = g.traceless(n), y = g.traceless(n);
    const auto& table = reduced::structure_table(n);
    TracelessMatrix acc(n);
    for (auto& [r, a] : reduced::coords(x))
      for (auto& [p, b] : reduced::coords(y)) acc = acc + Rat(a * b) * reduced::from_coords(n, table[r][p]);
    CHECK(acc == bracket(x, y));
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on random matrices")
{
  Gen g(9);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 5);
    auto x = g.traceless(n), y = g.traceless(n), z = g.traceless(n);
    CHECK(bracket(x, y) == -bracket(y, x));
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("dominance")
{
  CHECK(is_dominant_integral(Weight{1, 0, -1}));
  CHECK_FALSE(is_dominant_integral(Weight{0, 1, -1}));
  CHECK_FALSE(is_dominant_integral(Weight{frac(1, 2), frac(-1, 2), 0}));
}
