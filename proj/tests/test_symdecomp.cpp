#include "doctest.h"

#include "minrep/envelope.hpp"
#include "minrep/gen.hpp"
#include "minrep/symdecomp.hpp"

#include <map>

using namespace minrep;

namespace {

TracelessMatrix T(int i, int j, int n) { return TracelessMatrix::basis(i, j, n); }

// Free commutative expansion: a quadratic as a map over ordered matrix-unit
// pairs (E_ij E_kl with i,j,k,l free), computed from the bracket alone.
bool raising_kills(const Poly2Elem& v)
{
  int n = v.n();
  for (int i = 1; i < n; ++i)
    if (!adjoint_act(T(i, i + 1, n), v).is_zero()) return false;
  return true;
}

long dim_2200(long n) { return n * n * (n - 1) * (n + 3) / 4; }
long dim_1111(long n) { return n * n * (n + 1) * (n - 3) / 4; }

} // namespace

TEST_CASE("adjoint action examples")
{
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(adjoint_act(T(i, j, 3), casimir_element(3)).is_zero());
  CHECK(adjoint_act(T(1, 2, 2), Poly2Elem::constant(2, 1)).is_zero());
  auto lhs = adjoint_act(T(2, 1, 2), Poly2Elem::monomial(1, 2, 1, 2, 2));
  auto h = T(2, 2, 2) - T(1, 1, 2);
  CHECK(lhs == Rat(2) * Poly2Elem::product(h, T(1, 2, 2)));
}

TEST_CASE("adjoint action obeys the Leibniz rule on random products")
{
  Gen g(21);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 4);
    auto x = g.traceless(n), y = g.traceless(n), z = g.traceless(n);
    auto lhs = adjoint_act(x, Poly2Elem::product(y, z));
    auto rhs = Poly2Elem::product(bracket(x, y), z) + Poly2Elem::product(y, bracket(x, z));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Casimir element")
{
  auto omega = casimir_element(2);
  int p12 = reduced::index(1, 2, 2), p21 = reduced::index(2, 1, 2);
  CHECK(omega.quadratic().at({std::min(p12, p21), std::max(p12, p21)}) == 2);
  for (int n = 2; n <= 5; ++n) {
    CHECK(casimir_element(n).is_purely_quadratic());
    CHECK(casimir_element(n).scalar() == 0);
  }
}

TEST_CASE("f1m1 embedding")
{
  auto v = f1m1_embed(T(1, 3, 3), 0);
  Poly2Elem want(3);
  for (int k = 1; k <= 3; ++k) want = want + Poly2Elem::monomial(1, k, k, 3, 3);
  CHECK(v == want);
  CHECK(f1m1_embed(T(1, 2, 2), 5).is_zero());
  auto w = f1m1_embed(T(1, 2, 4), 5);
  CHECK(w.linear_part() == Rat(-frac(5, 2)) * T(1, 2, 4));
  CHECK_FALSE(w.quadratic().empty());
  Gen g(17);
  for (int t = 0; t < 50; ++t) {
    int n = t % 2 ? 3 : 4;
    auto x = g.traceless(n), a = g.traceless(n);
    Rat param = g.rat();
    CHECK(f1m1_embed(bracket(x, a), param) == adjoint_act(x, f1m1_embed(a, param)));
  }
}

TEST_CASE("f1111 generators")
{
  CHECK(f1111_generators(3).dim() == 9);
  CHECK(f1111_generators(4).dim() == 36);
  for (int n = 4; n <= 5; ++n) {
    auto hw = Poly2Elem::monomial(1, n - 1, 2, n, n) - Poly2Elem::monomial(1, n, 2, n - 1, n);
    CHECK(raising_kills(hw));
    auto gens = f1111_generators(n).elements;
    auto joint = gens;
    joint.push_back(hw);
    CHECK(rank_of(joint) == gens.size());
    CHECK(is_adjoint_stable(gens));
  }
}

TEST_CASE("t_map and m_space")
{
  CHECK(t_map(TracelessMatrix(4)).is_zero());
  CHECK(t_map(T(1, 2, 4)) == Poly2Elem::monomial(1, 1, 2, 2, 4) - Poly2Elem::monomial(1, 2, 2, 1, 4));
  CHECK_THROWS_AS(t_map(T(2, 1, 4)), PreconditionError);
  auto m = m_space(1, 2, 3, 4, 4);
  CHECK(m.dim() == 2);
  CHECK(m.elements[0].linear_part() == T(1, 2, 4) + T(3, 4, 4) - T(1, 3, 4) - T(2, 4, 4));
  for (auto& e : m.elements) {
    auto image = t_map(e.linear_part());
    for (int i = 1; i <= 4; ++i) {
      Poly2Elem s(4);
      for (int k = 1; k <= 4; ++k) s = s + Poly2Elem::monomial(i, k, k, i, 4);
      CHECK(hermitian_product(image, s) == 0);
    }
  }
  CHECK_THROWS_AS(m_space(1, 3, 2, 4, 4), PreconditionError);
}

TEST_CASE("zero weight space dimensions")
{
  for (int n = 4; n <= 7; ++n) CHECK(static_cast<int>(zero_weight_f1111(n).dim()) == n * (n - 3) / 2);
  CHECK_THROWS_AS(zero_weight_f1111(3), PreconditionError);
}

TEST_CASE("Hermitian product")
{
  for (int n = 2; n <= 5; ++n) CHECK(hermitian_product(Poly2Elem::linear(T(1, 2, n)), Poly2Elem::linear(T(1, 2, n))) == 1);
  for (int n = 3; n <= 6; ++n) {
    auto u = Poly2Elem::monomial(1, 1, 2, 2, n) - Poly2Elem::monomial(1, 2, 2, 1, n);
    Poly2Elem s(n);
    for (int k = 1; k <= n; ++k) s = s + Poly2Elem::monomial(1, k, k, 1, n);
    CHECK(2 * hermitian_product(u, s) == Rat(2) / (n * n) - (Rat(2) / n + 1));
  }
  Gen g(31);
  for (int t = 0; t < 100; ++t) {
    auto u = g.poly2(3, 3);
    if (u.is_zero()) continue;
    CHECK(hermitian_product(u, u) > 0);
  }
}

TEST_CASE("F^a space")
{
  CHECK(fa_space(2, 5).dim() == 0);
  for (const Rat& a : {Rat(0), frac(2, 3), Rat(-4)}) {
    CHECK(fa_space(3, a).dim() == 8);
    CHECK(fa_space(4, a).dim() == 35);
    CHECK(is_adjoint_stable(fa_space(4, a).elements));
  }
}

TEST_CASE("lowest vectors of F^a")
{
  auto low3 = fa_lowest_vectors(3, 0);
  REQUIRE(low3.size() == 1);
  Poly2Elem want(3);
  for (int k = 1; k <= 3; ++k) want = want + Poly2Elem::monomial(3, k, k, 1, 3);
  CHECK(low3[0] == want);
  auto low4 = fa_lowest_vectors(4, 1);
  REQUIRE(low4.size() == 2);
  CHECK(low4[1].linear_part() == Rat(-frac(1, 2)) * T(4, 1, 4));
  for (int n = 3; n <= 5; ++n)
    for (auto& v : fa_lowest_vectors(n, frac(1, 3))) {
      auto comps = weight_components(v);
      CHECK(comps.size() == 1);
      for (int i = 1; i < n; ++i) CHECK(adjoint_act(T(i + 1, i, n), v).is_zero());
    }
}

TEST_CASE("S2 decomposition matches closed-form dimensions")
{
  for (int n = 2; n <= 6; ++n) {
    auto d = decompose_s2(n);
    CHECK(d.ok());
    std::map<std::string, long> want{{"F(2e1-2en)", dim_2200(n)}, {"F(0)", 1}};
    if (n >= 3) want["F(e1-en)"] = n * n - 1;
    if (n >= 4) want["F(e1+e2-e(n-1)-en)"] = dim_1111(n);
    REQUIRE(d.labels.size() == want.size());
    for (std::size_t k = 0; k < d.labels.size(); ++k) {
      REQUIRE(want.count(d.labels[k]));
      CHECK(static_cast<long>(d.closure_dims[k]) == want[d.labels[k]]);
      CHECK(d.weyl_dims[k] == want[d.labels[k]]);
    }
    CHECK(d.combined_rank == static_cast<std::size_t>((n * n - 1) * n * n / 2));
  }
}

TEST_CASE("highest weight vectors are primitive")
{
  for (int n = 2; n <= 6; ++n)
    for (auto& s : s2_summands(n)) CHECK(raising_kills(s.hw_vector));
}

TEST_CASE("iota maps sym(F^a) onto sym(F^-a)")
{
  Rat a = frac(2, 3);
  std::map<PBWMonomial, std::uint32_t> index;
  auto encode = [&](const UEElem& u) {
    std::vector<linalg::SparseVec::Entry> e;
    for (auto& [m, c] : u.terms()) {
      auto it = index.emplace(m, static_cast<std::uint32_t>(index.size())).first;
      e.emplace_back(it->second, c);
    }
    return linalg::SparseVec(e);
  };
  linalg::EchelonBasis image, target, both;
  for (auto& v : fa_space(3, a).elements) {
    auto s = encode(iota(symmetrize(v)));
    image.insert(s);
    both.insert(s);
  }
  for (auto& v : fa_space(3, -a).elements) {
    auto s = encode(symmetrize(v));
    target.insert(s);
    both.insert(s);
  }
  CHECK(image.rank() == 8);
  CHECK(target.rank() == 8);
  CHECK(both.rank() == 8);
}
