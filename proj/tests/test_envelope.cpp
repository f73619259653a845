#include "doctest.h"

#include "minrep/envelope.hpp"
#include "minrep/gen.hpp"
#include "minrep/verma.hpp"

#include <functional>

using namespace minrep;

namespace {

TracelessMatrix T(int i, int j, int n) { return TracelessMatrix::basis(i, j, n); }

// Generator coordinates read directly off the matrix entries.
std::vector<std::pair<std::uint16_t, Rat>> naive_coords(const Envelope& env, const TracelessMatrix& x)
{
  int n = env.n();
  std::vector<std::pair<std::uint16_t, Rat>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && x(i, j) != 0) out.emplace_back(env.root_id(i, j), x(i, j));
  Rat running = 0;
  for (int k = 1; k < n; ++k) {
    running += x(k, k);
    if (running != 0) out.emplace_back(env.cartan_id(k), running);
  }
  return out;
}

// Rewrites a word by swapping the first out-of-order pair until sorted.
void naive_expand(const Envelope& env, std::vector<std::uint16_t> word, const Rat& c, UEElem::Terms& acc)
{
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] <= word[k + 1]) continue;
    auto swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    naive_expand(env, swapped, c, acc);
    auto br = bracket(env.matrix(word[k]), env.matrix(word[k + 1]));
    for (auto& [id, v] : naive_coords(env, br)) {
      std::vector<std::uint16_t> shorter(word.begin(), word.begin() + k);
      shorter.push_back(id);
      shorter.insert(shorter.end(), word.begin() + k + 2, word.end());
      naive_expand(env, shorter, c * v, acc);
    }
    return;
  }
  acc[word] += c;
}

UEElem naive_product(int n, const std::vector<std::uint16_t>& word)
{
  UEElem::Terms acc;
  naive_expand(envelope(n), word, 1, acc);
  UEElem out(n);
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

std::vector<TracelessMatrix> as_matrices(int n, const std::vector<std::uint16_t>& word)
{
  std::vector<TracelessMatrix> out;
  for (auto id : word) out.push_back(envelope(n).matrix(id));
  return out;
}

UEElem gen(int n, int i, int j) { return UEElem::generator(n, envelope(n).root_id(i, j)); }
UEElem cartan(int n, int k) { return UEElem::generator(n, envelope(n).cartan_id(k)); }

} // namespace

TEST_CASE("generator order")
{
  const auto& env = envelope(3);
  CHECK(env.size() == 8);
  CHECK(env.root_id(2, 1) < env.root_id(3, 1));
  CHECK(env.root_id(3, 2) < env.cartan_id(1));
  CHECK(env.cartan_id(2) < env.root_id(1, 2));
  for (std::size_t id = 0; id < env.size(); ++id) {
    auto c = env.coords(env.matrix(id));
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == id);
    CHECK(c[0].second == 1);
  }
}

TEST_CASE("normal order examples")
{
  CHECK(normal_order({T(1, 2, 2), T(2, 1, 2)}) == gen(2, 2, 1) * gen(2, 1, 2) + cartan(2, 1));
  auto ordered = normal_order({T(2, 1, 2), T(1, 2, 2)});
  CHECK(ordered.terms().size() == 1);
  CHECK(normal_order({T(2, 1, 2), T(1, 2, 2)}) == ordered);
  CHECK_THROWS(normal_order({}));
  std::vector<TracelessMatrix> long_word(kMaxWordLength + 1, T(1, 2, 2));
  CHECK_THROWS_AS(normal_order(long_word), ResourceError);
}

TEST_CASE("normal order agrees with naive rewriting on all short words, n=2")
{
  int n = 2;
  std::size_t d = envelope(n).size();
  std::function<void(std::vector<std::uint16_t>&)> walk = [&](std::vector<std::uint16_t>& w) {
    if (!w.empty()) CHECK(normal_order(as_matrices(n, w)) == naive_product(n, w));
    if (w.size() == 3) return;
    for (std::uint16_t id = 0; id < d; ++id) {
      w.push_back(id);
      walk(w);
      w.pop_back();
    }
  };
  std::vector<std::uint16_t> w;
  walk(w);
}

TEST_CASE("normal order agrees with naive rewriting on random words, n=3 and n=4")
{
  Gen g(5);
  for (int t = 0; t < 60; ++t) {
    int n = t % 3 ? 3 : 4;
    int len = g.uniform(1, 4);
    std::vector<std::uint16_t> w;
    for (int k = 0; k < len; ++k) w.push_back(static_cast<std::uint16_t>(g.uniform(0, n * n - 2)));
    CHECK(normal_order(as_matrices(n, w)) == naive_product(n, w));
  }
}

TEST_CASE("product is associative and bilinear")
{
  Gen g(8);
  for (int t = 0; t < 50; ++t) {
    auto u = g.ue(3), v = g.ue(3), w = g.ue(3);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("commutator of generators is the Lie bracket")
{
  for (int n = 2; n <= 4; ++n)
    for (std::size_t a = 0; a < envelope(n).size(); ++a)
      for (std::size_t b = 0; b < envelope(n).size(); ++b) {
        auto x = envelope(n).matrix(a), y = envelope(n).matrix(b);
        CHECK(commutator(UEElem::from_matrix(x), UEElem::from_matrix(y)) == UEElem::from_matrix(bracket(x, y)));
      }
}

TEST_CASE("symmetrization")
{
  auto s = symmetrize(Poly2Elem::monomial(1, 2, 2, 1, 2));
  CHECK(s == gen(2, 2, 1) * gen(2, 1, 2) + frac(1, 2) * cartan(2, 1));
  CHECK(symmetrize(Poly2Elem::constant(3, 7)) == UEElem::scalar(3, 7));
  CHECK(symmetrize(Poly2Elem::linear(T(1, 3, 3))) == UEElem::from_matrix(T(1, 3, 3)));
  Gen g(12);
  for (int t = 0; t < 30; ++t) {
    auto x = g.traceless(3), y = g.traceless(3);
    auto ux = UEElem::from_matrix(x), uy = UEElem::from_matrix(y);
    CHECK(symmetrize(Poly2Elem::product(x, y)) == frac(1, 2) * (ux * uy + uy * ux));
  }
}

TEST_CASE("iota")
{
  CHECK(iota(gen(2, 1, 2)) == Rat(-1) * gen(2, 1, 2));
  CHECK(iota(UEElem::scalar(3, 1)) == UEElem::scalar(3, 1));
  Gen g(14);
  for (int t = 0; t < 40; ++t) {
    auto u = g.ue(3), v = g.ue(3);
    CHECK(iota(u * v) == iota(v) * iota(u));
    CHECK(iota(iota(u)) == u);
  }
}

TEST_CASE("reduction modulo left ideals")
{
  ParabolicSpec borel{ParabolicSpec::Kind::kBorel, 3};
  Weight lambda{frac(1, 3), frac(-1, 6), frac(-1, 6)};
  CHECK(reduce_mod_ideal(cartan(3, 1), borel, lambda) == UEElem::scalar(3, lambda(1) - lambda(2)));
  Gen g(3);
  for (int t = 0; t < 30; ++t) {
    auto u = g.ue(3) * gen(3, 1 + t % 2, 2 + t % 2);
    CHECK(reduce_mod_ideal(u, borel, lambda).is_zero());
  }
  for (const Rat& a : {Rat(0), Rat(1), frac(-7, 3)}) {
    Weight mu = g.weight(3);
    Poly2Elem low(3);
    for (int i = 1; i <= 3; ++i) low = low + Poly2Elem::monomial(3, i, i, 1, 3);
    low.add_linear((a / 3) * T(3, 1, 3));
    auto want = gen(3, 3, 2) * gen(3, 2, 1) + (-mu(2) + a / 3 - frac(1, 2)) * gen(3, 3, 1);
    CHECK(reduce_mod_ideal(symmetrize(low), borel, mu) == want);
  }
  ParabolicSpec q1{ParabolicSpec::Kind::kQ1, 3};
  CHECK(q1.is_character(Weight{frac(2, 3), frac(-1, 3), frac(-1, 3)}));
  CHECK_FALSE(q1.is_character(Weight{Rat(1), Rat(0), Rat(-1)}));
  CHECK_THROWS_AS(reduce_mod_ideal(cartan(3, 1), q1, Weight{Rat(1), Rat(0), Rat(-1)}), PreconditionError);
  CHECK(reduce_mod_ideal(gen(3, 3, 2), q1, Weight{frac(2, 3), frac(-1, 3), frac(-1, 3)}).is_zero());
  CHECK(reduce_mod_ideal(gen(3, 2, 1), q1, Weight{frac(2, 3), frac(-1, 3), frac(-1, 3)}) == gen(3, 2, 1));
}

TEST_CASE("reduction is a left module map")
{
  Gen g(40);
  ParabolicSpec borel{ParabolicSpec::Kind::kBorel, 3};
  for (int t = 0; t < 25; ++t) {
    auto u = g.ue(3), v = g.ue(3);
    auto lambda = g.weight(3);
    CHECK(reduce_mod_ideal(u * v, borel, lambda) == reduce_mod_ideal(u * reduce_mod_ideal(v, borel, lambda), borel, lambda));
  }
}
