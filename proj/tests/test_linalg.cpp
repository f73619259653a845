#include "doctest.h"

#include "minrep/gen.hpp"
#include "minrep/linalg.hpp"

using namespace minrep;
using namespace minrep::linalg;

TEST_CASE("rationals parse and print canonically")
{
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7/3")) == "-7/3");
  CHECK(to_string(parse_rat("2.5")) == "5/2");
  CHECK(to_string(parse_rat(" 4 ")) == "4");
  CHECK(to_string(parse_rat("+3/9")) == "1/3");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK(frac(4, 2) == 2);
  CHECK(frac(3, -6) == parse_rat("-1/2"));
}

TEST_CASE("shifted natural membership is exact")
{
  CHECK(in_shifted_naturals(Rat(5), frac(3, 2)) == false);
  CHECK(in_shifted_naturals(frac(7, 2), frac(3, 2)));
  CHECK(in_shifted_naturals(frac(3, 2), frac(3, 2)));
  CHECK_FALSE(in_shifted_naturals(frac(1, 2), frac(3, 2)));
  CHECK(in_shifted_neg_naturals(frac(-1, 2), frac(3, 2)));
  CHECK_FALSE(in_shifted_neg_naturals(frac(5, 2), frac(3, 2)));
}

TEST_CASE("sparse vectors merge duplicates and drop zeros")
{
  SparseVec v(std::vector<SparseVec::Entry>{{3, Rat(1)}, {1, Rat(2)}, {3, Rat(-1)}, {2, Rat(0)}});
  REQUIRE(v.size() == 1);
  CHECK(v.leading_index() == 1);
  CHECK(v.at(1) == 2);
  CHECK(v.at(3) == 0);
  SparseVec w(std::vector<SparseVec::Entry>{{1, Rat(1)}, {5, Rat(4)}});
  v.axpy(Rat(-2), w);
  CHECK(v.at(1) == 0);
  CHECK(v.at(5) == -8);
  CHECK(v.size() == 1);
}

TEST_CASE("echelon basis rank matches dense rank on random families")
{
  Gen g(7);
  for (int t = 0; t < 30; ++t) {
    int rows = g.uniform(1, 6), cols = g.uniform(1, 6);
    DenseMatrix m = zeros(rows, cols);
    EchelonBasis e;
    for (int i = 0; i < rows; ++i) {
      std::vector<SparseVec::Entry> entries;
      for (int j = 0; j < cols; ++j) {
        m[i][j] = g.uniform(0, 2) == 0 ? Rat(0) : g.rat(2, 2);
        entries.emplace_back(j, m[i][j]);
      }
      e.insert(SparseVec(entries));
    }
    CHECK(e.rank() == rank(m));
    for (auto& [pivot, row] : e.rows()) CHECK(row.at(pivot) == 1);
  }
}

TEST_CASE("nullspace vectors are annihilated and independent")
{
  Gen g(11);
  for (int t = 0; t < 30; ++t) {
    int rows = g.uniform(1, 5), cols = g.uniform(1, 6);
    DenseMatrix m = zeros(rows, cols);
    for (auto& r : m)
      for (auto& x : r) x = g.rat(3, 2);
    auto null = nullspace(m, cols);
    CHECK(null.size() + rank(m) == static_cast<std::size_t>(cols));
    for (auto& v : null)
      for (auto& y : linalg::apply(m, v)) CHECK(y == 0);
    if (!null.empty()) CHECK(rank(null) == null.size());
  }
}

TEST_CASE("affine solve returns a particular solution or reports inconsistency")
{
  DenseMatrix m{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  std::vector<Rat> part;
  std::vector<std::vector<Rat>> ker;
  REQUIRE(solve_affine(m, {Rat(3), Rat(6)}, 2, part, ker));
  CHECK(part[0] + part[1] == 3);
  CHECK(ker.size() == 1);
  CHECK_FALSE(solve_affine(m, {Rat(3), Rat(5)}, 2, part, ker));
}
