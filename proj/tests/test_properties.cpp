#include "doctest.h"

#include "minrep/fault.hpp"
#include "minrep/verify.hpp"

using namespace minrep;

TEST_CASE("property suite passes")
{
  for (auto& c : property_suite(true)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("property suite catches a flipped structure constant")
{
  ScopedFault fault(Fault::kFlipStructureConstant);
  int failed = 0;
  for (auto& c : property_suite(true)) failed += !c.passed;
  CHECK(failed > 0);
}

TEST_CASE("defining and adjoint representations are homomorphisms")
{
  for (int n = 2; n <= 3; ++n)
    for (std::size_t a = 0; a < envelope(n).size(); ++a)
      for (std::size_t b = 0; b < envelope(n).size(); ++b) {
        auto x = UEElem::generator(n, static_cast<std::uint16_t>(a));
        auto y = UEElem::generator(n, static_cast<std::uint16_t>(b));
        for (auto rep : {Rep::kDefining, Rep::kAdjoint})
          CHECK(represent(x * y, rep) == linalg::multiply(represent(x, rep), represent(y, rep)));
      }
}
