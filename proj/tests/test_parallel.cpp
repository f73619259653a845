#include "doctest.h"

#include "minrep/parallel.hpp"
#include "minrep/symdecomp.hpp"

#include <cstdlib>

using namespace minrep;

TEST_CASE("serial and parallel closures agree")
{
  for (int n = 2; n <= 5; ++n) {
    S2Layout layout(n);
    auto action = layout.simple_action();
    for (auto& s : s2_summands(n)) {
      std::vector<linalg::SparseVec> seeds{layout.encode(s.hw_vector)};
      auto a = closure_serial(seeds, action);
      auto b = closure_parallel(seeds, action);
      CHECK(a.rank() == b.rank());
      CHECK(is_stable(a, action));
      CHECK(is_stable(b, action));
    }
  }
}

TEST_CASE("decomposition is independent of the execution mode")
{
  for (int n = 2; n <= 5; ++n) {
    auto s = decompose_s2(n, false), p = decompose_s2(n, true);
    CHECK(s.closure_dims == p.closure_dims);
    CHECK(s.combined_rank == p.combined_rank);
  }
}

TEST_CASE("worker count honours the environment")
{
  setenv("MINREP_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("MINREP_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("MINREP_THREADS");
  CHECK(worker_count() >= 1);
}
