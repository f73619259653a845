#include "minrep/gen.hpp"

namespace minrep {

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rat Gen::rat(int num_bound, int den_bound) { return frac(uniform(-num_bound, num_bound), uniform(1, den_bound)); }

Rat Gen::nonzero_rat(int num_bound, int den_bound)
{
  for (;;) {
    Rat r = rat(num_bound, den_bound);
    if (r != 0) return r;
  }
}

Weight Gen::weight(int n, int num_bound, int den_bound)
{
  std::vector<Rat> v(n, Rat(0));
  Rat sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    v[i] = rat(num_bound, den_bound);
    sum += v[i];
  }
  v[n - 1] = -sum;
  return Weight(std::move(v));
}

Weight Gen::nonzero_weight(int n, int num_bound, int den_bound)
{
  for (;;) {
    Weight w = weight(n, num_bound, den_bound);
    if (!(w == Weight::zero(n))) return w;
  }
}

TracelessMatrix Gen::traceless(int n, int nonzeros)
{
  TracelessMatrix x(n);
  for (int k = 0; k < nonzeros; ++k) {
    int i = uniform(1, n);
    int j = uniform(1, n);
    x = x + rat() * TracelessMatrix::basis(i, j, n);
  }
  return x;
}

Poly2Elem Gen::poly2(int n, int quad_terms)
{
  Poly2Elem p = Poly2Elem::constant(n, rat());
  p.add_linear(traceless(n, 2));
  for (int k = 0; k < quad_terms; ++k)
    p = p + rat() * Poly2Elem::product(traceless(n, 1), traceless(n, 1));
  return p;
}

UEElem Gen::ue(int n, int max_len, int terms)
{
  const auto& env = envelope(n);
  UEElem out(n);
  for (int t = 0; t < terms; ++t) {
    UEElem w = UEElem::scalar(n, nonzero_rat());
    int len = uniform(0, max_len);
    for (int k = 0; k < len; ++k)
      w = w * UEElem::generator(n, static_cast<std::uint16_t>(uniform(0, static_cast<int>(env.size()) - 1)));
    out = out + w;
  }
  return out;
}

} // namespace minrep
