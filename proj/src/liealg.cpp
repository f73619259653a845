#include "minrep/liealg.hpp"

#include "minrep/fault.hpp"

#include <map>
#include <mutex>
#include <string>

namespace minrep {

Weight::Weight(std::vector<Rat> entries) : entries_(std::move(entries))
{
  Rat s = 0;
  for (const auto& x : entries_) s += x;
  if (s != 0) throw PreconditionError("weight entries must sum to 0, got " + to_string(s));
}

Weight Weight::zero(int n)
{
  if (n < 1) throw DimensionError("weight rank must be positive");
  return Weight(std::vector<Rat>(n, Rat(0)));
}

Weight Weight::root(int i, int j, int n)
{
  if (i < 1 || j < 1 || i > n || j > n) throw DimensionError("root index out of range");
  if (i == j) throw PreconditionError("e_i - e_i is not a root");
  std::vector<Rat> v(n, Rat(0));
  v[i - 1] = 1;
  v[j - 1] = -1;
  return Weight(std::move(v));
}

Weight Weight::operator+(const Weight& o) const
{
  if (n() != o.n()) throw DimensionError("weight rank mismatch");
  auto v = entries_;
  for (int i = 0; i < n(); ++i) v[i] += o.entries_[i];
  return Weight(std::move(v));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const
{
  auto v = entries_;
  for (auto& x : v) x = -x;
  return Weight(std::move(v));
}

Weight operator*(const Rat& c, const Weight& w)
{
  auto v = w.entries_;
  for (auto& x : v) x *= c;
  return Weight(std::move(v));
}

Rat inner(const Weight& a, const Weight& b)
{
  if (a.n() != b.n()) throw DimensionError("weight rank mismatch");
  Rat s = 0;
  for (int i = 1; i <= a.n(); ++i) s += a(i) * b(i);
  return s;
}

TracelessMatrix::TracelessMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rat(0))
{
  if (n < 2) throw DimensionError("sl(n) needs n >= 2");
}

TracelessMatrix::TracelessMatrix(int n, std::vector<Rat> entries) : TracelessMatrix(n)
{
  if (entries.size() != a_.size()) throw DimensionError("entry count does not match n*n");
  a_ = std::move(entries);
  if (trace() != 0) throw PreconditionError("matrix is not traceless");
}

TracelessMatrix TracelessMatrix::basis(int i, int j, int n)
{
  TracelessMatrix t(n);
  t.a_[t.idx(i, j)] += 1;
  if (i == j)
    for (int k = 1; k <= n; ++k) t.a_[t.idx(k, k)] -= frac(1, n);
  return t;
}

std::size_t TracelessMatrix::idx(int i, int j) const
{
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for n=" + std::to_string(n_));
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void TracelessMatrix::set(int i, int j, const Rat& v) { a_[idx(i, j)] = v; }

void TracelessMatrix::check_same(const TracelessMatrix& o) const
{
  if (n_ != o.n_) throw DimensionError("size mismatch in sl(n) operation");
}

bool TracelessMatrix::is_zero() const
{
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rat TracelessMatrix::trace() const
{
  Rat s = 0;
  for (int i = 1; i <= n_; ++i) s += a_[idx(i, i)];
  return s;
}

TracelessMatrix TracelessMatrix::operator+(const TracelessMatrix& o) const
{
  check_same(o);
  auto r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

TracelessMatrix TracelessMatrix::operator-(const TracelessMatrix& o) const
{
  check_same(o);
  auto r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

TracelessMatrix TracelessMatrix::operator-() const
{
  auto r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

TracelessMatrix operator*(const Rat& c, const TracelessMatrix& x)
{
  auto r = x;
  for (auto& v : r.a_) v *= c;
  return r;
}

std::vector<Rat> matmul(const TracelessMatrix& x, const TracelessMatrix& y)
{
  if (x.n() != y.n()) throw DimensionError("size mismatch in sl(n) operation");
  int n = x.n();
  std::vector<Rat> out(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      const Rat& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 1; j <= n; ++j)
        if (y(k, j) != 0) out[(i - 1) * n + (j - 1)] += xik * y(k, j);
    }
  return out;
}

TracelessMatrix bracket(const TracelessMatrix& x, const TracelessMatrix& y)
{
  auto xy = matmul(x, y);
  auto yx = matmul(y, x);
  for (std::size_t k = 0; k < xy.size(); ++k) xy[k] -= yx[k];
  return TracelessMatrix(x.n(), std::move(xy));
}

TracelessMatrix basis_bracket(int r, int s, int i, int j, int n)
{
  TracelessMatrix out(n);
  if (i == s) out = out + TracelessMatrix::basis(r, j, n);
  if (r == j) out = out - TracelessMatrix::basis(i, s, n);
  if (active_fault() == Fault::kFlipStructureConstant && r == 1 && s == 2 && i == 2 && j == 1)
    out = -out;
  return out;
}

Rat trace_form(const TracelessMatrix& x, const TracelessMatrix& y)
{
  if (x.n() != y.n()) throw DimensionError("size mismatch in trace form");
  Rat s = 0;
  for (int i = 1; i <= x.n(); ++i)
    for (int k = 1; k <= x.n(); ++k) s += x(i, k) * y(k, i);
  return s;
}

Weight weight_of_basis(int i, int j, int n) { return Weight::root(i, j, n); }

Weight rho(int n)
{
  if (n < 2) throw DimensionError("rho needs n >= 2");
  std::vector<Rat> v;
  for (int i = 1; i <= n; ++i) v.push_back(frac(n + 1 - 2 * i, 2));
  return Weight(std::move(v));
}

namespace reduced {

Coords coords(const TracelessMatrix& a)
{
  int n = a.n();
  Coords out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == n && j == n) continue;
      Rat v = (i == j) ? Rat(a(i, i) - a(n, n)) : a(i, j);
      if (v != 0) out.emplace_back(index(i, j, n), std::move(v));
    }
  return out;
}

TracelessMatrix from_coords(int n, const Coords& c)
{
  TracelessMatrix m(n);
  Rat diag_sum = 0;
  for (const auto& [p, v] : c) {
    auto [i, j] = pair(p, n);
    if (i == j) diag_sum += v;
    m.add_to(i, j, v);
  }
  for (int k = 1; k <= n; ++k) m.add_to(k, k, -diag_sum / n);
  return m;
}

std::vector<int> weight(int p, int n)
{
  std::vector<int> w(n, 0);
  auto [i, j] = pair(p, n);
  if (i != j) {
    w[i - 1] += 1;
    w[j - 1] -= 1;
  }
  return w;
}

const StructureTable& structure_table(int n)
{
  static std::mutex mu;
  static std::map<std::pair<int, Fault>, StructureTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, active_fault());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int d = dim(n);
  StructureTable t(d, std::vector<Coords>(d));
  for (int r = 0; r < d; ++r)
    for (int p = 0; p < d; ++p) {
      auto [a, b] = pair(r, n);
      auto [c, e] = pair(p, n);
      t[r][p] = coords(basis_bracket(a, b, c, e, n));
    }
  return cache.emplace(key, std::move(t)).first->second;
}

} // namespace reduced

Rat weyl_dimension(const Weight& lambda)
{
  Rat d = 1;
  int n = lambda.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= (lambda(i) - lambda(j) + (j - i)) / Rat(j - i);
  return d;
}

bool is_dominant_integral(const Weight& lambda)
{
  for (int i = 1; i < lambda.n(); ++i) {
    Rat d = lambda(i) - lambda(i + 1);
    if (!is_integer(d) || sgn(d) < 0) return false;
  }
  return true;
}

} // namespace minrep
