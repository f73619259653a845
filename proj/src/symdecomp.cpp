#include "minrep/symdecomp.hpp"

#include <algorithm>

namespace minrep {

using linalg::SparseVec;

Poly2Elem::Poly2Elem(int n) : n_(n), scalar_(0), linear_(n) {}

Poly2Elem Poly2Elem::constant(int n, const Rat& c)
{
  Poly2Elem v(n);
  v.scalar_ = c;
  return v;
}

Poly2Elem Poly2Elem::linear(const TracelessMatrix& a)
{
  Poly2Elem v(a.n());
  v.linear_ = a;
  return v;
}

Poly2Elem Poly2Elem::product(const TracelessMatrix& x, const TracelessMatrix& y)
{
  if (x.n() != y.n()) throw DimensionError("size mismatch in symmetric product");
  Poly2Elem v(x.n());
  auto cx = reduced::coords(x);
  auto cy = reduced::coords(y);
  for (const auto& [p, a] : cx)
    for (const auto& [q, b] : cy) v.add_quadratic(p, q, a * b);
  return v;
}

Poly2Elem Poly2Elem::monomial(int i, int j, int k, int l, int n)
{
  return product(TracelessMatrix::basis(i, j, n), TracelessMatrix::basis(k, l, n));
}

bool Poly2Elem::is_zero() const { return scalar_ == 0 && linear_.is_zero() && quad_.empty(); }

void Poly2Elem::add_quadratic(int p, int q, const Rat& c)
{
  if (c == 0) return;
  Key key = p <= q ? Key{p, q} : Key{q, p};
  auto [it, inserted] = quad_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) quad_.erase(it);
  }
}

void Poly2Elem::check_same(const Poly2Elem& o) const
{
  if (n_ != o.n_) throw DimensionError("size mismatch in Poly2Elem operation");
}

Poly2Elem Poly2Elem::operator+(const Poly2Elem& o) const
{
  check_same(o);
  Poly2Elem r = *this;
  r.scalar_ += o.scalar_;
  r.linear_ = r.linear_ + o.linear_;
  for (const auto& [k, c] : o.quad_) r.add_quadratic(k.first, k.second, c);
  return r;
}

Poly2Elem Poly2Elem::operator-(const Poly2Elem& o) const { return *this + Rat(-1) * o; }

Poly2Elem operator*(const Rat& c, const Poly2Elem& v)
{
  if (c == 0) return Poly2Elem(v.n_);
  Poly2Elem r = v;
  r.scalar_ *= c;
  r.linear_ = c * r.linear_;
  for (auto& [k, x] : r.quad_) x *= c;
  return r;
}

S2Layout::S2Layout(int n) : n_(n), d_(reduced::dim(n))
{
  row_offset_.resize(d_ + 1);
  std::uint32_t acc = 0;
  for (int p = 0; p <= d_; ++p) {
    row_offset_[p] = acc;
    acc += static_cast<std::uint32_t>(d_ - p);
  }
}

std::uint32_t S2Layout::size() const { return 1 + d_ + row_offset_[d_]; }

std::uint32_t S2Layout::quad_index(int p, int q) const
{
  if (p > q) std::swap(p, q);
  return 1 + d_ + row_offset_[p] + static_cast<std::uint32_t>(q - p);
}

std::pair<int, int> S2Layout::quad_pair(std::uint32_t index) const
{
  std::uint32_t rel = index - 1 - d_;
  auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), rel);
  int p = static_cast<int>(it - row_offset_.begin()) - 1;
  int q = p + static_cast<int>(rel - row_offset_[p]);
  return {p, q};
}

SparseVec S2Layout::encode(const Poly2Elem& v) const
{
  if (v.n() != n_) throw DimensionError("layout size mismatch");
  std::vector<SparseVec::Entry> es;
  if (v.scalar() != 0) es.emplace_back(0, v.scalar());
  for (auto& [p, c] : reduced::coords(v.linear_part())) es.emplace_back(1 + p, c);
  for (const auto& [k, c] : v.quadratic()) es.emplace_back(quad_index(k.first, k.second), c);
  return SparseVec(std::move(es));
}

Poly2Elem S2Layout::decode(const SparseVec& v) const
{
  Poly2Elem out(n_);
  reduced::Coords lin;
  for (const auto& [idx, c] : v.entries()) {
    if (idx == 0) {
      out.add_scalar(c);
    } else if (!is_quadratic(idx)) {
      lin.emplace_back(static_cast<int>(idx) - 1, c);
    } else {
      auto [p, q] = quad_pair(idx);
      out.add_quadratic(p, q, c);
    }
  }
  if (!lin.empty()) out.add_linear(reduced::from_coords(n_, lin));
  return out;
}

WeightKey S2Layout::weight(std::uint32_t index) const
{
  if (index == 0) return WeightKey(n_, 0);
  if (!is_quadratic(index)) return reduced::weight(static_cast<int>(index) - 1, n_);
  auto [p, q] = quad_pair(index);
  auto w = reduced::weight(p, n_);
  auto w2 = reduced::weight(q, n_);
  for (int i = 0; i < n_; ++i) w[i] += w2[i];
  return w;
}

SparseVec S2Layout::act(int r, const SparseVec& v) const
{
  const auto& table = reduced::structure_table(n_)[r];
  std::vector<SparseVec::Entry> out;
  for (const auto& [idx, c] : v.entries()) {
    if (idx == 0) continue;
    if (!is_quadratic(idx)) {
      for (const auto& [k, s] : table[idx - 1]) out.emplace_back(1 + k, c * s);
      continue;
    }
    auto [p, q] = quad_pair(idx);
    for (const auto& [k, s] : table[p]) out.emplace_back(quad_index(k, q), c * s);
    for (const auto& [k, s] : table[q]) out.emplace_back(quad_index(p, k), c * s);
  }
  return SparseVec(std::move(out));
}

GradedAction S2Layout::simple_action() const
{
  std::vector<int> gens;
  for (int i = 1; i < n_; ++i) {
    gens.push_back(reduced::index(i, i + 1, n_));
    gens.push_back(reduced::index(i + 1, i, n_));
  }
  GradedAction g;
  g.generator_count = gens.size();
  S2Layout self = *this;
  g.act = [self, gens](std::size_t k, const SparseVec& v) { return self.act(gens[k], v); };
  g.weight_of_index = [self](std::uint32_t idx) { return self.weight(idx); };
  return g;
}

Poly2Elem adjoint_act(const TracelessMatrix& x, const Poly2Elem& v)
{
  if (x.n() != v.n()) throw DimensionError("size mismatch in adjoint action");
  S2Layout layout(v.n());
  auto enc = layout.encode(v);
  SparseVec acc;
  for (const auto& [r, c] : reduced::coords(x)) acc.axpy(c, layout.act(r, enc));
  return layout.decode(acc);
}

Poly2Elem casimir_element(int n)
{
  Poly2Elem omega(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) omega = omega + Poly2Elem::monomial(i, j, j, i, n);
  return omega;
}

Poly2Elem f1m1_embed(const TracelessMatrix& a, const Rat& param)
{
  int n = a.n();
  Poly2Elem out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 1; k <= n; ++k) out = out + a(i, j) * Poly2Elem::monomial(i, k, k, j, n);
    }
  Rat shift = param * (n - 2) / n;
  out.add_linear(-shift * a);
  return out;
}

std::size_t rank_of(const std::vector<Poly2Elem>& family) { return span_basis(family).size(); }

std::vector<Poly2Elem> span_basis(const std::vector<Poly2Elem>& family)
{
  if (family.empty()) return {};
  S2Layout layout(family.front().n());
  auto g = layout.simple_action();
  GradedSpan span;
  for (const auto& v : family) span.insert(layout.encode(v), g);
  std::vector<Poly2Elem> out;
  for (const auto& row : span.basis()) out.push_back(layout.decode(row));
  return out;
}

SubspaceBasis adjoint_closure(const std::vector<Poly2Elem>& seeds, bool parallel)
{
  SubspaceBasis out;
  out.submodule = true;
  out.description = "adjoint closure";
  if (seeds.empty()) return out;
  out.n = seeds.front().n();
  S2Layout layout(out.n);
  auto g = layout.simple_action();
  std::vector<SparseVec> enc;
  for (const auto& s : seeds) enc.push_back(layout.encode(s));
  auto span = parallel ? closure_parallel(enc, g) : closure_serial(enc, g);
  for (const auto& row : span.basis()) out.elements.push_back(layout.decode(row));
  return out;
}

bool is_adjoint_stable(const std::vector<Poly2Elem>& family)
{
  if (family.empty()) return true;
  S2Layout layout(family.front().n());
  auto g = layout.simple_action();
  GradedSpan span;
  for (const auto& v : family) span.insert(layout.encode(v), g);
  return is_stable(span, g);
}

std::map<WeightKey, Poly2Elem> weight_components(const Poly2Elem& v)
{
  S2Layout layout(v.n());
  auto g = layout.simple_action();
  std::map<WeightKey, Poly2Elem> out;
  for (auto& [w, part] : split_by_weight(layout.encode(v), g)) out.emplace(w, layout.decode(part));
  return out;
}

SubspaceBasis f1111_generators(int n)
{
  if (n < 2) throw DimensionError("n must be at least 2");
  std::vector<Poly2Elem> spanning;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == l || i == k) continue;  // the difference vanishes identically
          spanning.push_back(Poly2Elem::monomial(i, j, k, l, n) - Poly2Elem::monomial(i, l, k, j, n));
        }
  SubspaceBasis out;
  out.n = n;
  out.description = "span of T_ij T_kl - T_il T_kj";
  out.submodule = true;
  out.elements = span_basis(spanning);
  return out;
}

Poly2Elem t_map(const TracelessMatrix& a)
{
  int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (a(i, j) != 0) throw PreconditionError("t_map expects a strictly upper triangular matrix");
  Poly2Elem out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (a(i, j) == 0) continue;
      out = out + a(i, j) * (Poly2Elem::monomial(i, i, j, j, n) - Poly2Elem::monomial(i, j, j, i, n));
    }
  return out;
}

SubspaceBasis m_space(int i, int j, int k, int l, int n)
{
  if (!(1 <= i && i < j && j < k && k < l && l <= n))
    throw PreconditionError("m_space needs 1 <= i < j < k < l <= n");
  auto element = [&](const Rat& a1, const Rat& a2, const Rat& a3) {
    auto T = [n](int r, int s) { return TracelessMatrix::basis(r, s, n); };
    return Poly2Elem::linear(a1 * (T(i, j) + T(k, l)) + a2 * (T(i, k) + T(j, l)) + a3 * (T(i, l) + T(j, k)));
  };
  SubspaceBasis out;
  out.n = n;
  out.description = "M_{ijkl}";
  out.elements = {element(1, -1, 0), element(0, 1, -1)};
  return out;
}

SubspaceBasis zero_weight_f1111(int n)
{
  if (n < 4) throw PreconditionError("the zero weight space of F(e1+e2-e(n-1)-en) needs n >= 4");
  std::vector<Poly2Elem> images;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (const auto& m : m_space(i, j, k, l, n).elements) images.push_back(t_map(m.linear_part()));
  SubspaceBasis out;
  out.n = n;
  out.description = "zero weight space of F(e1+e2-e(n-1)-en)";
  out.elements = span_basis(images);
  return out;
}

namespace {

// (T_p, T_q) = Tr(T_p T_q^t) on the reduced basis.
Rat gram(int p, int q, int n)
{
  auto [i, j] = reduced::pair(p, n);
  auto [k, l] = reduced::pair(q, n);
  if (i != j || k != l) return (i == k && j == l) ? Rat(1) : Rat(0);
  return Rat(i == k ? 1 : 0) - frac(1, n);
}

} // namespace

Rat hermitian_product(const Poly2Elem& u, const Poly2Elem& v)
{
  if (u.n() != v.n()) throw DimensionError("size mismatch in Hermitian product");
  int n = u.n();
  Rat total = u.scalar() * v.scalar();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) total += u.linear_part()(i, j) * v.linear_part()(i, j);
  for (const auto& [ku, cu] : u.quadratic())
    for (const auto& [kv, cv] : v.quadratic()) {
      Rat g = gram(ku.first, kv.first, n) * gram(ku.second, kv.second, n) +
              gram(ku.first, kv.second, n) * gram(ku.second, kv.first, n);
      if (g != 0) total += cu * cv * g / 2;
    }
  return total;
}

namespace {

Poly2Elem f1111_hw_vector(int n)
{
  return Poly2Elem::monomial(1, n - 1, 2, n, n) - Poly2Elem::monomial(1, n, 2, n - 1, n);
}

} // namespace

SubspaceBasis fa_space(int n, const Rat& param)
{
  SubspaceBasis out;
  out.n = n;
  out.submodule = true;
  out.description = "F^a";
  if (n == 2) return out;
  if (n >= 4) out.elements = adjoint_closure({f1111_hw_vector(n)}).elements;
  for (int p = 0; p < reduced::dim(n); ++p) {
    auto [i, j] = reduced::pair(p, n);
    out.elements.push_back(f1m1_embed(TracelessMatrix::basis(i, j, n), param));
  }
  return out;
}

std::vector<Poly2Elem> fa_lowest_vectors(int n, const Rat& param)
{
  std::vector<Poly2Elem> out;
  if (n <= 2) return out;
  if (n >= 4) out.push_back(Poly2Elem::monomial(n, 1, n - 1, 2, n) - Poly2Elem::monomial(n, 2, n - 1, 1, n));
  Poly2Elem v(n);
  for (int k = 1; k <= n; ++k) v = v + Poly2Elem::monomial(n, k, k, 1, n);
  v.add_linear(-(param * (n - 2) / n) * TracelessMatrix::basis(n, 1, n));
  out.push_back(v);
  return out;
}

std::vector<S2Summand> s2_summands(int n)
{
  if (n < 2) throw DimensionError("n must be at least 2");
  std::vector<S2Summand> out;
  auto w = [n](std::vector<std::pair<int, int>> terms) {
    std::vector<Rat> v(n, Rat(0));
    for (auto [i, c] : terms) v[i - 1] += c;
    return Weight(std::move(v));
  };
  out.push_back({"F(2e1-2en)", w({{1, 2}, {n, -2}}), Poly2Elem::monomial(1, n, 1, n, n)});
  if (n >= 4)
    out.push_back({"F(e1+e2-e(n-1)-en)", w({{1, 1}, {2, 1}, {n - 1, -1}, {n, -1}}), f1111_hw_vector(n)});
  if (n >= 3) {
    Poly2Elem v(n);
    for (int k = 1; k <= n; ++k) v = v + Poly2Elem::monomial(1, k, k, n, n);
    out.push_back({"F(e1-en)", w({{1, 1}, {n, -1}}), v});
  }
  out.push_back({"F(0)", Weight::zero(n), casimir_element(n)});
  return out;
}

bool S2Decomposition::ok() const
{
  if (!hw_vectors_primitive) return false;
  std::size_t sum = 0;
  for (std::size_t k = 0; k < closure_dims.size(); ++k) {
    if (Rat(static_cast<unsigned long>(closure_dims[k])) != weyl_dims[k]) return false;
    sum += closure_dims[k];
  }
  return sum == expected_total && combined_rank == expected_total;
}

S2Decomposition decompose_s2(int n, bool parallel)
{
  S2Decomposition out;
  out.n = n;
  std::size_t d = static_cast<std::size_t>(n) * n - 1;
  out.expected_total = d * (d + 1) / 2;
  S2Layout layout(n);
  auto g = layout.simple_action();
  GradedSpan combined;
  for (const auto& s : s2_summands(n)) {
    for (int i = 1; i < n; ++i)
      if (!adjoint_act(TracelessMatrix::basis(i, i + 1, n), s.hw_vector).is_zero())
        out.hw_vectors_primitive = false;
    auto enc = layout.encode(s.hw_vector);
    auto span = parallel ? closure_parallel({enc}, g) : closure_serial({enc}, g);
    out.labels.push_back(s.label);
    out.closure_dims.push_back(span.rank());
    out.weyl_dims.push_back(weyl_dimension(s.highest_weight));
    for (const auto& row : span.basis()) combined.insert(row, g);
  }
  out.combined_rank = combined.rank();
  return out;
}

} // namespace minrep
