#include "minrep/sl3kernel.hpp"

#include "minrep/parallel.hpp"
#include "minrep/symdecomp.hpp"

#include <omp.h>

namespace minrep {

using linalg::DenseMatrix;

PolyT::PolyT(int m, std::vector<Rat> c) : m(m), coeffs(std::move(c))
{
  if (static_cast<int>(coeffs.size()) != m + 1) throw DimensionError("PolyT needs m+1 coefficients");
}

bool PolyT::is_zero() const { return low_degree() < 0; }

int PolyT::low_degree() const
{
  for (int j = 0; j <= m; ++j)
    if (coeffs[j] != 0) return j;
  return -1;
}

PolyT PolyT::normalized() const
{
  int d = low_degree();
  if (d < 0) return *this;
  PolyT out = *this;
  Rat inv = 1 / coeffs[d];
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

PolyT PolyT::m_reversal() const
{
  PolyT out(m);
  for (int j = 0; j <= m; ++j) out.coeffs[m - j] = (j % 2 == 0) ? Rat(-coeffs[j]) : coeffs[j];
  return out;
}

bool PolyT::proportional_to(const PolyT& o) const
{
  if (m != o.m) return false;
  int d = low_degree();
  if (d != o.low_degree()) return false;
  if (d < 0) return true;
  Rat r = o.coeffs[d] / coeffs[d];
  for (int j = 0; j <= m; ++j)
    if (o.coeffs[j] != r * coeffs[j]) return false;
  return true;
}

bool PolyT::has_parity(int parity) const
{
  for (int j = 0; j <= m; ++j)
    if ((j % 2) != parity && coeffs[j] != 0) return false;
  return true;
}

bool MPair::proportional_to(const MPair& o) const
{
  if (m != o.m) return false;
  // One scalar for both components.
  const PolyT& lead = q1.is_zero() ? q2 : q1;
  const PolyT& olead = q1.is_zero() ? o.q2 : o.q1;
  int d = lead.low_degree();
  if (d < 0 || d != olead.low_degree()) return q1.is_zero() && q2.is_zero() && o.q1.is_zero() && o.q2.is_zero();
  Rat r = olead.coeffs[d] / lead.coeffs[d];
  for (int j = 0; j <= m; ++j)
    if (o.q1.coeffs[j] != r * q1.coeffs[j] || o.q2.coeffs[j] != r * q2.coeffs[j]) return false;
  return true;
}

DenseMatrix pi_m(SL2Gen g, int m)
{
  if (m < 0) throw PreconditionError("m must be nonnegative");
  auto out = linalg::zeros(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    switch (g) {
    case SL2Gen::kH: out[j][j] = m - 2 * j; break;
    case SL2Gen::kE:
      if (j > 0) out[j - 1][j] = -j;
      break;
    case SL2Gen::kF:
      if (j < m) out[j + 1][j] = j - m;
      break;
    }
  }
  return out;
}

DenseMatrix operator_4X(int m, const Rat& a)
{
  if (m < 0) throw PreconditionError("m must be nonnegative");
  auto out = linalg::zeros(m + 1, m + 1);
  for (int l = 0; l <= m; ++l) {
    if (l < m) out[l + 1][l] = (m - l) * (-m + 2 * l + 1 + 2 * a);
    if (l > 0) out[l - 1][l] = -l * (m - 2 * l + 1 + 2 * a);
  }
  return out;
}

DenseMatrix operator_4X_factored(int m, const Rat& a)
{
  auto h = pi_m(SL2Gen::kH, m);
  auto e = pi_m(SL2Gen::kE, m);
  auto f = pi_m(SL2Gen::kF, m);
  auto first = linalg::multiply(linalg::add(f, e), h);
  auto second = linalg::add(e, linalg::scaled(f, Rat(-1)));
  return linalg::add(first, linalg::scaled(second, 1 + 2 * a));
}

PolyT apply(const DenseMatrix& op, const PolyT& p)
{
  return PolyT(p.m, linalg::apply(op, p.coeffs));
}

std::vector<PolyT> recurrence_solve(int m, const Rat& a)
{
  if (m < 0 || m % 2 == 0) throw PreconditionError("recurrence_solve needs odd m");
  // α_l a_{l+1} = β_l a_{l-1}, the t^l coefficient of π_m(4X)q.
  auto alpha = [&](int l) { return Rat((l + 1) * (m - 2 * l - 1 + 2 * a)); };
  auto beta = [&](int l) { return Rat((m - l + 1) * (-m + 2 * l - 1 + 2 * a)); };

  std::vector<PolyT> out;
  for (int r = 0; r <= 1; ++r) {
    std::vector<std::vector<Rat>> basis;
    for (int l = r - 1; l <= m + 1; l += 2) {
      int u = l + 1;
      int prev = l - 1;
      Rat al = l < 0 ? Rat(0) : alpha(l);
      Rat be = (l < 0 || prev < 0) ? Rat(0) : beta(l);
      if (u <= m && al != 0) {
        for (auto& v : basis) v[u] = be * v[prev] / al;
        continue;
      }
      if (be != 0) {
        int pivot = -1;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (basis[i][prev] != 0) {
            pivot = static_cast<int>(i);
            break;
          }
        if (pivot >= 0) {
          auto p = basis[pivot];
          basis.erase(basis.begin() + pivot);
          for (auto& v : basis) {
            if (v[prev] == 0) continue;
            Rat f = v[prev] / p[prev];
            for (int j = 0; j <= m; ++j) v[j] -= f * p[j];
          }
        }
      }
      if (u <= m) {
        std::vector<Rat> fresh(m + 1, Rat(0));
        fresh[u] = 1;
        basis.push_back(std::move(fresh));
      }
    }
    for (auto& v : basis) {
      PolyT p(m, std::move(v));
      if (!p.is_zero()) out.push_back(p.normalized());
    }
  }
  return out;
}

Rat k0_of(int m, const Rat& a) { return (m - 1 - 2 * a) / 4; }

namespace {

Rat pochhammer(const Rat& x, int l)
{
  Rat out = 1;
  for (int i = 0; i < l; ++i) out *= x + i;
  return out;
}

PolyT even_series(int m, const Rat& u1, const Rat& u2, const Rat& lower, int terms)
{
  PolyT out(m);
  Rat fact = 1;
  for (int l = 0; l <= terms; ++l) {
    if (l > 0) fact *= l;
    if (2 * l > m) throw DimensionError("series exceeds degree bound");
    out.coeffs[2 * l] = pochhammer(u1, l) * pochhammer(u2, l) / (fact * pochhammer(lower, l));
  }
  return out;
}

} // namespace

std::optional<PolyT> truncated_2f1(int m, const Rat& a)
{
  Rat k0 = k0_of(m, a);
  if (!is_integer(k0) || sgn(k0) < 0 || 2 * k0 > m - 1) return std::nullopt;
  int k = static_cast<int>(k0.get_num().get_si());
  return even_series(m, frac(-m, 2), -k0, k0 + 1 - frac(m, 2), k);
}

int m_of(const Rat& a, int k)
{
  if (!is_integer(a)) throw PreconditionError("m(a,k) needs integer a");
  return static_cast<int>(abs_rat(a).get_num().get_si()) * 2 + 1 + 4 * k;
}

PolyT q_poly(const Rat& a, int k)
{
  if (!is_integer(a)) throw PreconditionError("q(a,k) needs integer a");
  if (k < 0) throw PreconditionError("k must be nonnegative");
  int m = m_of(a, k);
  Rat abs_a = abs_rat(a);
  Rat u1 = -abs_a - frac(1, 2) - 2 * k;
  Rat u2 = -a / 2 - abs_a / 2 - k;
  Rat lower = a / 2 - abs_a / 2 + frac(1, 2) - k;
  Rat top = a / 2 + abs_a / 2 + k;
  return even_series(m, u1, u2, lower, static_cast<int>(top.get_num().get_si()));
}

bool is_m_invariant(const MPair& p)
{
  if (p.m % 2 == 0 || p.q1.m != p.m || p.q2.m != p.m) return false;
  int parity = (p.m % 4 == 1) ? 1 : 0;
  if (!p.q1.has_parity(parity)) return false;
  return !p.q2.is_zero() && p.q2 == p.q1.m_reversal();
}

std::vector<PolyT> m_invariant_pairs(int m)
{
  if (m < 0) throw PreconditionError("m must be nonnegative");
  std::vector<PolyT> out;
  if (m % 2 == 0) return out;
  int parity = (m % 4 == 1) ? 1 : 0;
  for (int j = parity; j <= m; j += 2) {
    PolyT p(m);
    p.coeffs[j] = 1;
    out.push_back(p);
  }
  return out;
}

MPair pair_from_q1(const PolyT& q1) { return {q1.m, q1, q1.m_reversal()}; }

namespace {

std::vector<MPair> pairs_from_combinations(int m, const std::vector<PolyT>& cands,
                                           const std::vector<std::vector<Rat>>& combos)
{
  linalg::EchelonBasis seen;
  std::vector<MPair> out;
  for (const auto& x : combos) {
    PolyT q1(m);
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (int j = 0; j <= m; ++j) q1.coeffs[j] += x[i] * cands[i].coeffs[j];
    std::vector<linalg::SparseVec::Entry> e;
    for (int j = 0; j <= m; ++j) e.emplace_back(j, q1.coeffs[j]);
    if (q1.is_zero() || !seen.insert(linalg::SparseVec(e))) continue;
    out.push_back(pair_from_q1(q1.normalized()));
  }
  return out;
}

} // namespace

std::vector<MPair> kernel_pairs(int m, const Rat& a)
{
  if (m < 0 || m % 2 == 0) return {};
  int parity = (m % 4 == 1) ? 1 : 0;
  auto ker = recurrence_solve(m, a);
  std::vector<PolyT> cands, others;
  for (auto& p : ker) (p.has_parity(parity) ? cands : others).push_back(p);
  if (cands.empty()) return {};
  // Σ x_i R(c_i) must lie in the span of the opposite-parity solutions.
  std::size_t cols = cands.size() + others.size();
  auto sys = linalg::zeros(m + 1, cols);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto r = cands[i].m_reversal();
    for (int j = 0; j <= m; ++j) sys[j][i] = r.coeffs[j];
  }
  for (std::size_t i = 0; i < others.size(); ++i)
    for (int j = 0; j <= m; ++j) sys[j][cands.size() + i] = -others[i].coeffs[j];
  auto null = linalg::nullspace(sys, cols);
  for (auto& v : null) v.resize(cands.size());
  return pairs_from_combinations(m, cands, null);
}

std::vector<MPair> kernel_pairs_dense(int m, const Rat& a)
{
  if (m < 0 || m % 2 == 0) return {};
  int parity = (m % 4 == 1) ? 1 : 0;
  auto op = operator_4X(m, a);
  auto rev = linalg::zeros(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) rev[m - j][j] = (j % 2 == 0) ? -1 : 1;
  auto op_rev = linalg::multiply(op, rev);
  DenseMatrix sys;
  for (int j = 0; j <= m; ++j) {
    if (j % 2 == parity) continue;
    std::vector<Rat> row(m + 1, Rat(0));
    row[j] = 1;
    sys.push_back(std::move(row));
  }
  for (auto& row : op) sys.push_back(row);
  for (auto& row : op_rev) sys.push_back(row);
  auto null = linalg::nullspace(sys, m + 1);
  std::vector<PolyT> unit;
  for (int j = 0; j <= m; ++j) {
    PolyT p(m);
    p.coeffs[j] = 1;
    unit.push_back(p);
  }
  return pairs_from_combinations(m, unit, null);
}

MPair displayed_pair(const Rat& a, int k, const Rat& b)
{
  if (!is_integer(a) || !is_integer(b)) throw PreconditionError("displayed pair needs integer a");
  int m = m_of(a, k);
  if (m_of(b, k) != m) throw PreconditionError("|b| must equal |a|");
  PolyT q = q_poly(b, k);
  PolyT r(m);
  for (int j = 0; j <= m; ++j)
    if (q.coeffs[j] != 0) r.coeffs[m - j] = -q.coeffs[j];
  bool even = a.get_num() % 2 == 0;
  return even ? MPair{m, r, q} : MPair{m, q, r};
}

namespace {

std::vector<KernelEntry> entries_at(const Rat& a, int m)
{
  std::vector<KernelEntry> out;
  for (auto& pair : kernel_pairs(m, a)) {
    KernelEntry e;
    e.m = m;
    e.pair = pair;
    if (is_integer(a)) {
      int base = m_of(a, 0);
      if (m >= base && (m - base) % 4 == 0) {
        int k = (m - base) / 4;
        auto lit = displayed_pair(a, k, a);
        e.matches_display_at_a = pair.proportional_to(lit);
        e.matches_display_at_minus_a = pair.proportional_to(displayed_pair(a, k, -a));
        e.display_is_m_invariant = is_m_invariant(lit);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

KernelReport assemble(const Rat& a, int m_max, std::vector<std::vector<KernelEntry>>& per_m)
{
  KernelReport rep;
  rep.a = a;
  rep.m_max = m_max;
  for (std::size_t i = 0; i < per_m.size(); ++i) {
    int m = 2 * static_cast<int>(i) + 1;
    rep.dims.emplace_back(m, static_cast<int>(per_m[i].size()));
    for (auto& e : per_m[i]) rep.entries.push_back(std::move(e));
  }
  return rep;
}

} // namespace

KernelReport kernel_report_serial(const Rat& a, int m_max)
{
  if (m_max < 1) throw PreconditionError("m_max must be at least 1");
  std::vector<std::vector<KernelEntry>> per_m((m_max + 1) / 2);
  for (std::size_t i = 0; i < per_m.size(); ++i) per_m[i] = entries_at(a, 2 * static_cast<int>(i) + 1);
  return assemble(a, m_max, per_m);
}

KernelReport kernel_report(const Rat& a, int m_max)
{
  if (m_max < 1) throw PreconditionError("m_max must be at least 1");
  std::vector<std::vector<KernelEntry>> per_m((m_max + 1) / 2);
  int count = static_cast<int>(per_m.size());
  int workers = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (int i = count - 1; i >= 0; --i) per_m[i] = entries_at(a, 2 * i + 1);
  return assemble(a, m_max, per_m);
}

UEElem iota_sym_lowest(const Rat& a)
{
  auto low = fa_lowest_vectors(3, a);
  return iota(symmetrize(low.back()));
}

Lambda2aResult lambda2a_detail(const Rat& a, const Weight& lambda)
{
  if (lambda.n() != 3) throw DimensionError("lambda2a_check is for sl(3)");
  const auto& env = envelope(3);
  ParabolicSpec borel{ParabolicSpec::Kind::kBorel, 3};
  Lambda2aResult r;
  r.lowest = iota_sym_lowest(a);
  auto t12 = UEElem::generator(3, env.root_id(1, 2));
  auto t23 = UEElem::generator(3, env.root_id(2, 3));
  r.reduced_12 = reduce_mod_ideal(commutator(t12, r.lowest), borel, lambda);
  r.reduced_23 = reduce_mod_ideal(commutator(t23, r.lowest), borel, lambda);
  auto g32 = env.root_id(3, 2);
  auto g21 = env.root_id(2, 1);
  r.coeff_32 = r.reduced_12.coefficient({g32});
  r.coeff_21 = r.reduced_23.coefficient({g21});
  r.shape_ok = r.reduced_12 == r.coeff_32 * UEElem::generator(3, g32) &&
               r.reduced_23 == r.coeff_21 * UEElem::generator(3, g21);
  r.holds = r.reduced_12.is_zero() && r.reduced_23.is_zero();
  return r;
}

bool lambda2a_check(const Rat& a, const Weight& lambda) { return lambda2a_detail(a, lambda).holds; }

UEElem x_element(const Rat& a)
{
  auto b = [](int i, int j) { return TracelessMatrix::basis(i, j, 3); };
  auto k1 = UEElem::from_matrix(b(2, 1) - b(1, 2));
  auto k2 = UEElem::from_matrix(b(3, 2) - b(2, 3));
  auto k3 = UEElem::from_matrix(b(3, 1) - b(1, 3));
  return k1 * k2 + (a + frac(1, 2)) * k3;
}

} // namespace minrep
