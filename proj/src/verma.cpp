#include "minrep/verma.hpp"

#include "minrep/linalg.hpp"

#include <set>
#include <stdexcept>

namespace minrep {

Weight lambda_ia(int n, int i, const Rat& a)
{
  if (n < 2) throw DimensionError("n must be at least 2");
  if (i < 1 || i > n) throw PreconditionError("label i out of range 1..n");
  std::vector<Rat> v;
  Rat low = (-a - frac(n, 2)) / n;
  Rat mid = ((n - 1) * a - frac(n * (n + 1 - 2 * i), 2)) / n;
  Rat high = (-a + frac(n, 2)) / n;
  for (int k = 1; k < i; ++k) v.push_back(low);
  v.push_back(mid);
  for (int k = i + 1; k <= n; ++k) v.push_back(high);
  return Weight(std::move(v));
}

VermaState act_on_hwv(const UEElem& u, const Weight& lambda)
{
  ParabolicSpec b{ParabolicSpec::Kind::kBorel, u.n()};
  return {lambda, reduce_mod_ideal(u, b, lambda)};
}

AnnihilatorProbe::AnnihilatorProbe(const SubspaceBasis& space) : n_(space.n)
{
  if (space.elements.empty()) return;
  if (!is_adjoint_stable(space.elements)) throw PreconditionError("space is not stable under the adjoint action");
  WeightKey zero(n_, 0);
  std::vector<Poly2Elem> parts;
  for (const auto& v : space.elements) {
    auto comps = weight_components(v);
    if (auto it = comps.find(zero); it != comps.end()) parts.push_back(it->second);
  }
  for (const auto& p : span_basis(parts)) zero_weight_.push_back(symmetrize(p));
}

std::vector<Rat> AnnihilatorProbe::scalars(const Weight& lambda) const
{
  std::vector<Rat> out;
  for (const auto& u : zero_weight_) {
    auto state = act_on_hwv(u, lambda);
    // zero weight elements send m_λ into the λ weight space, which is C m_λ
    if (state.amplitude.terms().size() > 1 || (state.amplitude.terms().size() == 1 && state.scalar() == 0))
      throw std::logic_error("zero weight element left the highest weight space");
    out.push_back(state.scalar());
  }
  return out;
}

bool AnnihilatorProbe::annihilates(const Weight& lambda) const
{
  for (const auto& s : scalars(lambda))
    if (s != 0) return false;
  return true;
}

bool annihilates_hwv(const SubspaceBasis& space, const Weight& lambda)
{
  return AnnihilatorProbe(space).annihilates(lambda);
}

namespace {

// c·λ + constant
struct LinearForm {
  std::vector<Rat> c;
  Rat constant;
};

struct ProductConstraint {
  LinearForm f, g;
};

LinearForm form(int n, std::vector<std::pair<int, int>> terms, const Rat& constant)
{
  LinearForm f{std::vector<Rat>(n, Rat(0)), constant};
  for (auto [i, s] : terms) f.c[i - 1] += s;
  return f;
}

struct Affine {
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;
};

enum class Status { kIdenticallyZero, kNonzeroConstant, kProper };

Status status(const LinearForm& f, const Affine& s)
{
  bool varies = false;
  for (const auto& k : s.kernel) {
    Rat v = 0;
    for (std::size_t i = 0; i < k.size(); ++i) v += f.c[i] * k[i];
    if (v != 0) varies = true;
  }
  if (varies) return Status::kProper;
  Rat at = f.constant;
  for (std::size_t i = 0; i < f.c.size(); ++i) at += f.c[i] * s.particular[i];
  return at == 0 ? Status::kIdenticallyZero : Status::kNonzeroConstant;
}

bool solve(const std::vector<LinearForm>& eqs, std::size_t n, Affine& out)
{
  linalg::DenseMatrix m;
  std::vector<Rat> rhs;
  for (const auto& e : eqs) {
    m.push_back(e.c);
    rhs.push_back(-e.constant);
  }
  return linalg::solve_affine(m, rhs, n, out.particular, out.kernel);
}

void branch(const std::vector<ProductConstraint>& cons, std::size_t idx, std::vector<LinearForm>& eqs, int n,
            std::set<Weight>& points, bool& family)
{
  Affine s;
  if (!solve(eqs, n, s)) return;
  while (idx < cons.size()) {
    auto sf = status(cons[idx].f, s);
    auto sg = status(cons[idx].g, s);
    if (sf == Status::kIdenticallyZero || sg == Status::kIdenticallyZero) {
      ++idx;
      continue;
    }
    for (const auto* factor : {&cons[idx].f, &cons[idx].g}) {
      if (status(*factor, s) == Status::kNonzeroConstant) continue;
      eqs.push_back(*factor);
      branch(cons, idx + 1, eqs, n, points, family);
      eqs.pop_back();
    }
    return;
  }
  if (!s.kernel.empty()) {
    family = true;
    return;
  }
  points.insert(Weight(s.particular));
}

} // namespace

AnnihilatorSolution solve_annihilator_weights(int n, const Rat& a)
{
  if (n < 2) throw DimensionError("n must be at least 2");
  std::vector<ProductConstraint> cons;
  for (int i = 1; i < n; ++i) {
    Rat shift = frac(n, 2) - i - a * (n - 2) / n;
    cons.push_back({form(n, {{i + 1, 1}, {i, -1}}, 0), form(n, {{i + 1, 1}, {i, 1}}, shift)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          cons.push_back({form(n, {{i, 1}, {l, -1}}, 1), form(n, {{j, 1}, {k, -1}}, 0)});
          cons.push_back({form(n, {{i, 1}, {j, -1}}, 0), form(n, {{k, 1}, {l, -1}}, 0)});
        }
  std::vector<LinearForm> eqs{LinearForm{std::vector<Rat>(n, Rat(1)), Rat(0)}};
  std::set<Weight> points;
  bool family = false;
  branch(cons, 0, eqs, n, points, family);

  AnnihilatorSolution out;
  out.all_weights = family;
  if (family) return out;
  for (const auto& p : points) {
    LabeledWeight lw{p, {}};
    for (int i = 1; i <= n; ++i)
      if (lambda_ia(n, i, a) == p) lw.labels.push_back(i);
    out.weights.push_back(std::move(lw));
  }
  return out;
}

namespace {

TracelessMatrix diagonal(const Weight& w)
{
  TracelessMatrix m(w.n());
  for (int i = 1; i <= w.n(); ++i) m.set(i, i, w(i));
  return m;
}

} // namespace

CasimirPaths casimir_paths(const Weight& lambda)
{
  int n = lambda.n();
  auto shifted = diagonal(lambda + rho(n));
  auto r = diagonal(rho(n));
  CasimirPaths out;
  out.norm_path = trace_form(shifted, shifted) - trace_form(r, r);
  auto state = act_on_hwv(symmetrize(casimir_element(n)), lambda);
  if (state.amplitude.terms().size() > 1) throw std::logic_error("Casimir element moved the highest weight vector");
  out.action_path = state.scalar();
  return out;
}

Rat casimir_scalar(const Weight& lambda)
{
  auto p = casimir_paths(lambda);
  if (p.norm_path != p.action_path)
    throw std::logic_error("Casimir computation paths disagree: " + to_string(p.norm_path) + " vs " +
                           to_string(p.action_path));
  return p.norm_path;
}

Rat casimir_expected(int n, const Rat& a) { return Rat(n - 1) * (2 * a + n) * (2 * a - n) / (4 * n); }

GvmResult check_generalized_verma_at(int n, const Rat& a, const ParabolicSpec& q, const Weight& lambda)
{
  if (q.kind == ParabolicSpec::Kind::kBorel)
    throw PreconditionError("generalized Verma check needs q(1,n-1) or q(n-1,1)");
  if (q.n != n || lambda.n() != n) throw DimensionError("size mismatch in generalized Verma check");
  GvmResult out;
  out.lambda = lambda;
  if (!q.is_character(lambda)) {
    out.reason = "weight is not a character of " + q.name();
    return out;
  }
  bool annihilated = true;
  for (const auto& v : fa_lowest_vectors(n, a)) {
    auto r = reduce_mod_ideal(symmetrize(v), q, lambda);
    if (!r.is_zero()) annihilated = false;
    out.residuals.push_back(std::move(r));
  }
  auto omega = reduce_mod_ideal(symmetrize(casimir_element(n)), q, lambda);
  out.casimir = omega.coefficient({});
  bool casimir_ok = omega.terms().size() <= 1 && out.casimir == casimir_expected(n, a);
  out.passed = annihilated && casimir_ok;
  if (!annihilated) out.reason = "lowest vectors of F^a leave a nonzero residual";
  else if (!casimir_ok) out.reason = "Casimir scalar differs from (n-1)(2a+n)(2a-n)/(4n)";
  return out;
}

GvmResult check_generalized_verma_detail(int n, const Rat& a, const ParabolicSpec& q)
{
  if (q.kind == ParabolicSpec::Kind::kBorel)
    throw PreconditionError("generalized Verma check needs q(1,n-1) or q(n-1,1)");
  Weight lambda = lambda_ia(n, q.kind == ParabolicSpec::Kind::kQ1 ? 1 : n, a);
  return check_generalized_verma_at(n, a, q, lambda);
}

bool check_generalized_verma(int n, const Rat& a, const ParabolicSpec& q)
{
  return check_generalized_verma_detail(n, a, q).passed;
}

bool is_finite_dimensional(const HWLabel& label)
{
  return is_dominant_integral(lambda_ia(label.n, label.i, label.a));
}

bool finite_dimensional_by_condition(const HWLabel& label)
{
  if (label.i == 1 && in_shifted_naturals(label.a, frac(label.n, 2))) return true;
  if (label.i == label.n && in_shifted_neg_naturals(label.a, frac(-label.n, 2))) return true;
  return false;
}

} // namespace minrep
