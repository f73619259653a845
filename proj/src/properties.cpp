#include "minrep/verify.hpp"

#include "minrep/classify.hpp"
#include "minrep/gen.hpp"
#include "minrep/parallel.hpp"
#include "minrep/sl3kernel.hpp"
#include "minrep/symdecomp.hpp"
#include "minrep/verma.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace minrep {

using linalg::DenseMatrix;

namespace {

DenseMatrix defining_matrix(const TracelessMatrix& x)
{
  int n = x.n();
  auto m = linalg::zeros(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = x(i, j);
  return m;
}

DenseMatrix adjoint_matrix(const TracelessMatrix& x)
{
  int n = x.n();
  int d = reduced::dim(n);
  auto m = linalg::zeros(d, d);
  for (int p = 0; p < d; ++p) {
    auto img = bracket(x, reduced::from_coords(n, {{p, Rat(1)}}));
    for (auto& [q, c] : reduced::coords(img)) m[q][p] = c;
  }
  return m;
}

DenseMatrix identity(std::size_t d)
{
  auto m = linalg::zeros(d, d);
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

using Check = std::function<std::optional<std::string>()>;

CheckResult run_check(const std::string& name, const Check& body)
{
  CheckResult r{name, false, ""};
  try {
    auto failure = body();
    r.passed = !failure;
    if (failure) r.detail = *failure;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

reduced::Coords table_bracket(int n, const reduced::Coords& a, const reduced::Coords& b)
{
  const auto& table = reduced::structure_table(n);
  std::map<int, Rat> acc;
  for (auto& [r, x] : a)
    for (auto& [p, y] : b)
      for (auto& [q, z] : table[r][p]) acc[q] += x * y * z;
  reduced::Coords out;
  for (auto& [q, c] : acc)
    if (c != 0) out.emplace_back(q, c);
  return out;
}

std::optional<std::string> bracket_vs_commutator()
{
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            auto closed = basis_bracket(r, s, i, j, n);
            auto direct = bracket(TracelessMatrix::basis(r, s, n), TracelessMatrix::basis(i, j, n));
            if (!(closed == direct)) {
              std::ostringstream os;
              os << "n=" << n << " [T" << r << s << ",T" << i << j << "] differs from the matrix commutator";
              return os.str();
            }
          }
  return std::nullopt;
}

std::optional<std::string> jacobi()
{
  for (int n = 2; n <= 4; ++n) {
    int d = reduced::dim(n);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          reduced::Coords X{{x, Rat(1)}}, Y{{y, Rat(1)}}, Z{{z, Rat(1)}};
          std::map<int, Rat> sum;
          for (auto& [q, c] : table_bracket(n, X, table_bracket(n, Y, Z))) sum[q] += c;
          for (auto& [q, c] : table_bracket(n, Y, table_bracket(n, Z, X))) sum[q] += c;
          for (auto& [q, c] : table_bracket(n, Z, table_bracket(n, X, Y))) sum[q] += c;
          for (auto& [q, c] : sum)
            if (c != 0) return "Jacobi fails at n=" + std::to_string(n) + " on basis triple (" + std::to_string(x) +
                                "," + std::to_string(y) + "," + std::to_string(z) + ")";
        }
  }
  return std::nullopt;
}

std::optional<std::string> trace_form_invariance()
{
  Gen g(0x51f0);
  for (int t = 0; t < 100; ++t) {
    int n = g.uniform(2, 5);
    auto x = g.traceless(n), y = g.traceless(n), z = g.traceless(n);
    if (trace_form(bracket(x, y), z) != trace_form(x, bracket(y, z))) return "invariance fails at case " + std::to_string(t);
  }
  return std::nullopt;
}

std::optional<std::string> f1111_matches_closures()
{
  for (int n = 4; n <= 5; ++n) {
    auto gens = f1111_generators(n).elements;
    auto summands = s2_summands(n);
    std::vector<Poly2Elem> seeds;
    for (std::size_t k = 1; k < summands.size(); ++k) seeds.push_back(summands[k].hw_vector);
    auto closure = adjoint_closure(seeds, false).elements;
    auto joint = gens;
    joint.insert(joint.end(), closure.begin(), closure.end());
    auto r1 = rank_of(gens), r2 = closure.size(), r3 = rank_of(joint);
    if (r1 != r2 || r1 != r3)
      return "n=" + std::to_string(n) + ": ranks " + std::to_string(r1) + ", " + std::to_string(r2) + ", joint " +
             std::to_string(r3);
  }
  return std::nullopt;
}

std::optional<std::string> zero_weight_orthogonality()
{
  for (int n = 4; n <= 6; ++n) {
    auto z = zero_weight_f1111(n);
    for (int i = 1; i <= n; ++i) {
      Poly2Elem s(n);
      for (int k = 1; k <= n; ++k) s = s + Poly2Elem::monomial(i, k, k, i, n);
      for (auto& v : z.elements)
        if (hermitian_product(v, s) != 0) return "n=" + std::to_string(n) + ", i=" + std::to_string(i);
    }
  }
  return std::nullopt;
}

std::optional<std::string> t_map_injective()
{
  for (int n = 2; n <= 6; ++n) {
    std::vector<Poly2Elem> images;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) images.push_back(t_map(TracelessMatrix::basis(i, j, n)));
    if (rank_of(images) != images.size()) return "t_map has a kernel at n=" + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<std::string> word_agrees(const std::vector<TracelessMatrix>& word)
{
  int n = word.front().n();
  auto u = normal_order(word);
  for (Rep rep : {Rep::kDefining, Rep::kAdjoint}) {
    std::size_t d = rep == Rep::kDefining ? n : reduced::dim(n);
    auto expect = identity(d);
    for (auto& x : word) expect = linalg::multiply(expect, rep == Rep::kDefining ? defining_matrix(x) : adjoint_matrix(x));
    if (represent(u, rep) != expect)
      return "normal form of a length-" + std::to_string(word.size()) + " word at n=" + std::to_string(n) +
             " disagrees with the " + (rep == Rep::kDefining ? "defining" : "adjoint") + " representation";
  }
  return std::nullopt;
}

std::optional<std::string> normal_order_oracle()
{
  const auto& env = envelope(2);
  std::vector<TracelessMatrix> gens;
  for (std::size_t id = 0; id < env.size(); ++id) gens.push_back(env.matrix(id));
  std::vector<std::vector<TracelessMatrix>> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<TracelessMatrix>> next;
    for (auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (auto& x : gens) {
          auto v = w;
          v.push_back(x);
          if (auto f = word_agrees(v)) return f;
          next.push_back(std::move(v));
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  Gen g(0xa55);
  const auto& env3 = envelope(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<TracelessMatrix> w;
    int len = g.uniform(1, 4);
    for (int k = 0; k < len; ++k) w.push_back(env3.matrix(g.uniform(0, static_cast<int>(env3.size()) - 1)));
    if (auto f = word_agrees(w)) return f;
  }
  for (int t = 0; t < 20; ++t) {
    auto a = g.ue(3, 2), b = g.ue(3, 2), c = g.ue(3, 2);
    if (!((a * b) * c == a * (b * c))) return "associativity fails at case " + std::to_string(t);
  }
  return std::nullopt;
}

std::optional<std::string> sym_equivariance()
{
  Gen g(0x5e9);
  for (int t = 0; t < 50; ++t) {
    int n = t % 2 == 0 ? 3 : 4;
    auto x = g.traceless(n, 2);
    auto p = g.poly2(n, 2);
    auto lhs = symmetrize(adjoint_act(x, p));
    auto rhs = commutator(UEElem::from_matrix(x), symmetrize(p));
    if (!(lhs == rhs)) return "sym is not equivariant at case " + std::to_string(t) + " (n=" + std::to_string(n) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> reduce_left_module()
{
  Gen g(0x1ef7);
  for (int t = 0; t < 30; ++t) {
    ParabolicSpec q{static_cast<ParabolicSpec::Kind>(t % 3), 3};
    Rat c = g.rat();
    Weight lambda = q.kind == ParabolicSpec::Kind::kBorel ? g.weight(3)
                    : q.kind == ParabolicSpec::Kind::kQ1  ? Weight{Rat(2 * c), Rat(-c), Rat(-c)}
                                                          : Weight{c, c, Rat(-2 * c)};
    auto u = g.ue(3, 2), v = g.ue(3, 2);
    auto lhs = reduce_mod_ideal(u * v, q, lambda);
    auto rhs = reduce_mod_ideal(u * reduce_mod_ideal(v, q, lambda), q, lambda);
    if (!(lhs == rhs)) return "left-module property fails at case " + std::to_string(t) + " for " + q.name();
  }
  return std::nullopt;
}

std::optional<std::string> casimir_paths_agree()
{
  Gen g(0xca5);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 4;
    auto lam = g.weight(n);
    auto paths = casimir_paths(lam);
    if (paths.norm_path != paths.action_path) return "Casimir paths differ at case " + std::to_string(t);
  }
  return std::nullopt;
}

std::optional<std::string> gvm_involution()
{
  for (int n = 3; n <= 4; ++n)
    for (const Rat& a : {Rat(0), Rat(1), Rat(-2), frac(5, 2), frac(-7, 3)}) {
      bool x = check_generalized_verma(n, a, {ParabolicSpec::Kind::kQ1, n});
      bool y = check_generalized_verma(n, -a, {ParabolicSpec::Kind::kQn1, n});
      if (x != y) return "involution swap changes the verdict at n=" + std::to_string(n) + ", a=" + to_string(a);
    }
  return std::nullopt;
}

std::optional<std::string> classify_properties()
{
  std::vector<Rat> grid{-3, frac(-3, 2), -1, frac(-1, 2), 0, frac(1, 3), frac(1, 2), 1, 2, frac(7, 2)};
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      if (p + q < 3) continue;
      Rat d = frac(p - q, 2);
      auto as = grid;
      as.push_back(d);
      as.push_back(-d);
      std::string where = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      for (auto& a : as) {
        int hw_merged = 0, lw_merged = 0;
        for (auto& c : classify_su(p, q, a)) {
          if (c.unexpected_collision) return where + ": unexpected collision at a=" + to_string(a);
          if (c.labels.size() > 1) (c.family == Family::kHighestWeight ? hw_merged : lw_merged)++;
          Weight hw = c.family == Family::kHighestWeight ? *c.weight : -longest_compact_weyl(*c.weight, p);
          if (!is_compact_dominant(hw, p)) return where + ": non-dominant certificate at a=" + to_string(a);
        }
        if (hw_merged != (a == -d ? 1 : 0) || lw_merged != (a == d ? 1 : 0))
          return where + ": dedupe mismatch at a=" + to_string(a);
      }
      Gen g(static_cast<std::uint64_t>(p * 10 + q));
      for (int t = 0; t < 10; ++t) {
        auto w = g.weight(p + q);
        if (!(longest_compact_weyl(longest_compact_weyl(w, p), p) == w)) return where + ": w_l is not an involution";
      }
      for (int i = 1; i <= p + q; ++i)
        for (int j = i + 1; j <= p + q; ++j) {
          bool compact = (j <= p) || (i > p);
          if (!compact) continue;
          auto image = longest_compact_weyl(Weight::root(i, j, p + q), p);
          bool negative = false;
          for (int k = 1; k <= p + q; ++k) {
            if (image(k) == 0) continue;
            negative = image(k) < 0;
            break;
          }
          if (!negative) return where + ": w_l keeps a compact positive root positive";
        }
    }
  return std::nullopt;
}

std::optional<std::string> sl2_relations()
{
  for (int m = 0; m <= 20; ++m) {
    auto h = pi_m(SL2Gen::kH, m), e = pi_m(SL2Gen::kE, m), f = pi_m(SL2Gen::kF, m);
    auto br = [](const DenseMatrix& x, const DenseMatrix& y) {
      return linalg::add(linalg::multiply(x, y), linalg::scaled(linalg::multiply(y, x), Rat(-1)));
    };
    if (br(h, e) != linalg::scaled(e, Rat(2)) || br(h, f) != linalg::scaled(f, Rat(-2)) || br(e, f) != h)
      return "sl2 relations fail at m=" + std::to_string(m);
  }
  for (int m = 0; m <= 8; ++m)
    for (const Rat& a : {Rat(0), Rat(1), Rat(-2), frac(1, 2), frac(-5, 3)}) {
      auto op = operator_4X(m, a);
      if (op != operator_4X_factored(m, a)) return "operator_4X differs from its factored form at m=" + std::to_string(m);
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
          if (std::abs(i - j) != 1 && op[i][j] != 0) return "operator_4X is not tridiagonal at m=" + std::to_string(m);
    }
  return std::nullopt;
}

std::optional<std::string> serial_parallel_agree()
{
  for (int n = 3; n <= 5; ++n) {
    auto s = decompose_s2(n, false);
    auto p = decompose_s2(n, true);
    if (s.closure_dims != p.closure_dims || s.combined_rank != p.combined_rank)
      return "closure dims differ between serial and parallel at n=" + std::to_string(n);
  }
  for (int a = -2; a <= 2; ++a) {
    auto s = kernel_report_serial(a, 25);
    auto p = kernel_report(a, 25);
    if (s.dims != p.dims || s.entries.size() != p.entries.size()) return "kernel sweep differs at a=" + std::to_string(a);
    for (std::size_t i = 0; i < s.entries.size(); ++i)
      if (s.entries[i].pair.q1 != p.entries[i].pair.q1 || s.entries[i].pair.q2 != p.entries[i].pair.q2)
        return "kernel pairs differ at a=" + std::to_string(a);
  }
  return std::nullopt;
}

} // namespace

DenseMatrix represent(const UEElem& u, Rep rep)
{
  int n = u.n();
  const auto& env = envelope(n);
  std::size_t d = rep == Rep::kDefining ? n : reduced::dim(n);
  std::vector<DenseMatrix> gens;
  for (std::size_t id = 0; id < env.size(); ++id)
    gens.push_back(rep == Rep::kDefining ? defining_matrix(env.matrix(id)) : adjoint_matrix(env.matrix(id)));
  auto out = linalg::zeros(d, d);
  for (const auto& [mono, c] : u.terms()) {
    auto m = identity(d);
    for (auto id : mono) m = linalg::multiply(m, gens[id]);
    out = linalg::add(out, linalg::scaled(m, c));
  }
  return out;
}

std::vector<CheckResult> property_suite(bool parallel)
{
  std::vector<std::pair<std::string, Check>> checks{
      {"liealg: structure constants match matrix commutators (n<=5)", bracket_vs_commutator},
      {"liealg: Jacobi identity on basis triples (n<=4)", jacobi},
      {"liealg: trace form invariance (100 random triples)", trace_form_invariance},
      {"symdecomp: generator span equals the sum of closures (n=4,5)", f1111_matches_closures},
      {"symdecomp: zero weight space orthogonal to sum_k T_ik T_ki (n=4..6)", zero_weight_orthogonality},
      {"symdecomp: t_map injective (n<=6)", t_map_injective},
      {"envelope: normal order agrees with representations and is associative", normal_order_oracle},
      {"envelope: sym is adjoint equivariant (50 random cases)", sym_equivariance},
      {"envelope: reduction is a left-module map (30 random cases)", reduce_left_module},
      {"verma: Casimir paths agree (60 random weights)", casimir_paths_agree},
      {"verma: generalized Verma verdict invariant under the involution swap", gvm_involution},
      {"classify: dedupe, dominance and w_l properties", classify_properties},
      {"sl3kernel: sl2 relations and factored operator", sl2_relations},
      {"parallel: serial and parallel sweeps agree", serial_parallel_agree},
  };
  std::vector<CheckResult> out(checks.size());
  int count = static_cast<int>(checks.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int i = 0; i < count; ++i) out[i] = run_check(checks[i].first, checks[i].second);
  } else {
    for (int i = 0; i < count; ++i) out[i] = run_check(checks[i].first, checks[i].second);
  }
  return out;
}

} // namespace minrep
