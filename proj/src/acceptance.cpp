#include "minrep/verify.hpp"

#include "minrep/classify.hpp"
#include "minrep/fault.hpp"
#include "minrep/gen.hpp"
#include "minrep/parallel.hpp"
#include "minrep/sl3kernel.hpp"
#include "minrep/symdecomp.hpp"
#include "minrep/verma.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace minrep {

namespace {

const std::vector<Rat>& a_grid()
{
  static const std::vector<Rat> grid{Rat(0), Rat(1), Rat(-2), frac(5, 2), frac(-7, 3)};
  return grid;
}

std::string fmt(const Weight& w)
{
  std::string s = "(";
  for (int i = 1; i <= w.n(); ++i) s += (i > 1 ? ", " : "") + to_string(w(i));
  return s + ")";
}

/// Collects failure notes from (possibly parallel) grid cases.
class Notes {
public:
  void add(std::string s)
  {
    std::lock_guard<std::mutex> lock(mu_);
    notes_.push_back(std::move(s));
  }
  [[nodiscard]] bool empty() const { return notes_.empty(); }
  [[nodiscard]] std::string join(std::size_t limit = 6)
  {
    std::sort(notes_.begin(), notes_.end());
    std::string out;
    for (std::size_t i = 0; i < notes_.size() && i < limit; ++i) out += (i ? "; " : "") + notes_[i];
    if (notes_.size() > limit) out += "; ... (" + std::to_string(notes_.size()) + " in total)";
    return out;
  }

private:
  std::mutex mu_;
  std::vector<std::string> notes_;
};

void for_grid(int count, bool parallel, const std::function<void(int)>& body, Notes& notes)
{
  auto guarded = [&](int i) {
    try {
      body(i);
    } catch (const std::exception& e) {
      notes.add(std::string("exception: ") + e.what());
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int i = 0; i < count; ++i) guarded(i);
  } else {
    for (int i = 0; i < count; ++i) guarded(i);
  }
}

CriterionResult finish(CriterionResult r, Notes& notes, const std::string& ok_detail)
{
  r.passed = notes.empty();
  r.detail = r.passed ? ok_detail : notes.join();
  return r;
}

CriterionResult c1_s2(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  int top = std::min(6, o.max_n);
  std::string summary;
  for (int n = 2; n <= top; ++n) {
    auto d = decompose_s2(n, o.parallel);
    std::size_t expected_count = n == 2 ? 2 : n == 3 ? 3 : 4;
    std::size_t sum = 0;
    for (std::size_t k = 0; k < d.closure_dims.size(); ++k) {
      sum += d.closure_dims[k];
      if (Rat(static_cast<long>(d.closure_dims[k])) != d.weyl_dims[k])
        notes.add("n=" + std::to_string(n) + " " + d.labels[k] + ": closure dim " + std::to_string(d.closure_dims[k]) +
                  " vs Weyl " + to_string(d.weyl_dims[k]));
    }
    std::size_t total = static_cast<std::size_t>((n * n - 1) * n * n / 2);
    if (d.closure_dims.size() != expected_count) notes.add("n=" + std::to_string(n) + ": wrong number of summands");
    if (sum != total || d.combined_rank != total)
      notes.add("n=" + std::to_string(n) + ": dims sum to " + std::to_string(sum) + ", combined rank " +
                std::to_string(d.combined_rank) + ", expected " + std::to_string(total));
    summary += (n > 2 ? " " : "") + std::string("n=") + std::to_string(n) + ":" + std::to_string(total);
  }
  return finish(r, notes, "closure dims match Weyl dims; totals " + summary);
}

CriterionResult c2_zero_weight(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  int top = std::min(7, o.max_n + 1);
  for (int n = 4; n <= top; ++n) {
    auto z = zero_weight_f1111(n);
    if (static_cast<int>(z.dim()) != n * (n - 3) / 2)
      notes.add("n=" + std::to_string(n) + ": dim " + std::to_string(z.dim()) + " vs " + std::to_string(n * (n - 3) / 2));
    for (int i = 1; i <= n; ++i) {
      Poly2Elem s(n);
      for (int k = 1; k <= n; ++k) s = s + Poly2Elem::monomial(i, k, k, i, n);
      for (auto& v : z.elements)
        if (hermitian_product(v, s) != 0) notes.add("n=" + std::to_string(n) + ": not orthogonal to row " + std::to_string(i));
    }
  }
  return finish(r, notes, "dims n(n-3)/2 for n=4.." + std::to_string(top) + ", orthogonality exact");
}

CriterionResult c3_annihilator(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  int top = std::min(5, o.max_n);
  std::vector<std::pair<int, Rat>> cases;
  for (int n = 3; n <= top; ++n)
    for (auto& a : a_grid()) cases.emplace_back(n, a);
  for_grid(static_cast<int>(cases.size()), o.parallel, [&](int idx) {
    auto [n, a] = cases[idx];
    std::string where = "n=" + std::to_string(n) + " a=" + to_string(a);
    std::set<Weight> expected;
    for (int i = 1; i <= n; ++i) expected.insert(lambda_ia(n, i, a));
    auto sol = solve_annihilator_weights(n, a);
    if (sol.all_weights) {
      notes.add(where + ": solver returned all weights");
      return;
    }
    AnnihilatorProbe probe(fa_space(n, a));
    std::set<Weight> got;
    for (auto& lw : sol.weights) {
      got.insert(lw.lambda);
      if (!expected.count(lw.lambda))
        notes.add(where + ": extra solution " + fmt(lw.lambda) + (lw.labels.empty() ? " (unlabeled" : " (labeled") +
                  (probe.annihilates(lw.lambda) ? ", annihilated by sym(F^a))" : ", not annihilated)"));
    }
    for (auto& w : expected) {
      if (!got.count(w)) notes.add(where + ": missing " + fmt(w));
      if (!probe.annihilates(w)) notes.add(where + ": " + fmt(w) + " not annihilated");
    }
    Gen g(static_cast<std::uint64_t>(1000 * n + idx));
    int tested = 0;
    while (tested < 20) {
      Weight w = lambda_ia(n, g.uniform(1, n), a) + g.nonzero_weight(n);
      if (expected.count(w)) continue;
      ++tested;
      if (probe.annihilates(w)) notes.add(where + ": perturbed weight " + fmt(w) + " is annihilated");
    }
  }, notes);
  return finish(r, notes, "solver returns exactly {lambda(i,a)}; 20 perturbations fail per case");
}

CriterionResult c4_casimir(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  int top = std::min(5, o.max_n);
  auto probe = [&](int n, const Rat& a) {
    Rat want = casimir_expected(n, a);
    for (int i = 1; i <= n; ++i) {
      auto lam = lambda_ia(n, i, a);
      auto p = casimir_paths(lam);
      if (p.norm_path != want || p.action_path != want)
        notes.add("n=" + std::to_string(n) + " a=" + to_string(a) + " i=" + std::to_string(i) + ": paths " +
                  to_string(p.norm_path) + ", " + to_string(p.action_path) + " vs " + to_string(want));
    }
  };
  for (int n = 3; n <= top; ++n)
    for (auto& a : a_grid()) probe(n, a);
  for (auto& a : a_grid()) {
    probe(2, a);
    if (casimir_expected(2, a) != (a * a - 1) / 2) notes.add("n=2 formula mismatch at a=" + to_string(a));
  }
  return finish(r, notes, "both paths equal (n-1)(2a+n)(2a-n)/(4n); (a^2-1)/2 at n=2");
}

CriterionResult c5_mirabolic(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  int top = std::min(5, o.max_n);
  std::vector<std::pair<int, Rat>> cases;
  for (int n = 3; n <= top; ++n)
    for (auto& a : a_grid()) cases.emplace_back(n, a);
  for_grid(static_cast<int>(cases.size()), o.parallel, [&](int idx) {
    auto [n, a] = cases[idx];
    std::string where = "n=" + std::to_string(n) + " a=" + to_string(a);
    for (auto kind : {ParabolicSpec::Kind::kQ1, ParabolicSpec::Kind::kQn1}) {
      ParabolicSpec q{kind, n};
      auto res = check_generalized_verma_detail(n, a, q);
      if (!res.passed) notes.add(where + " " + q.name() + ": " + res.reason);
    }
    if (n != 4) return;
    ParabolicSpec q1{ParabolicSpec::Kind::kQ1, 4};
    auto wrong = lambda_ia(4, 2, a);
    bool coincides = wrong == lambda_ia(4, 1, a);
    auto res = check_generalized_verma_at(4, a, q1, wrong);
    if (!coincides && res.passed) notes.add(where + ": wrong weight lambda(2,a) passes");
    if (coincides && !res.passed) notes.add(where + ": lambda(2,a) = lambda(1,a) here but the check fails");
    auto shifted = check_generalized_verma_at(4, a, q1, lambda_ia(4, 1, a + 1));
    if (shifted.passed) notes.add(where + ": wrong weight lambda(1,a+1) passes");
  }, notes);
  return finish(r, notes, "both parabolics pass; wrong weights lambda(2,a) (a != 1) and lambda(1,a+1) fail at n=4");
}

CriterionResult c6_table1(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  std::vector<Rat> grid{-3, frac(-3, 2), 0, frac(1, 3), 2, frac(7, 2)};
  auto row = [&](const RealFormSpec& f, const Rat& a, bool nonreal) {
    int expected;
    if (f.kind == RealFormSpec::Kind::kSU) {
      if (f.p == 1 || f.q == 1) expected = 2;
      else expected = (!nonreal && is_integer(a - frac(f.p + f.q, 2))) ? 2 : 0;
    } else {
      expected = (f.n == 3 && !nonreal && is_integer(a)) ? 3 : 2;
    }
    int count = table1_count(f, a, nonreal);
    int listed = static_cast<int>(classify(f, a, nonreal).size());
    if (count != expected || listed != expected)
      notes.add(f.name() + (nonreal ? " nonreal" : " a=" + to_string(a)) + ": table " + std::to_string(count) +
                ", classify " + std::to_string(listed) + ", row " + std::to_string(expected));
  };
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      if (p + q < 3) continue;
      for (auto& a : grid) row(RealFormSpec::su(p, q), a, false);
      row(RealFormSpec::su(p, q), Rat(0), true);
    }
  for (int n = 3; n <= std::min(6, o.max_n); ++n) {
    for (auto& a : grid) row(RealFormSpec::slR(n), a, false);
    row(RealFormSpec::slR(n), Rat(0), true);
  }
  return finish(r, notes, "every row reproduced; counts equal classification lengths");
}

CriterionResult c7_ktypes(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  auto z_oracle = [](int n, const Rat& a, bool nonreal) {
    std::vector<int> z;
    if (nonreal) return z;
    Rat top = abs_rat(a) - Rat(n) / 2;
    for (int k = 0; Rat(k) <= top; ++k) {
      Rat rest = top - k;
      if (is_integer(rest) && mpz_class(rest.get_num() % 2) == 0) z.push_back(k);
    }
    return z;
  };
  std::vector<Rat> grid{-3, frac(-3, 2), 0, frac(1, 3), 2, frac(7, 2), 5, 6, -6, frac(15, 2)};
  for (int n = 3; n <= std::min(6, o.max_n); ++n)
    for (auto& a : grid)
      for (bool nonreal : {false, true}) {
        std::string where = "n=" + std::to_string(n) + (nonreal ? " nonreal" : " a=" + to_string(a));
        auto z = z_oracle(n, a, nonreal);
        if (z_set_full(n, a, nonreal) != z || z_set(n, a, 40, nonreal) != z) notes.add(where + ": Z set mismatch");
        auto certs = classify_slnR(n, a, nonreal);
        for (auto& c : certs) {
          if (c.family == Family::kGenuine) continue;
          int parity = c.family == Family::kPSTriv ? 0 : 1;
          std::vector<int> want;
          for (int k = parity; want.size() < 8; k += 2)
            if (std::find(z.begin(), z.end(), k) == z.end()) want.push_back(k);
          if (ktypes_slnR(c, 8) != want) notes.add(where + " " + family_name(c.family) + ": K-types differ");
          for (int k : want)
            if (!lattice_check(c.form, harmonic_weight(n, k))) notes.add(where + ": harmonic weight off the lattice");
        }
      }
  if (z_set_full(4, 6) != std::vector<int>{0, 2, 4}) notes.add("Z(4,6) is not {0,2,4}");
  for (int a = -2; a <= 2; ++a) {
    auto certs = classify_slnR(3, a);
    auto g = std::find_if(certs.begin(), certs.end(), [](auto& c) { return c.family == Family::kGenuine; });
    if (g == certs.end()) {
      notes.add("no genuine certificate at a=" + std::to_string(a));
      continue;
    }
    auto ms = ktypes_slnR(*g, 6);
    for (int k = 0; k < 6; ++k) {
      if (ms[k] != 2 * std::abs(a) + 1 + 4 * k) notes.add("genuine K-type mismatch at a=" + std::to_string(a));
      if (!lattice_check(RealFormSpec::slR(3), su2_weight(ms[k]))) notes.add("genuine K-type off the lattice");
    }
  }
  return finish(r, notes, "2N\\Z and (2N+1)\\Z reproduced; Z(4,6) = {0,2,4}; genuine 2|a|+1+4N");
}

CriterionResult c8_kernel(const VerifyOptions& o)
{
  CriterionResult r;
  Notes notes;
  std::vector<Rat> as;
  for (int a = -3; a <= 3; ++a) as.push_back(a);
  for_grid(static_cast<int>(as.size()), o.parallel, [&](int idx) {
    Rat a = as[idx];
    int abs_a = std::abs(static_cast<int>(a.get_num().get_si()));
    auto rep = kernel_report_serial(a, 41);
    for (auto [m, dim] : rep.dims) {
      bool admissible = m >= 2 * abs_a + 1 && (m - 2 * abs_a - 1) % 4 == 0;
      std::string where = "a=" + to_string(a) + " m=" + std::to_string(m);
      if (dim != (admissible ? 1 : 0)) notes.add(where + ": kernel dim " + std::to_string(dim));
      auto dense = kernel_pairs_dense(m, a);
      if (static_cast<int>(dense.size()) != dim) notes.add(where + ": dense route dim " + std::to_string(dense.size()));
      auto ker = recurrence_solve(m, a);
      if (ker.size() > 2) notes.add(where + ": operator kernel dim exceeds 2");
      auto f = truncated_2f1(m, a);
      if (admissible != f.has_value()) notes.add(where + ": hypergeometric truncation disagrees with admissibility");
      if (admissible && f) {
        bool even_hit = false, rev_hit = false;
        auto rev = f->m_reversal();
        for (auto& p : ker) {
          even_hit = even_hit || p.proportional_to(*f);
          rev_hit = rev_hit || p.proportional_to(rev);
        }
        if (!even_hit || !rev_hit) notes.add(where + ": kernel does not match the 2F1 polynomials");
      }
    }
    for (auto& e : rep.entries) {
      if (!is_m_invariant(e.pair)) notes.add("a=" + to_string(a) + " m=" + std::to_string(e.m) + ": pair not M-invariant");
      auto dense = kernel_pairs_dense(e.m, a);
      if (dense.empty() || !dense[0].proportional_to(e.pair))
        notes.add("a=" + to_string(a) + " m=" + std::to_string(e.m) + ": routes disagree");
    }
  }, notes);
  for (auto a : {frac(1, 2), frac(3, 2)})
    if (!kernel_report(a, 41).empty()) notes.add("a=" + to_string(a) + ": kernel not empty");
  return finish(r, notes, "kernel 1-dim exactly at m in 2|a|+1+4N (m <= 41), 2F1 match, empty for a = 1/2, 3/2");
}

CriterionResult c9_lambda2a(const VerifyOptions&)
{
  CriterionResult r;
  Notes notes;
  Gen g(0x92a);
  for (const Rat& a : {Rat(0), Rat(1), Rat(-2)}) {
    Weight target = lambda_ia(3, 2, -a);
    std::vector<Weight> lambdas;
    for (int i = -3; i <= 3; ++i)
      for (int j = -3; j <= 3; ++j) {
        Rat l1 = target(1) + frac(i, 2), l3 = target(3) + frac(j, 2);
        lambdas.push_back(Weight{l1, Rat(-l1 - l3), l3});
      }
    for (int t = 0; t < 20; ++t) lambdas.push_back(g.weight(3));
    for (auto& lam : lambdas) {
      auto d = lambda2a_detail(a, lam);
      std::string where = "a=" + to_string(a) + " lambda=" + fmt(lam);
      if (d.holds != (lam == target)) notes.add(where + ": verdict " + (d.holds ? "true" : "false"));
      if (!d.shape_ok) notes.add(where + ": reduction has extra monomials");
      if (d.coeff_32 != lam(1) - a / 3 + frac(1, 2)) notes.add(where + ": T32 coefficient " + to_string(d.coeff_32));
      if (d.coeff_21 != -lam(3) + a / 3 + frac(1, 2)) notes.add(where + ": T21 coefficient " + to_string(d.coeff_21));
    }
  }
  return finish(r, notes, "true exactly at lambda(2,-a); coefficients equal the displayed linear forms");
}

std::set<std::string> failing_names(const std::vector<CheckResult>& props, const std::vector<CriterionResult>& crits)
{
  std::set<std::string> out;
  for (auto& p : props)
    if (!p.passed) out.insert(p.name);
  for (auto& c : crits)
    if (!c.passed) out.insert("criterion " + std::to_string(c.id));
  return out;
}

CriterionResult c10_properties(const VerifyOptions& o, const std::vector<CriterionResult>* baseline)
{
  CriterionResult r;
  Notes notes;
  auto props = property_suite(o.parallel);
  r.checks = props;
  for (auto& p : props)
    if (!p.passed) notes.add(p.name + ": " + p.detail);
  std::string mutation = "mutation not run";
  if (o.include_mutation) {
    std::vector<CriterionResult> base_storage;
    if (!baseline) {
      VerifyOptions inner = o;
      inner.include_mutation = false;
      for (int id = 1; id <= 9; ++id) base_storage.push_back(run_criterion(id, inner));
      baseline = &base_storage;
    }
    auto before = failing_names(props, *baseline);
    std::vector<CheckResult> fprops;
    std::vector<CriterionResult> fcrits;
    {
      ScopedFault fault(Fault::kFlipStructureConstant);
      VerifyOptions inner = o;
      inner.include_mutation = false;
      fprops = property_suite(o.parallel);
      for (int id = 1; id <= 9; ++id) fcrits.push_back(run_criterion(id, inner));
    }
    auto after = failing_names(fprops, fcrits);
    std::vector<std::string> fresh;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
    bool superset = std::includes(after.begin(), after.end(), before.begin(), before.end());
    bool verify_all_exit2 = !after.empty();
    if (!verify_all_exit2 || fresh.empty() || !superset)
      notes.add("injected sign flip was not detected beyond the baseline failures");
    mutation = "sign flip detected by " + std::to_string(fresh.size()) + " additional checks (verify-all exits 2)";
    r.checks.push_back({"mutation: injected structure-constant sign flip is detected", !fresh.empty() && superset,
                        mutation});
  }
  return finish(r, notes, std::to_string(props.size()) + " property checks pass; " + mutation);
}

} // namespace

std::string criterion_title(int id)
{
  static const char* titles[] = {"",
                                 "S2 decomposition",
                                 "zero weight space",
                                 "annihilator classification",
                                 "Casimir",
                                 "mirabolic",
                                 "minimal module counts",
                                 "K-types",
                                 "sl(3,R) kernel",
                                 "weight forced to lambda(2,-a)",
                                 "property suites"};
  if (id < 1 || id > 10) throw PreconditionError("criterion id must be 1..10");
  return titles[id];
}

CriterionResult run_criterion(int id, const VerifyOptions& opts)
{
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
    case 1: r = c1_s2(opts); break;
    case 2: r = c2_zero_weight(opts); break;
    case 3: r = c3_annihilator(opts); break;
    case 4: r = c4_casimir(opts); break;
    case 5: r = c5_mirabolic(opts); break;
    case 6: r = c6_table1(opts); break;
    case 7: r = c7_ktypes(opts); break;
    case 8: r = c8_kernel(opts); break;
    case 9: r = c9_lambda2a(opts); break;
    case 10: r = c10_properties(opts, nullptr); break;
    default: throw PreconditionError("criterion id must be 1..10");
    }
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.title = criterion_title(id);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts)
{
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, opts));
  auto start = std::chrono::steady_clock::now();
  CriterionResult r10;
  try {
    r10 = c10_properties(opts, &out);
  } catch (const std::exception& e) {
    r10.detail = std::string("exception: ") + e.what();
  }
  r10.id = 10;
  r10.title = criterion_title(10);
  r10.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.push_back(std::move(r10));
  return out;
}

} // namespace minrep
