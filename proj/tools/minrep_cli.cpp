#include "minrep/classify.hpp"
#include "minrep/fault.hpp"
#include "minrep/sl3kernel.hpp"
#include "minrep/symdecomp.hpp"
#include "minrep/verify.hpp"
#include "minrep/verma.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::ordered_json;
using namespace minrep;

namespace {

constexpr const char* kSchemaVersion = "1.0";

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ordered_json rat_json(const Rat& r) { return to_string(r); }

ordered_json weight_json(const Weight& w)
{
  ordered_json a = ordered_json::array();
  for (int i = 1; i <= w.n(); ++i) a.push_back(to_string(w(i)));
  return a;
}

ordered_json poly_json(const PolyT& p)
{
  ordered_json a = ordered_json::array();
  for (auto& c : p.coeffs) a.push_back(to_string(c));
  return a;
}

std::string weight_text(const Weight& w) { return weight_json(w).dump(); }

Weight parse_weight(const std::string& text, int n)
{
  std::vector<Rat> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_rat(part));
  if (static_cast<int>(v.size()) != n) throw UsageError("--lambda needs " + std::to_string(n) + " entries");
  return Weight(std::move(v));
}

struct Report {
  Report() = default;
  explicit Report(std::string c) : command(std::move(c)) {}

  std::string command;
  ordered_json parameters = ordered_json::object();
  std::string status = "info";
  ordered_json payload = ordered_json::object();
  std::vector<std::string> text;
};

struct Options {
  int n = 3;
  int p = 0;
  int q = 0;
  std::string a = "0";
  std::string form;
  std::string lambda;
  std::string parabolic = "both";
  int i = 0;
  int m_max = 41;
  int count = 5;
  int max_n = 6;
  bool nonreal = false;
  bool no_mutation = false;
  bool timings = false;
};

Rat a_of(const Options& o) { return parse_rat(o.a); }

void check_n(int n, int lo, int hi)
{
  if (n < lo || n > hi) throw UsageError("--n must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

Report cmd_decompose_s2(const Options& o)
{
  check_n(o.n, 2, 8);
  Report r{"decompose-s2"};
  r.parameters["n"] = o.n;
  auto d = decompose_s2(o.n);
  ordered_json summands = ordered_json::array();
  for (std::size_t k = 0; k < d.labels.size(); ++k) {
    summands.push_back({{"label", d.labels[k]}, {"closure_dim", d.closure_dims[k]}, {"weyl_dim", rat_json(d.weyl_dims[k])}});
    r.text.push_back(d.labels[k] + ": closure " + std::to_string(d.closure_dims[k]) + ", Weyl " + to_string(d.weyl_dims[k]));
  }
  r.payload["summands"] = summands;
  ordered_json dims = ordered_json::array();
  for (auto x : d.closure_dims) dims.push_back(x);
  r.payload["dims"] = dims;
  r.payload["combined_rank"] = d.combined_rank;
  r.payload["expected_total"] = d.expected_total;
  r.payload["hw_vectors_primitive"] = d.hw_vectors_primitive;
  r.status = d.ok() ? "pass" : "fail";
  r.text.push_back("total " + std::to_string(d.combined_rank) + " of " + std::to_string(d.expected_total));
  return r;
}

Report cmd_annihilator(const Options& o)
{
  check_n(o.n, 2, 8);
  Rat a = a_of(o);
  Report r{"annihilator"};
  r.parameters = {{"n", o.n}, {"a", rat_json(a)}};
  auto sol = solve_annihilator_weights(o.n, a);
  r.payload["all_weights"] = sol.all_weights;
  ordered_json ws = ordered_json::array();
  if (sol.all_weights) r.text.push_back("every weight (n = 2)");
  for (auto& lw : sol.weights) {
    ordered_json labels = ordered_json::array();
    ordered_json finite = ordered_json::array();
    std::string line = weight_text(lw.lambda);
    for (int i : lw.labels) {
      labels.push_back(i);
      HWLabel h{o.n, i, a};
      bool fd = is_finite_dimensional(h);
      finite.push_back({{"i", i}, {"finite_dimensional", fd}, {"by_condition", finite_dimensional_by_condition(h)}});
      line += " i=" + std::to_string(i) + (fd ? " (finite)" : "");
    }
    if (lw.labels.empty()) line += " (unlabeled)";
    ws.push_back({{"lambda", weight_json(lw.lambda)}, {"labels", labels}, {"finite", finite},
                  {"dominant_integral", is_dominant_integral(lw.lambda)}});
    r.text.push_back(line);
  }
  r.payload["weights"] = ws;
  return r;
}

Report cmd_casimir(const Options& o)
{
  check_n(o.n, 2, 8);
  Rat a = a_of(o);
  Report r{"casimir"};
  r.parameters = {{"n", o.n}, {"a", rat_json(a)}};
  Rat want = casimir_expected(o.n, a);
  r.payload["expected"] = rat_json(want);
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (int i = 1; i <= o.n; ++i) {
    if (o.i && i != o.i) continue;
    auto lam = lambda_ia(o.n, i, a);
    auto paths = casimir_paths(lam);
    bool agree = paths.norm_path == want && paths.action_path == want;
    ok = ok && agree;
    rows.push_back({{"i", i}, {"lambda", weight_json(lam)}, {"norm_path", rat_json(paths.norm_path)},
                    {"action_path", rat_json(paths.action_path)}, {"agrees", agree}});
    r.text.push_back("i=" + std::to_string(i) + " " + weight_text(lam) + ": " + to_string(paths.norm_path) + " / " +
                     to_string(paths.action_path));
  }
  r.text.push_back("expected " + to_string(want));
  r.payload["weights"] = rows;
  r.status = ok ? "pass" : "fail";
  return r;
}

Report cmd_gvm(const Options& o)
{
  check_n(o.n, 3, 8);
  Rat a = a_of(o);
  Report r{"gvm-check"};
  r.parameters = {{"n", o.n}, {"a", rat_json(a)}, {"parabolic", o.parabolic}};
  std::vector<ParabolicSpec::Kind> kinds;
  if (o.parabolic == "q1" || o.parabolic == "both") kinds.push_back(ParabolicSpec::Kind::kQ1);
  if (o.parabolic == "qn1" || o.parabolic == "both") kinds.push_back(ParabolicSpec::Kind::kQn1);
  if (kinds.empty()) throw UsageError("--parabolic must be q1, qn1 or both");
  if (!o.lambda.empty()) {
    if (kinds.size() != 1) throw UsageError("--lambda needs a single --parabolic");
    r.parameters["lambda"] = o.lambda;
  }
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (auto kind : kinds) {
    ParabolicSpec q{kind, o.n};
    auto res = o.lambda.empty() ? check_generalized_verma_detail(o.n, a, q)
                                : check_generalized_verma_at(o.n, a, q, parse_weight(o.lambda, o.n));
    ok = ok && res.passed;
    ordered_json residuals = ordered_json::array();
    for (auto& u : res.residuals) residuals.push_back(u.to_string());
    rows.push_back({{"parabolic", q.name()}, {"lambda", weight_json(res.lambda)}, {"passed", res.passed},
                    {"reason", res.reason}, {"residuals", residuals}, {"casimir", rat_json(res.casimir)}});
    r.text.push_back(q.name() + " " + weight_text(res.lambda) + ": " + (res.passed ? "pass" : "fail") +
                     (res.reason.empty() ? "" : " (" + res.reason + ")"));
  }
  r.payload["checks"] = rows;
  r.status = ok ? "pass" : "fail";
  return r;
}

RealFormSpec form_of(const Options& o)
{
  if (!o.form.empty()) return RealFormSpec::parse(o.form);
  if (o.p > 0 || o.q > 0) return RealFormSpec::su(o.p, o.q);
  return RealFormSpec::slR(o.n);
}

ordered_json cert_json(const MinimalCert& c)
{
  ordered_json j;
  j["family"] = family_name(c.family);
  ordered_json labels = ordered_json::array();
  for (int i : c.labels) labels.push_back(i);
  j["labels"] = labels;
  j["weight"] = c.weight ? weight_json(*c.weight) : ordered_json(nullptr);
  j["conditions"] = c.conditions;
  j["unexpected_collision"] = c.unexpected_collision;
  return j;
}

std::string cert_text(const MinimalCert& c)
{
  std::string s = family_name(c.family);
  if (!c.labels.empty()) {
    s += " i=";
    for (std::size_t k = 0; k < c.labels.size(); ++k) s += (k ? "," : "") + std::to_string(c.labels[k]);
  }
  if (c.weight) s += " " + weight_text(*c.weight);
  for (auto& cond : c.conditions) s += " [" + cond + "]";
  return s;
}

void form_params(Report& r, const RealFormSpec& f, const Rat& a, bool nonreal)
{
  r.parameters = {{"form", f.name()}, {"a", nonreal ? ordered_json("nonreal") : rat_json(a)}};
}

Report cmd_classify(const Options& o, const std::string& name)
{
  auto f = form_of(o);
  Rat a = a_of(o);
  Report r{name};
  form_params(r, f, a, o.nonreal);
  auto certs = classify(f, a, o.nonreal);
  ordered_json cs = ordered_json::array();
  for (auto& c : certs) {
    cs.push_back(cert_json(c));
    r.text.push_back(cert_text(c));
  }
  if (name == "table1") {
    int count = table1_count(f, a, o.nonreal);
    r.payload["count"] = count;
    r.text.insert(r.text.begin(), "count " + std::to_string(count));
    r.status = count == static_cast<int>(certs.size()) ? "pass" : "fail";
  }
  r.payload["certificates"] = cs;
  return r;
}

Report cmd_ktypes(const Options& o)
{
  auto f = form_of(o);
  Rat a = a_of(o);
  Report r{"ktypes"};
  form_params(r, f, a, o.nonreal);
  r.parameters["count"] = o.count;
  if (o.count < 1) throw UsageError("--count must be at least 1");
  ordered_json rows = ordered_json::array();
  for (auto& c : classify(f, a, o.nonreal)) {
    ordered_json j = cert_json(c);
    std::string line = cert_text(c) + ":";
    if (f.kind == RealFormSpec::Kind::kSU) {
      if (!c.weight) {
        j["ktypes"] = nullptr;
        line += " (no explicit weights for nonreal a)";
      } else {
        auto pencil = ktypes_su_pencil(c, o.count);
        ordered_json ws = ordered_json::array();
        for (auto& w : pencil.weights()) ws.push_back(weight_json(w));
        j["pencil"] = {{"mu0", weight_json(pencil.mu0)}, {"step", weight_json(pencil.step)}, {"count", pencil.count}};
        j["ktypes"] = ws;
        line += " mu0 " + weight_text(pencil.mu0) + " step " + weight_text(pencil.step);
      }
    } else {
      auto ks = ktypes_slnR(c, o.count);
      j[c.family == Family::kGenuine ? "symmetric_powers" : "harmonic_degrees"] = ks;
      for (int k : ks) line += " " + std::to_string(k);
      j["z_set"] = z_set_full(f.n, a, o.nonreal);
    }
    rows.push_back(j);
    r.text.push_back(line);
  }
  r.payload["certificates"] = rows;
  return r;
}

Report cmd_sl3_kernel(const Options& o)
{
  if (o.m_max < 1 || o.m_max > 201) throw UsageError("--m-max must be in 1..201");
  Rat a = a_of(o);
  Report r{"sl3-kernel"};
  r.parameters = {{"a", rat_json(a)}, {"m_max", o.m_max}};
  auto rep = kernel_report(a, o.m_max);
  ordered_json ms = ordered_json::array(), entries = ordered_json::array();
  bool ok = true;
  std::vector<int> expected;
  if (is_integer(a))
    for (int k = 0; m_of(a, k) <= o.m_max; ++k) expected.push_back(m_of(a, k));
  std::vector<int> got;
  for (auto& e : rep.entries) {
    got.push_back(e.m);
    ms.push_back(e.m);
    ok = ok && is_m_invariant(e.pair);
    entries.push_back({{"m", e.m}, {"q1", poly_json(e.pair.q1)}, {"q2", poly_json(e.pair.q2)},
                       {"matches_display_at_a", e.matches_display_at_a},
                       {"matches_display_at_minus_a", e.matches_display_at_minus_a},
                       {"display_is_m_invariant", e.display_is_m_invariant}});
    r.text.push_back("m=" + std::to_string(e.m) + " q1=" + poly_json(e.pair.q1).dump());
  }
  ok = ok && got == expected;
  r.payload["m_list"] = ms;
  r.payload["empty"] = rep.empty();
  r.payload["entries"] = entries;
  if (rep.empty()) r.text.push_back("kernel is empty up to m = " + std::to_string(o.m_max));
  r.status = ok ? "pass" : "fail";
  return r;
}

Report cmd_forced_weight(const Options& o, const std::string& name)
{
  Rat a = a_of(o);
  Weight target = lambda_ia(3, 2, -a);
  Weight lam = o.lambda.empty() ? target : parse_weight(o.lambda, 3);
  Report r{name};
  r.parameters = {{"a", rat_json(a)}, {"lambda", weight_json(lam)}};
  auto d = lambda2a_detail(a, lam);
  Rat want32 = lam(1) - a / 3 + frac(1, 2);
  Rat want21 = -lam(3) + a / 3 + frac(1, 2);
  r.payload = {{"holds", d.holds},
               {"target", weight_json(target)},
               {"lowest_vector", d.lowest.to_string()},
               {"reduced_T12", d.reduced_12.to_string()},
               {"reduced_T23", d.reduced_23.to_string()},
               {"coefficient_T32", rat_json(d.coeff_32)},
               {"coefficient_T21", rat_json(d.coeff_21)},
               {"display_T32", rat_json(want32)},
               {"display_T21", rat_json(want21)}};
  bool ok = d.shape_ok && d.coeff_32 == want32 && d.coeff_21 == want21 && d.holds == (lam == target);
  r.status = ok ? "pass" : "fail";
  r.text = {"[T12, v] = " + d.reduced_12.to_string(), "[T23, v] = " + d.reduced_23.to_string(),
            std::string("annihilated: ") + (d.holds ? "yes" : "no") + ", lambda(2,-a) = " + weight_text(target)};
  return r;
}

Report cmd_verify_all(const Options& o)
{
  if (o.max_n < 2 || o.max_n > 6) throw UsageError("--max-n must be in 2..6");
  Report r{"verify-all"};
  r.parameters = {{"max_n", o.max_n}, {"mutation", !o.no_mutation}};
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.include_mutation = !o.no_mutation;
  auto results = run_acceptance(vo);
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (auto& c : results) {
    ok = ok && c.passed;
    ordered_json j = {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
    if (!c.checks.empty()) {
      ordered_json checks = ordered_json::array();
      for (auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
      j["checks"] = checks;
    }
    if (o.timings) j["seconds"] = c.seconds;
    rows.push_back(j);
    r.text.push_back(std::to_string(c.id) + ". " + c.title + ": " + (c.passed ? "PASS" : "FAIL") + " - " + c.detail);
  }
  r.payload["criteria"] = rows;
  r.status = ok ? "pass" : "fail";
  return r;
}

void emit(const Report& r, bool json)
{
  if (json) {
    ordered_json j = {{"schema_version", kSchemaVersion},
                      {"command", r.command},
                      {"parameters", r.parameters},
                      {"status", r.status},
                      {"payload", r.payload}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << r.command << " " << r.parameters.dump() << "\n";
  for (auto& line : r.text) std::cout << "  " << line << "\n";
  std::cout << "status: " << r.status << "\n";
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact verification of minimal representations of sl(n)"};
  app.require_subcommand(1);
  bool json = false;
  bool text = false;
  std::string fault;
  Options o;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", json, "JSON report (default)");
  fmt->add_flag("--text", text, "human readable report");
  fmt->require_option(0, 1);
  app.add_option("--inject-fault", fault, "deliberate defect for mutation testing")->check(CLI::IsMember({"sign-flip"}));

  auto add_a = [&](CLI::App* c) { c->add_option("--a", o.a, "parameter a as a rational, e.g. -7/3"); };
  auto add_form = [&](CLI::App* c) {
    c->add_option("--form", o.form, "real form, su(p,q) or sl(n,R)");
    c->add_option("--p", o.p, "p of su(p,q)");
    c->add_option("--q", o.q, "q of su(p,q)");
    c->add_option("--n", o.n, "n of sl(n,R)");
    c->add_flag("--nonreal", o.nonreal, "treat a as a non-real complex number");
  };

  auto* s2 = app.add_subcommand("decompose-s2", "summands of S^2(sl(n)) by adjoint closure");
  s2->add_option("--n", o.n)->required();
  auto* ann = app.add_subcommand("annihilator", "weights whose L(lambda) is killed by sym(F^a)");
  ann->add_option("--n", o.n)->required();
  add_a(ann);
  auto* cas = app.add_subcommand("casimir", "Casimir scalar on L(lambda(i,a)) by two routes");
  cas->add_option("--n", o.n)->required();
  cas->add_option("--i", o.i, "restrict to one label");
  add_a(cas);
  auto* gvm = app.add_subcommand("gvm-check", "generalized Verma module annihilation check");
  gvm->add_option("--n", o.n)->required();
  gvm->add_option("--parabolic", o.parabolic, "q1, qn1 or both");
  gvm->add_option("--lambda", o.lambda, "comma separated weight to test instead of lambda(1,a)/lambda(n,a)");
  add_a(gvm);
  auto* cls = app.add_subcommand("classify", "a-minimal modules for a real form");
  add_form(cls);
  add_a(cls);
  auto* tab = app.add_subcommand("table1", "number of a-minimal modules");
  add_form(tab);
  add_a(tab);
  auto* kt = app.add_subcommand("ktypes", "K-types of each a-minimal module");
  add_form(kt);
  add_a(kt);
  kt->add_option("--count", o.count, "number of K-types");
  auto* ker = app.add_subcommand("sl3-kernel", "M-invariant kernel of pi_m(4X) for sl(3,R)");
  add_a(ker);
  ker->add_option("--m-max", o.m_max, "largest m");
  auto* lem = app.add_subcommand("lemma62", "[n, iota sym(F^a)] modulo I(b,lambda) for sl(3)");
  lem->alias("lambda2a");
  add_a(lem);
  lem->add_option("--lambda", o.lambda, "comma separated weight (default lambda(2,-a))");
  auto* ver = app.add_subcommand("verify-all", "run acceptance criteria 1-10");
  ver->add_option("--max-n", o.max_n, "largest n in the grids (2..6)");
  ver->add_flag("--no-mutation", o.no_mutation, "skip the mutation run inside criterion 10");
  ver->add_flag("--timings", o.timings, "include wall times (not deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (fault == "sign-flip") set_fault(Fault::kFlipStructureConstant);
    Report r;
    if (*s2) r = cmd_decompose_s2(o);
    else if (*ann) r = cmd_annihilator(o);
    else if (*cas) r = cmd_casimir(o);
    else if (*gvm) r = cmd_gvm(o);
    else if (*cls) r = cmd_classify(o, "classify");
    else if (*tab) r = cmd_classify(o, "table1");
    else if (*kt) r = cmd_ktypes(o);
    else if (*ker) r = cmd_sl3_kernel(o);
    else if (*lem) r = cmd_forced_weight(o, "lemma62");
    else r = cmd_verify_all(o);
    if (!fault.empty()) r.parameters["inject_fault"] = fault;
    emit(r, json || !text);
    return r.status == "fail" ? kVerifyFailed : kOk;
  } catch (const std::invalid_argument& e) {
    // UsageError, PreconditionError, DimensionError and malformed rationals
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
