#include "minrep/classify.hpp"

#include "minrep/verma.hpp"

#include <algorithm>
#include <regex>

namespace minrep {

RealFormSpec RealFormSpec::su(int p, int q)
{
  if (p < 1 || q < 1) throw PreconditionError("su(p,q) needs p, q >= 1");
  return {Kind::kSU, p, q, p + q};
}

RealFormSpec RealFormSpec::slR(int n)
{
  if (n < 2) throw PreconditionError("sl(n,R) needs n >= 2");
  return {Kind::kSLR, 0, 0, n};
}

RealFormSpec RealFormSpec::parse(const std::string& text)
{
  static const std::regex su_re(R"(\s*su\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex sl_re(R"(\s*sl\(\s*(\d+)\s*,\s*(R|ℝ)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, su_re)) return su(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(text, m, sl_re)) return slR(std::stoi(m[1]));
  throw PreconditionError("unrecognized real form: " + text);
}

std::string RealFormSpec::name() const
{
  if (kind == Kind::kSU) return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "sl(" + std::to_string(n) + ",R)";
}

std::string family_name(Family f)
{
  switch (f) {
  case Family::kHighestWeight: return "HW";
  case Family::kLowestWeightDual: return "LW-dual";
  case Family::kPSTriv: return "PS-triv";
  case Family::kPSSgn: return "PS-sgn";
  case Family::kGenuine: return "Genuine";
  }
  return "?";
}

std::vector<Weight> KTypePencil::weights() const
{
  std::vector<Weight> out;
  Weight w = mu0;
  for (int k = 0; k < count; ++k) {
    out.push_back(w);
    w = w + step;
  }
  return out;
}

std::vector<int> z_set(int n, const Rat& a, int bound, bool nonreal)
{
  std::vector<int> out;
  if (nonreal) return out;
  Rat top = abs_rat(a) - frac(n, 2);
  for (int k = 0; k <= bound; ++k) {
    Rat r = top - k;
    if (is_integer(r) && sgn(r) >= 0 && r.get_num() % 2 == 0) out.push_back(k);
  }
  return out;
}

std::vector<int> z_set_full(int n, const Rat& a, bool nonreal)
{
  Rat top = abs_rat(a) - frac(n, 2);
  if (nonreal || sgn(top) < 0) return {};
  mpz_class f = top.get_num() / top.get_den();
  return z_set(n, a, static_cast<int>(f.get_si()), nonreal);
}

namespace {

struct Clause {
  Family family;
  int label;
  bool negate_a;    // weight λ(i,−a) instead of λ(i,a)
  bool membership;  // "a ∈ base ± ℕ" if true, "a ∉ ..." if false
  Rat base;
  bool upward;      // base + ℕ if true, base − ℕ if false
};

bool holds(const Clause& c, const Rat& a, bool nonreal)
{
  bool in = !nonreal && (c.upward ? in_shifted_naturals(a, c.base) : in_shifted_neg_naturals(a, c.base));
  return c.membership ? in : !in;
}

std::string describe(const Clause& c)
{
  return std::string("a ") + (c.membership ? "in " : "not in ") + to_string(c.base) + (c.upward ? " + N" : " - N");
}

} // namespace

std::vector<MinimalCert> classify_su(int p, int q, const Rat& a, bool nonreal)
{
  if (p < 1 || q < 1 || p + q < 3)
    throw PreconditionError("su(p,q) classification needs p, q >= 1 and p+q >= 3; su(1,1) = sl(2,R) is classical");
  int n = p + q;
  Rat half_n = frac(n, 2);
  Rat half_n2 = frac(n - 2, 2);
  Rat d = frac(p - q, 2);
  auto HW = Family::kHighestWeight;
  auto LW = Family::kLowestWeightDual;
  std::vector<Clause> clauses;
  if (p == 1) {
    clauses = {{HW, 1, false, false, half_n, true},
               {LW, 1, true, false, -half_n, false},
               {HW, 2, false, true, half_n2, true},
               {LW, 2, true, true, -half_n2, false}};
  } else if (q == 1) {
    clauses = {{HW, n, false, false, -half_n, false},
               {LW, n, true, false, half_n, true},
               {HW, n - 1, false, true, -half_n2, false},
               {LW, n - 1, true, true, half_n2, true}};
  } else {
    clauses = {{HW, p, false, true, -d, false},
               {LW, p, true, true, d, true},
               {HW, p + 1, false, true, -d, true},
               {LW, p + 1, true, true, d, false}};
  }

  auto form = RealFormSpec::su(p, q);
  std::vector<MinimalCert> out;
  for (const auto& c : clauses) {
    if (!holds(c, a, nonreal)) continue;
    MinimalCert cert;
    cert.form = form;
    cert.a = a;
    cert.nonreal = nonreal;
    cert.family = c.family;
    cert.labels = {c.label};
    if (!nonreal) cert.weight = lambda_ia(n, c.label, c.negate_a ? Rat(-a) : a);
    cert.conditions = {describe(c)};
    auto same = std::find_if(out.begin(), out.end(), [&](const MinimalCert& o) {
      return o.family == cert.family && o.weight && cert.weight && *o.weight == *cert.weight;
    });
    if (same == out.end()) {
      out.push_back(std::move(cert));
      continue;
    }
    same->labels.push_back(c.label);
    same->conditions.push_back(describe(c));
    std::sort(same->labels.begin(), same->labels.end());
    if (same->labels != std::vector<int>{p, p + 1}) same->unexpected_collision = true;
  }
  return out;
}

std::vector<MinimalCert> classify_slnR(int n, const Rat& a, bool nonreal)
{
  if (n < 3) throw PreconditionError("sl(n,R) classification needs n >= 3; sl(2,R) is classical");
  auto form = RealFormSpec::slR(n);
  std::vector<MinimalCert> out;
  auto make = [&](Family f, std::string condition) {
    MinimalCert c;
    c.form = form;
    c.a = a;
    c.nonreal = nonreal;
    c.family = f;
    c.conditions = {std::move(condition)};
    return c;
  };
  out.push_back(make(Family::kPSTriv, "always"));
  out.push_back(make(Family::kPSSgn, "always"));
  if (n == 3 && !nonreal && is_integer(a)) out.push_back(make(Family::kGenuine, "n = 3 and a in Z"));
  return out;
}

std::vector<MinimalCert> classify(const RealFormSpec& form, const Rat& a, bool nonreal)
{
  if (form.kind == RealFormSpec::Kind::kSU) return classify_su(form.p, form.q, a, nonreal);
  return classify_slnR(form.n, a, nonreal);
}

int table1_count(const RealFormSpec& form, const Rat& a, bool nonreal)
{
  if (form.kind == RealFormSpec::Kind::kSU) {
    if (form.p + form.q < 3) throw PreconditionError("su(1,1) is not a row of the table");
    if (form.p == 1 || form.q == 1) return 2;
    return (!nonreal && is_integer(a - frac(form.p + form.q, 2))) ? 2 : 0;
  }
  if (form.n < 3) throw PreconditionError("sl(2,R) is not a row of the table");
  if (form.n >= 4) return 2;
  return (!nonreal && is_integer(a)) ? 3 : 2;
}

Weight longest_compact_weyl(const Weight& w, int p)
{
  auto v = w.entries();
  std::reverse(v.begin(), v.begin() + p);
  std::reverse(v.begin() + p, v.end());
  return Weight(std::move(v));
}

bool is_compact_dominant(const Weight& w, int p)
{
  for (int i = 1; i < w.n(); ++i) {
    if (i == p) continue;
    Rat d = w(i) - w(i + 1);
    if (!is_integer(d) || sgn(d) < 0) return false;
  }
  return true;
}

KTypePencil ktypes_su_pencil(const MinimalCert& cert, int count)
{
  if (count < 1) throw PreconditionError("count must be at least 1");
  if (cert.form.kind != RealFormSpec::Kind::kSU) throw PreconditionError("not an su(p,q) certificate");
  if (!cert.weight) throw PreconditionError("K-types need an explicit weight; a is flagged nonreal");
  int n = cert.form.n;
  int p = cert.form.p;
  KTypePencil k;
  k.count = count;
  if (cert.family == Family::kHighestWeight) {
    k.mu0 = *cert.weight;
    k.step = Weight::root(p + 1, p, n);
  } else {
    k.mu0 = -longest_compact_weyl(*cert.weight, p);
    k.step = Weight::root(1, n, n);
  }
  return k;
}

std::vector<Weight> ktypes_su(const MinimalCert& cert, int count) { return ktypes_su_pencil(cert, count).weights(); }

std::vector<int> ktypes_slnR(const MinimalCert& cert, int count)
{
  if (count < 0) throw PreconditionError("count must be nonnegative");
  if (cert.form.kind != RealFormSpec::Kind::kSLR) throw PreconditionError("not an sl(n,R) certificate");
  std::vector<int> out;
  if (cert.family == Family::kGenuine) {
    Rat m0 = 2 * abs_rat(cert.a) + 1;
    int base = static_cast<int>(mpz_class(m0.get_num()).get_si());
    for (int k = 0; k < count; ++k) out.push_back(base + 4 * k);
    return out;
  }
  auto z = z_set_full(cert.form.n, cert.a, cert.nonreal);
  int k = cert.family == Family::kPSTriv ? 0 : 1;
  while (static_cast<int>(out.size()) < count) {
    if (!std::binary_search(z.begin(), z.end(), k)) out.push_back(k);
    k += 2;
  }
  return out;
}

SoWeight harmonic_weight(int n, int k)
{
  SoWeight w{std::vector<Rat>(n / 2, Rat(0))};
  w.eps[0] = k;
  return w;
}

SoWeight su2_weight(int m) { return SoWeight{{frac(m, 2)}}; }

bool lattice_check(const RealFormSpec& form, const SoWeight& mu)
{
  if (form.kind != RealFormSpec::Kind::kSLR) throw PreconditionError("lattice check applies to sl(n,R)");
  if (mu.eps.empty()) return false;
  for (std::size_t i = 1; i < mu.eps.size(); ++i)
    if (mu.eps[i] != 0) return false;
  // ψ = 2ε₁: ℕψ/2 = ℕε₁, ℕψ/4 = (ℕ/2)ε₁
  Rat c = form.n >= 4 ? mu.eps[0] : Rat(2 * mu.eps[0]);
  return is_integer(c) && sgn(c) >= 0;
}

} // namespace minrep
