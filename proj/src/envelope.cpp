#include "minrep/envelope.hpp"

#include "minrep/fault.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace minrep {

Envelope::Envelope(int n) : n_(n)
{
  if (n < 2) throw DimensionError("sl(n) needs n >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) gens_.push_back({PBWGenerator::Kind::kLowering, i, j});
  for (int k = 1; k < n; ++k) gens_.push_back({PBWGenerator::Kind::kCartan, k, k + 1});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens_.push_back({PBWGenerator::Kind::kRaising, i, j});
  for (std::size_t id = 0; id < gens_.size(); ++id)
    if (gens_[id].kind != PBWGenerator::Kind::kCartan)
      root_ids_[{gens_[id].i, gens_[id].j}] = static_cast<std::uint16_t>(id);

  // T-basis expansion of each generator, then brackets via the structure formula.
  auto expand = [&](std::size_t id) {
    const auto& g = gens_[id];
    std::vector<std::tuple<int, int, Rat>> out;
    if (g.kind == PBWGenerator::Kind::kCartan) {
      out.emplace_back(g.i, g.i, Rat(1));
      out.emplace_back(g.j, g.j, Rat(-1));
    } else {
      out.emplace_back(g.i, g.j, Rat(1));
    }
    return out;
  };
  table_.assign(gens_.size(), std::vector<std::vector<std::pair<std::uint16_t, Rat>>>(gens_.size()));
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = 0; b < gens_.size(); ++b) {
      TracelessMatrix acc(n);
      for (const auto& [r, s, ca] : expand(a))
        for (const auto& [i, j, cb] : expand(b)) acc = acc + (ca * cb) * basis_bracket(r, s, i, j, n);
      table_[a][b] = coords(acc);
    }
}

std::uint16_t Envelope::root_id(int i, int j) const
{
  auto it = root_ids_.find({i, j});
  if (it == root_ids_.end()) throw DimensionError("no root generator T_" + std::to_string(i) + std::to_string(j));
  return it->second;
}

std::uint16_t Envelope::cartan_id(int k) const
{
  if (k < 1 || k >= n_) throw DimensionError("Cartan index out of range");
  return static_cast<std::uint16_t>(n_ * (n_ - 1) / 2 + (k - 1));
}

std::vector<std::pair<std::uint16_t, Rat>> Envelope::coords(const TracelessMatrix& x) const
{
  if (x.n() != n_) throw DimensionError("size mismatch in enveloping algebra");
  std::vector<std::pair<std::uint16_t, Rat>> out;
  for (std::size_t id = 0; id < gens_.size(); ++id) {
    const auto& g = gens_[id];
    Rat c;
    if (g.kind == PBWGenerator::Kind::kCartan) {
      for (int l = 1; l <= g.i; ++l) c += x(l, l);
    } else {
      c = x(g.i, g.j);
    }
    if (c != 0) out.emplace_back(static_cast<std::uint16_t>(id), std::move(c));
  }
  return out;
}

TracelessMatrix Envelope::matrix(std::size_t id) const
{
  const auto& g = gens_.at(id);
  if (g.kind == PBWGenerator::Kind::kCartan)
    return TracelessMatrix::basis(g.i, g.i, n_) - TracelessMatrix::basis(g.j, g.j, n_);
  return TracelessMatrix::basis(g.i, g.j, n_);
}

std::string Envelope::name(std::size_t id) const
{
  const auto& g = gens_.at(id);
  if (g.kind == PBWGenerator::Kind::kCartan) return "H" + std::to_string(g.i);
  return "T" + std::to_string(g.i) + "," + std::to_string(g.j);
}

const Envelope& envelope(int n)
{
  static std::mutex mu;
  static std::map<std::pair<int, Fault>, Envelope> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, active_fault());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Envelope(n)).first;
  return it->second;
}

namespace {

using Terms = UEElem::Terms;
using Memo = std::map<std::pair<PBWMonomial, std::uint16_t>, Terms>;

void add_into(Terms& dst, const Terms& src, const Rat& c)
{
  if (c == 0) return;
  for (const auto& [m, v] : src) {
    auto [it, inserted] = dst.emplace(m, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

// m · x for a normal-ordered monomial m and a generator x, by moving x left
// past each larger letter: (m'y)x = (m'x)y + m'[y,x].
const Terms& word_times_gen(const Envelope& env, const PBWMonomial& m, std::uint16_t x, Memo& memo)
{
  auto key = std::make_pair(m, x);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Terms result;
  if (m.empty() || m.back() <= x) {
    PBWMonomial w = m;
    w.push_back(x);
    result.emplace(std::move(w), Rat(1));
  } else {
    std::uint16_t y = m.back();
    PBWMonomial head(m.begin(), m.end() - 1);
    Terms left = word_times_gen(env, head, x, memo);
    for (const auto& [w, c] : left) add_into(result, word_times_gen(env, w, y, memo), c);
    for (const auto& [z, cz] : env.bracket(y, x)) add_into(result, word_times_gen(env, head, z, memo), cz);
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

Memo& thread_memo(int n)
{
  thread_local std::map<std::pair<int, Fault>, Memo> memos;
  return memos[{n, active_fault()}];
}

Terms times_generator(const Envelope& env, const Terms& u, std::uint16_t x)
{
  Memo& memo = thread_memo(env.n());
  Terms out;
  for (const auto& [m, c] : u) add_into(out, word_times_gen(env, m, x, memo), c);
  return out;
}

Terms times_element(const Envelope& env, const Terms& u, const Terms& v)
{
  Terms out;
  for (const auto& [m, c] : v) {
    Terms acc = u;
    for (auto g : m) acc = times_generator(env, acc, g);
    add_into(out, acc, c);
  }
  return out;
}

} // namespace

UEElem::UEElem(int n, Terms terms) : n_(n), terms_(std::move(terms))
{
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

UEElem UEElem::scalar(int n, const Rat& c)
{
  UEElem u(n);
  u.add_term({}, c);
  return u;
}

UEElem UEElem::generator(int n, std::uint16_t id)
{
  UEElem u(n);
  u.add_term({id}, Rat(1));
  return u;
}

UEElem UEElem::from_matrix(const TracelessMatrix& x)
{
  UEElem u(x.n());
  for (const auto& [id, c] : envelope(x.n()).coords(x)) u.add_term({id}, c);
  return u;
}

std::size_t UEElem::degree() const
{
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

Rat UEElem::coefficient(const PBWMonomial& m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void UEElem::add_term(const PBWMonomial& m, const Rat& c)
{
  if (c == 0) return;
  if (!std::is_sorted(m.begin(), m.end())) throw PreconditionError("PBW monomial out of order");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string UEElem::to_string() const
{
  if (terms_.empty()) return "0";
  const auto& env = envelope(n_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    if (m.empty() || c != 1) parts.push_back(minrep::to_string(c));
    for (auto g : m) parts.push_back(env.name(g));
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

UEElem UEElem::operator+(const UEElem& o) const
{
  if (n_ != o.n_) throw DimensionError("size mismatch in enveloping algebra");
  UEElem r = *this;
  add_into(r.terms_, o.terms_, Rat(1));
  return r;
}

UEElem UEElem::operator-(const UEElem& o) const
{
  if (n_ != o.n_) throw DimensionError("size mismatch in enveloping algebra");
  UEElem r = *this;
  add_into(r.terms_, o.terms_, Rat(-1));
  return r;
}

UEElem operator*(const Rat& c, const UEElem& u)
{
  UEElem r(u.n_);
  add_into(r.terms_, u.terms_, c);
  return r;
}

UEElem UEElem::operator*(const UEElem& o) const
{
  if (n_ != o.n_) throw DimensionError("size mismatch in enveloping algebra");
  if (degree() + o.degree() > kMaxWordLength)
    throw ResourceError("product degree exceeds the word length bound of " + std::to_string(kMaxWordLength));
  return UEElem(n_, times_element(envelope(n_), terms_, o.terms_));
}

UEElem normal_order(const std::vector<TracelessMatrix>& word)
{
  if (word.empty()) throw PreconditionError("normal_order needs a nonempty word");
  if (word.size() > kMaxWordLength)
    throw ResourceError("word length " + std::to_string(word.size()) + " exceeds bound " +
                        std::to_string(kMaxWordLength));
  UEElem acc = UEElem::from_matrix(word.front());
  for (std::size_t k = 1; k < word.size(); ++k) acc = acc * UEElem::from_matrix(word[k]);
  return acc;
}

UEElem commutator(const UEElem& x, const UEElem& y) { return x * y - y * x; }

UEElem symmetrize(const Poly2Elem& p)
{
  int n = p.n();
  UEElem out = UEElem::scalar(n, p.scalar());
  out = out + UEElem::from_matrix(p.linear_part());
  for (const auto& [key, c] : p.quadratic()) {
    auto [i, j] = reduced::pair(key.first, n);
    auto [k, l] = reduced::pair(key.second, n);
    auto x = UEElem::from_matrix(TracelessMatrix::basis(i, j, n));
    auto y = UEElem::from_matrix(TracelessMatrix::basis(k, l, n));
    out = out + (c / 2) * (x * y + y * x);
  }
  return out;
}

UEElem iota(const UEElem& u)
{
  int n = u.n();
  UEElem out(n);
  for (const auto& [m, c] : u.terms()) {
    UEElem acc = UEElem::scalar(n, (m.size() % 2 == 0) ? c : Rat(-c));
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = acc * UEElem::generator(n, *it);
    out = out + acc;
  }
  return out;
}

std::string ParabolicSpec::name() const
{
  switch (kind) {
  case Kind::kBorel: return "b";
  case Kind::kQ1: return "q(1,n-1)";
  case Kind::kQn1: return "q(n-1,1)";
  }
  return "?";
}

bool ParabolicSpec::in_opposite_nilradical(int i, int j) const
{
  switch (kind) {
  case Kind::kBorel: return i > j;
  case Kind::kQ1: return i > j && j == 1;
  case Kind::kQn1: return i > j && i == n;
  }
  return false;
}

bool ParabolicSpec::is_character(const Weight& lambda) const
{
  if (lambda.n() != n) return false;
  switch (kind) {
  case Kind::kBorel: return true;
  case Kind::kQ1:
    for (int i = 3; i <= n; ++i)
      if (lambda(i) != lambda(2)) return false;
    return true;
  case Kind::kQn1:
    for (int i = 2; i < n; ++i)
      if (lambda(i) != lambda(1)) return false;
    return true;
  }
  return false;
}

UEElem reduce_mod_ideal(const UEElem& u, const ParabolicSpec& q, const Weight& lambda)
{
  int n = u.n();
  if (q.n != n || lambda.n() != n) throw DimensionError("size mismatch in reduce_mod_ideal");
  if (!q.is_character(lambda)) throw PreconditionError("weight is not a character of " + q.name());
  const auto& env = envelope(n);

  Terms work = u.terms();
  Terms result;
  while (!work.empty()) {
    // Highest-degree terms first keeps the worklist from revisiting words.
    auto it = std::max_element(work.begin(), work.end(),
                               [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    PBWMonomial w = it->first;
    Rat c = it->second;
    work.erase(it);
    if (w.empty()) {
      add_into(result, Terms{{w, c}}, Rat(1));
      continue;
    }
    const auto& last = env.generator(w.back());
    if (last.kind == PBWGenerator::Kind::kRaising) continue;
    if (last.kind == PBWGenerator::Kind::kCartan) {
      Rat value = lambda(last.i) - lambda(last.j);
      w.pop_back();
      add_into(work, Terms{{w, c}}, value);
      continue;
    }
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (pos >= 0) {
      const auto& g = env.generator(w[pos]);
      if (!q.in_opposite_nilradical(g.i, g.j)) break;
      --pos;
    }
    if (pos < 0) {
      add_into(result, Terms{{w, c}}, Rat(1));
      continue;
    }
    // w = A ℓ B with B in the opposite nilradical: A ℓ B ≡ A [ℓ, B].
    std::uint16_t ell = w[pos];
    PBWMonomial prefix(w.begin(), w.begin() + pos);
    std::vector<std::uint16_t> tail(w.begin() + pos + 1, w.end());
    for (std::size_t k = 0; k < tail.size(); ++k) {
      Terms acc{{prefix, Rat(1)}};
      for (std::size_t s = 0; s < k; ++s) acc = times_generator(env, acc, tail[s]);
      Terms branched;
      for (const auto& [z, cz] : env.bracket(ell, tail[k])) add_into(branched, times_generator(env, acc, z), cz);
      for (std::size_t s = k + 1; s < tail.size(); ++s) branched = times_generator(env, branched, tail[s]);
      add_into(work, branched, c);
    }
  }
  return UEElem(n, std::move(result));
}

} // namespace minrep
