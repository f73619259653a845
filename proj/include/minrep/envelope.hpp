#pragma once

#include "minrep/liealg.hpp"
#include "minrep/symdecomp.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace minrep {

/// PBW generators of U(sl(n)) in their fixed order: lowering T_ij (i>j, lex),
/// then H_k = T_kk - T_{k+1,k+1}, then raising T_ij (i<j, lex).
struct PBWGenerator {
  enum class Kind { kLowering, kCartan, kRaising };
  Kind kind;
  int i;  // for Cartan: k
  int j;  // for Cartan: k+1
};

/// A PBW monomial is the nondecreasing list of its generator ids.
using PBWMonomial = std::vector<std::uint16_t>;

constexpr std::size_t kMaxWordLength = 8;

class Envelope {
public:
  explicit Envelope(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] const PBWGenerator& generator(std::size_t id) const { return gens_[id]; }
  /// Id of the off-diagonal T_ij.
  [[nodiscard]] std::uint16_t root_id(int i, int j) const;
  [[nodiscard]] std::uint16_t cartan_id(int k) const;
  /// [g_a, g_b] in generator coordinates.
  [[nodiscard]] const std::vector<std::pair<std::uint16_t, Rat>>& bracket(std::size_t a, std::size_t b) const
  {
    return table_[a][b];
  }
  /// Generator coordinates of a matrix.
  [[nodiscard]] std::vector<std::pair<std::uint16_t, Rat>> coords(const TracelessMatrix& x) const;
  [[nodiscard]] TracelessMatrix matrix(std::size_t id) const;
  [[nodiscard]] std::string name(std::size_t id) const;

private:
  int n_;
  std::vector<PBWGenerator> gens_;
  std::map<std::pair<int, int>, std::uint16_t> root_ids_;
  std::vector<std::vector<std::vector<std::pair<std::uint16_t, Rat>>>> table_;
};

/// Shared context for sl(n), rebuilt when the injected fault changes.
const Envelope& envelope(int n);

/// Element of U(sl(n)) in PBW normal form.
class UEElem {
public:
  using Terms = std::map<PBWMonomial, Rat>;

  UEElem() = default;
  explicit UEElem(int n) : n_(n) {}
  UEElem(int n, Terms terms);

  static UEElem scalar(int n, const Rat& c);
  static UEElem generator(int n, std::uint16_t id);
  static UEElem from_matrix(const TracelessMatrix& x);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] Rat coefficient(const PBWMonomial& m) const;
  [[nodiscard]] std::string to_string() const;

  void add_term(const PBWMonomial& m, const Rat& c);

  UEElem operator+(const UEElem& o) const;
  UEElem operator-(const UEElem& o) const;
  friend UEElem operator*(const Rat& c, const UEElem& u);
  /// Associative product, normal ordered.
  UEElem operator*(const UEElem& o) const;

  friend bool operator==(const UEElem&, const UEElem&) = default;

private:
  int n_ = 0;
  Terms terms_;
};

/// Product of a word of Lie algebra elements in PBW normal form.
UEElem normal_order(const std::vector<TracelessMatrix>& word);
UEElem commutator(const UEElem& x, const UEElem& y);
UEElem symmetrize(const Poly2Elem& p);
UEElem iota(const UEElem& u);

struct ParabolicSpec {
  enum class Kind { kBorel, kQ1, kQn1 };  // b, q(1,n-1), q(n-1,1)
  Kind kind = Kind::kBorel;
  int n = 2;
  [[nodiscard]] std::string name() const;
  /// Whether the lowering generator T_ij lies in the opposite nilradical.
  [[nodiscard]] bool in_opposite_nilradical(int i, int j) const;
  [[nodiscard]] bool is_character(const Weight& lambda) const;
};

/// Representative of u modulo I(q,λ) supported on monomials in the opposite
/// nilradical of q.
UEElem reduce_mod_ideal(const UEElem& u, const ParabolicSpec& q, const Weight& lambda);

} // namespace minrep
