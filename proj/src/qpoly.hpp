#pragma once

#include <map>
#include <string>
#include <vector>

#include "weighted_graph.hpp"

namespace wgg {

// Exact rational with 64-bit numerator/denominator, overflow-checked.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  bool is_integer() const { return den == 1; }
  bool operator==(const Rational&) const = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational pow(const Rational& base, int exp);
std::string to_string(const Rational& r);

// Monomial of the total dichromatic polynomial: a multiset of u-variable
// keys times v^vexp z^zexp.
struct Monomial {
  std::vector<std::string> ukeys;  // sorted
  int vexp = 0;
  int zexp = 0;

  auto operator<=>(const Monomial&) const = default;
};

// Sparse exact polynomial in the u-variables, v, and z.  Keeps a dictionary
// from u-keys back to the weights they stand for, so evaluations can be
// built from the weights themselves.
struct QPolynomial {
  std::map<Monomial, Int> terms;
  std::map<std::string, Weight> udict;

  static QPolynomial zero() { return {}; }
  static QPolynomial one();
  static QPolynomial uvar(const Weight& w);
  static QPolynomial vz(int vexp, int zexp, Int coef = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(Monomial m, Int coef);
  void absorb_dict(const QPolynomial& other);

  bool operator==(const QPolynomial& other) const { return terms == other.terms; }
};

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, Int c);

// Restriction to z = 0 (drops all terms with a z factor).
QPolynomial z_zero_part(const QPolynomial& p);
// Substitutes v -> v + c, expanding binomially; exact.
QPolynomial shift_v(const QPolynomial& p, Int c);

// Terms sorted by (z-degree, v-degree, u-key multiset); human mode prints
// u[(2,3)]-style tokens, machine mode is a JSON object.  vsym renames the
// second variable (the forest expansion calls it y).
std::string to_human(const QPolynomial& p, const std::string& vsym = "v");
std::string to_machine(const QPolynomial& p);

Rational evaluate(const QPolynomial& p, const std::map<std::string, Rational>& u_assign,
                  const Rational& v, const Rational& z);

// Total dichromatic polynomial by subset expansion: over all edge subsets S,
// v^{|S|-n+b(S)} z^{c(S)-b(S)} times one u-variable per balanced block,
// carrying the contracted weight under the top switching of the balanced
// part of S.
QPolynomial q_total_subset(const WeightedGainGraph& wg);

// Same polynomial by deletion-contraction on links, with the link-free
// remainder evaluated by subset expansion.
QPolynomial q_total_delcon(const WeightedGainGraph& wg);

// Gain-free weighted-graph polynomial: over all subsets, v^{|S|-n+c(S)}
// times u-variables of plain semigroup block sums (no switching, no z).
// Rejects half and loose edges.
QPolynomial q_graph(const WeightedGainGraph& wg);

}  // namespace wgg
