#pragma once

#include <string>
#include <vector>

#include "lattice.hpp"

namespace wgg {

// A subset of Z^d in one of the closed representations this engine needs:
// an explicit finite set, a cone <apex>* minus a finite exclusion set, a
// principal ideal <top>, or all of Z^d.  The family is closed under
// intersection and translation; a cone meeting an ideal collapses to an
// explicit finite set (the box gets enumerated).
enum class SetKind { Finite, Cone, Ideal, All };

struct ColorSet {
  SetKind kind = SetKind::All;
  Vec bound;                 // Cone: apex; Ideal: top
  std::vector<Vec> members;  // Finite: elements; Cone: exclusions (inside the cone)

  static ColorSet finite(std::vector<Vec> elements);
  static ColorSet cone(Vec apex, std::vector<Vec> exclusions = {});
  static ColorSet ideal(Vec top);
  static ColorSet all();

  bool contains(const Vec& x) const;
  bool is_finite() const { return kind == SetKind::Finite; }
  Int size() const;  // Finite only; otherwise semantic_error
  ColorSet translated(const Vec& g) const;

  bool operator==(const ColorSet&) const = default;
};

// Exact; the cone/ideal collapse enumerates a box and is capped at desk
// scale (throws past ~10^7 points).
ColorSet intersect(const ColorSet& a, const ColorSet& b);

std::string to_string(const ColorSet& s);

// Weight semigroups acted on by the gain group (Z^d, +):
//   max-zd            w in Z^d, add = componentwise max, act = translation
//   sum-zd            w in Z^d, add = vector sum, act = trivial (translation
//                     does not distribute over +, so the additive semigroup
//                     only admits the trivial lawful action)
//   finite-list       finite subset of Z^d, add = intersection, translation
//   cone-minus-finite cone minus finite exclusions, add = intersection
//   pair              (list, filter) pairs, add = componentwise intersection
enum class Semigroup { MaxZd, SumZd, FiniteList, ConeMinusFinite, Pair };

std::string semigroup_tag(Semigroup sg);
Semigroup semigroup_from_tag(const std::string& tag);

struct Weight {
  Semigroup sg = Semigroup::MaxZd;
  Vec vec;          // MaxZd / SumZd
  ColorSet list;    // FiniteList (Finite) / ConeMinusFinite (Cone) / Pair list part
  ColorSet filter;  // Pair only

  static Weight max_zd(Vec v);
  static Weight sum_zd(Vec v);
  static Weight finite_list(ColorSet s);
  static Weight cone_minus_finite(ColorSet s);
  static Weight pair(ColorSet list, ColorSet filter);

  bool operator==(const Weight&) const = default;
};

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_act(const Weight& w, const Vec& g);

// Canonical token for polynomial u-variables; embeds the semigroup tag so
// polynomials over different semigroups cannot mix.
std::string weight_key(const Weight& w);

// Number of admissible colors a weight stands for (list weights and pairs);
// throws when the effective list is infinite or the semigroup has no list
// meaning.
Int weight_color_count(const Weight& w);

// Effective color list of a weight intersected with an external filter.
ColorSet weight_color_set(const Weight& w);

}  // namespace wgg
