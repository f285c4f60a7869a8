#include "weights.hpp"

#include <algorithm>

namespace wgg {

namespace {

constexpr Int kBoxEnumCap = 10'000'000;

void sort_unique(std::vector<Vec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ColorSet ColorSet::finite(std::vector<Vec> elements) {
  ColorSet s;
  s.kind = SetKind::Finite;
  s.members = std::move(elements);
  if (!s.members.empty()) {
    int d = s.members.front().dim();
    for (const Vec& x : s.members)
      if (x.dim() != d) throw semantic_error("finite set with mixed dimensions");
  }
  sort_unique(s.members);
  return s;
}

ColorSet ColorSet::cone(Vec apex, std::vector<Vec> exclusions) {
  ColorSet s;
  s.kind = SetKind::Cone;
  s.bound = std::move(apex);
  for (const Vec& x : exclusions)
    if (!leq(s.bound, x)) throw semantic_error("cone exclusion lies below the apex");
  s.members = std::move(exclusions);
  sort_unique(s.members);
  return s;
}

ColorSet ColorSet::ideal(Vec top) {
  ColorSet s;
  s.kind = SetKind::Ideal;
  s.bound = std::move(top);
  return s;
}

ColorSet ColorSet::all() { return ColorSet{}; }

bool ColorSet::contains(const Vec& x) const {
  switch (kind) {
    case SetKind::Finite:
      return std::binary_search(members.begin(), members.end(), x);
    case SetKind::Cone:
      return leq(bound, x) && !std::binary_search(members.begin(), members.end(), x);
    case SetKind::Ideal:
      return leq(x, bound);
    case SetKind::All:
      return true;
  }
  return false;
}

Int ColorSet::size() const {
  if (kind != SetKind::Finite) throw semantic_error("color set is infinite");
  return static_cast<Int>(members.size());
}

ColorSet ColorSet::translated(const Vec& g) const {
  ColorSet s = *this;
  if (s.kind == SetKind::Cone || s.kind == SetKind::Ideal) s.bound = s.bound + g;
  for (Vec& x : s.members) x = x + g;
  return s;
}

namespace {

ColorSet box_minus(const Box& box, const std::vector<Vec>& removed) {
  if (!box.empty() && box.count() > kBoxEnumCap)
    throw semantic_error("color set enumeration exceeds desk-scale cap");
  std::vector<Vec> elems;
  box.for_each([&](const Vec& x) {
    if (!std::binary_search(removed.begin(), removed.end(), x)) elems.push_back(x);
  });
  return ColorSet::finite(std::move(elems));
}

}  // namespace

ColorSet intersect(const ColorSet& a, const ColorSet& b) {
  if (a.kind == SetKind::All) return b;
  if (b.kind == SetKind::All) return a;
  if (b.kind == SetKind::Finite && a.kind != SetKind::Finite) return intersect(b, a);
  switch (a.kind) {
    case SetKind::Finite: {
      std::vector<Vec> elems;
      for (const Vec& x : a.members)
        if (b.contains(x)) elems.push_back(x);
      return ColorSet::finite(std::move(elems));
    }
    case SetKind::Cone: {
      if (b.kind == SetKind::Cone) {
        Vec apex = join(a.bound, b.bound);
        std::vector<Vec> excl;
        for (const Vec& x : a.members)
          if (leq(apex, x)) excl.push_back(x);
        for (const Vec& x : b.members)
          if (leq(apex, x)) excl.push_back(x);
        return ColorSet::cone(std::move(apex), std::move(excl));
      }
      // Cone meets Ideal: the box [apex, top] minus the exclusions.
      return box_minus(Box(a.bound, b.bound), a.members);
    }
    case SetKind::Ideal: {
      if (b.kind == SetKind::Ideal) return ColorSet::ideal(meet(a.bound, b.bound));
      return box_minus(Box(b.bound, a.bound), b.members);
    }
    case SetKind::All:
      break;
  }
  throw semantic_error("unreachable color set intersection");
}

std::string to_string(const ColorSet& s) {
  auto list_str = [](const std::vector<Vec>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += to_string(v[i]);
    }
    return out + "}";
  };
  switch (s.kind) {
    case SetKind::Finite:
      return list_str(s.members);
    case SetKind::Cone:
      return s.members.empty() ? "<" + to_string(s.bound) + ">*"
                               : "<" + to_string(s.bound) + ">*\\" + list_str(s.members);
    case SetKind::Ideal:
      return "<" + to_string(s.bound) + ">";
    case SetKind::All:
      return "Z^d";
  }
  return "?";
}

std::string semigroup_tag(Semigroup sg) {
  switch (sg) {
    case Semigroup::MaxZd:
      return "max-zd";
    case Semigroup::SumZd:
      return "sum-zd";
    case Semigroup::FiniteList:
      return "finite-list";
    case Semigroup::ConeMinusFinite:
      return "cone-minus-finite";
    case Semigroup::Pair:
      return "pair";
  }
  return "?";
}

Semigroup semigroup_from_tag(const std::string& tag) {
  if (tag == "max-zd") return Semigroup::MaxZd;
  if (tag == "sum-zd") return Semigroup::SumZd;
  if (tag == "finite-list") return Semigroup::FiniteList;
  if (tag == "cone-minus-finite") return Semigroup::ConeMinusFinite;
  if (tag == "pair") return Semigroup::Pair;
  throw parse_error("unknown semigroup: " + tag);
}

Weight Weight::max_zd(Vec v) {
  Weight w;
  w.sg = Semigroup::MaxZd;
  w.vec = std::move(v);
  return w;
}

Weight Weight::sum_zd(Vec v) {
  Weight w;
  w.sg = Semigroup::SumZd;
  w.vec = std::move(v);
  return w;
}

Weight Weight::finite_list(ColorSet s) {
  if (s.kind != SetKind::Finite) throw semantic_error("finite-list weight needs a finite set");
  Weight w;
  w.sg = Semigroup::FiniteList;
  w.list = std::move(s);
  return w;
}

Weight Weight::cone_minus_finite(ColorSet s) {
  if (s.kind != SetKind::Cone) throw semantic_error("cone-minus-finite weight needs a cone");
  Weight w;
  w.sg = Semigroup::ConeMinusFinite;
  w.list = std::move(s);
  return w;
}

Weight Weight::pair(ColorSet list, ColorSet filter) {
  Weight w;
  w.sg = Semigroup::Pair;
  w.list = std::move(list);
  w.filter = std::move(filter);
  return w;
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.sg != b.sg) throw semantic_error("cannot add weights from different semigroups");
  Weight r = a;
  switch (a.sg) {
    case Semigroup::MaxZd:
      r.vec = join(a.vec, b.vec);
      break;
    case Semigroup::SumZd:
      r.vec = a.vec + b.vec;
      break;
    case Semigroup::FiniteList:
    case Semigroup::ConeMinusFinite:
      r.list = intersect(a.list, b.list);
      break;
    case Semigroup::Pair:
      r.list = intersect(a.list, b.list);
      r.filter = intersect(a.filter, b.filter);
      break;
  }
  return r;
}

Weight weight_act(const Weight& w, const Vec& g) {
  Weight r = w;
  switch (w.sg) {
    case Semigroup::MaxZd:
      r.vec = w.vec + g;
      break;
    case Semigroup::SumZd:
      // The additive semigroup carries the trivial action: translation is
      // not an automorphism of (Z^d, +), so it cannot act lawfully here.
      require_same_dim(w.vec, g);
      break;
    case Semigroup::FiniteList:
    case Semigroup::ConeMinusFinite:
      r.list = w.list.translated(g);
      break;
    case Semigroup::Pair:
      r.list = w.list.translated(g);
      r.filter = w.filter.translated(g);
      break;
  }
  return r;
}

std::string weight_key(const Weight& w) {
  switch (w.sg) {
    case Semigroup::MaxZd:
    case Semigroup::SumZd:
      return semigroup_tag(w.sg) + ":" + to_string(w.vec);
    case Semigroup::FiniteList:
    case Semigroup::ConeMinusFinite:
      return semigroup_tag(w.sg) + ":" + to_string(w.list);
    case Semigroup::Pair:
      return "pair:" + to_string(w.list) + ";" + to_string(w.filter);
  }
  return "?";
}

Int weight_color_count(const Weight& w) {
  return weight_color_set(w).size();
}

ColorSet weight_color_set(const Weight& w) {
  switch (w.sg) {
    case Semigroup::FiniteList:
    case Semigroup::ConeMinusFinite:
      return w.list;
    case Semigroup::Pair:
      return intersect(w.list, w.filter);
    case Semigroup::MaxZd:
    case Semigroup::SumZd:
      break;
  }
  throw semantic_error("weight does not stand for a color list");
}

}  // namespace wgg
