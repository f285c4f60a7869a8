#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wgg {

// All counts and coordinates are 64-bit with explicit overflow detection;
// anything past desk scale throws semantic_error instead of wrapping.
using Int = long long;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// A point of the integer lattice Z^d with the componentwise partial order.
// operator<=> is the lexicographic container order, not the lattice order;
// use leq() for the latter.
struct Vec {
  std::vector<Int> c;

  Vec() = default;
  explicit Vec(std::vector<Int> coords) : c(std::move(coords)) {}
  static Vec zero(int d) { return Vec(std::vector<Int>(static_cast<size_t>(d), 0)); }
  static Vec constant(int d, Int value) {
    return Vec(std::vector<Int>(static_cast<size_t>(d), value));
  }

  int dim() const { return static_cast<int>(c.size()); }
  Int operator[](int k) const { return c[static_cast<size_t>(k)]; }
  Int& operator[](int k) { return c[static_cast<size_t>(k)]; }

  auto operator<=>(const Vec&) const = default;
};

void require_same_dim(const Vec& a, const Vec& b);

Vec join(const Vec& a, const Vec& b);  // componentwise max
Vec meet(const Vec& a, const Vec& b);  // componentwise min
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec positive_part(const Vec& a);   // componentwise max(0, .)
Vec negative_part(const Vec& a);   // componentwise -min(0, .)
bool leq(const Vec& a, const Vec& b);  // componentwise <=

std::string to_string(const Vec& a);

// Integer interval [lo, hi]; empty when some coordinate has lo_k > hi_k.
struct Box {
  Vec lo, hi;

  Box() = default;
  Box(Vec l, Vec h);

  bool empty() const;
  bool contains(const Vec& x) const;
  Int count() const;  // number of lattice points, 0 when empty

  // Visits every lattice point of the box; f(point) must return void.
  template <typename F>
  void for_each(F&& f) const {
    if (empty()) return;
    Vec x = lo;
    while (true) {
      f(x);
      int k = 0;
      while (k < x.dim()) {
        if (x[k] < hi[k]) {
          ++x[k];
          break;
        }
        x[k] = lo[k];
        ++k;
      }
      if (k == x.dim()) break;
    }
  }
};

// Principal dual order ideal <apex>* = { x : x >= apex }.
struct Cone {
  Vec apex;

  Cone() = default;
  explicit Cone(Vec a) : apex(std::move(a)) {}
  bool contains(const Vec& x) const { return leq(apex, x); }
};

}  // namespace wgg
