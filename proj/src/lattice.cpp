#include "lattice.hpp"

#include <algorithm>

namespace wgg {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw semantic_error("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw semantic_error("integer overflow in multiplication");
  return r;
}

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw semantic_error("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
}

Vec join(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

Vec meet(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = std::min(a[k], b[k]);
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = checked_add(a[k], b[k]);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = checked_add(a[k], -b[k]);
  return r;
}

Vec operator-(const Vec& a) {
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = -a[k];
  return r;
}

Vec positive_part(const Vec& a) {
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = std::max<Int>(0, a[k]);
  return r;
}

Vec negative_part(const Vec& a) {
  Vec r = a;
  for (int k = 0; k < r.dim(); ++k) r[k] = -std::min<Int>(0, a[k]);
  return r;
}

bool leq(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  for (int k = 0; k < a.dim(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::string to_string(const Vec& a) {
  std::string s = "(";
  for (int k = 0; k < a.dim(); ++k) {
    if (k) s += ",";
    s += std::to_string(a[k]);
  }
  s += ")";
  return s;
}

Box::Box(Vec l, Vec h) : lo(std::move(l)), hi(std::move(h)) { require_same_dim(lo, hi); }

bool Box::empty() const {
  for (int k = 0; k < lo.dim(); ++k)
    if (lo[k] > hi[k]) return true;
  return false;
}

bool Box::contains(const Vec& x) const { return leq(lo, x) && leq(x, hi); }

Int Box::count() const {
  Int total = 1;
  for (int k = 0; k < lo.dim(); ++k) {
    Int side = std::max<Int>(0, checked_add(checked_add(hi[k], -lo[k]), 1));
    total = checked_mul(total, side);
  }
  return total;
}

}  // namespace wgg
