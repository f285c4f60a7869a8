#include <doctest.h>

#include "helpers.hpp"

using namespace wgg;
using namespace wgg::testing;

namespace {

QPolynomial u(const Weight& w) { return QPolynomial::uvar(w); }

QPolynomial phi_star_expected_max() {
  QPolynomial p = u(Weight::max_zd(V({2, 0}))) * u(Weight::max_zd(V({-1, 3})));
  p = p + u(Weight::max_zd(V({2, 3}))) * 2;
  p = p + u(Weight::max_zd(V({4, 3})));
  p = p + QPolynomial::vz(0, 1, 3);
  p = p + QPolynomial::vz(1, 1, 1);
  return p;
}

QPolynomial phi_star_expected_sum() {
  QPolynomial p = u(Weight::sum_zd(V({2, 0}))) * u(Weight::sum_zd(V({-1, 3})));
  p = p + u(Weight::sum_zd(V({1, 3}))) * 3;
  p = p + QPolynomial::vz(0, 1, 3);
  p = p + QPolynomial::vz(1, 1, 1);
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(pow(Rational(-1), 5) == Rational(-1));
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), semantic_error);
}

TEST_CASE("the running example polynomial, max-plus weights") {
  QPolynomial q = q_total_subset(phi_star());
  CHECK(q == phi_star_expected_max());
  CHECK(to_human(q) ==
        "u[(-1,3)]*u[(2,0)] + 2*u[(2,3)] + u[(4,3)] + 3*z + v*z");
}

TEST_CASE("the running example polynomial, additive weights") {
  // The lawful additive semigroup carries the trivial action, so every
  // single-edge contraction sums the plain weights.
  CHECK(q_total_subset(phi_star(Semigroup::SumZd)) == phi_star_expected_sum());
}

TEST_CASE("sums of the switched weight table") {
  // Summing the top-switched weights of each one-edge set instead of maxing
  // them gives the companion display (1,3), (3,3), (2,5).
  WeightedGainGraph wg = phi_star();
  std::vector<Vec> expected = {V({1, 3}), V({3, 3}), V({2, 5})};
  for (int e = 0; e < 3; ++e) {
    SwitchingFunction eta = top_switching(wg.graph, edge_bit(e));
    Vec sum = (wg.weights[0].vec + eta[0]) + (wg.weights[1].vec + eta[1]);
    CHECK(sum == expected[static_cast<size_t>(e)]);
  }
}

TEST_CASE("edgeless graphs multiply their weight variables") {
  WeightedGainGraph wg(GainGraph(2, 2, {}), Semigroup::MaxZd,
                       {Weight::max_zd(V({1, 0})), Weight::max_zd(V({0, 5}))});
  CHECK(q_total_subset(wg) ==
        u(Weight::max_zd(V({1, 0}))) * u(Weight::max_zd(V({0, 5}))));
}

TEST_CASE("a loose edge contributes a factor of v+1") {
  WeightedGainGraph wg(GainGraph(1, 1, {Edge::loose()}), Semigroup::MaxZd,
                       {Weight::max_zd(V({4}))});
  QPolynomial expected = u(Weight::max_zd(V({4}))) * (QPolynomial::one() + QPolynomial::vz(1, 0));
  CHECK(q_total_subset(wg) == expected);
}

TEST_CASE("deletion-contraction reproduces the subset expansion") {
  CHECK(q_total_delcon(phi_star()) == q_total_subset(phi_star()));
  CHECK(q_total_delcon(phi_star(Semigroup::SumZd)) == q_total_subset(phi_star(Semigroup::SumZd)));
  WeightedGainGraph empty(GainGraph(1, 0, {}), Semigroup::MaxZd, {});
  CHECK(q_total_delcon(empty) == QPolynomial::one());
}

TEST_CASE("disjoint unions multiply") {
  WeightedGainGraph a = phi_star();
  WeightedGainGraph b(GainGraph(2, 1, {Edge::loop(0, V({1, 1}))}), Semigroup::MaxZd,
                      {Weight::max_zd(V({0, 0}))});
  CHECK(q_total_subset(disjoint_union(a, b)) == q_total_subset(a) * q_total_subset(b));
}

TEST_CASE("gain-free weighted graph polynomial") {
  GainGraph k2(1, 2, {Edge::link(0, 1, V({0}))});
  WeightedGainGraph wg(k2, Semigroup::SumZd, {Weight::sum_zd(V({3})), Weight::sum_zd(V({5}))});
  QPolynomial expected =
      u(Weight::sum_zd(V({3}))) * u(Weight::sum_zd(V({5}))) + u(Weight::sum_zd(V({8})));
  CHECK(q_graph(wg) == expected);

  WeightedGainGraph loop(GainGraph(1, 1, {Edge::loop(0, V({0}))}), Semigroup::SumZd,
                         {Weight::sum_zd(V({2}))});
  CHECK(q_graph(loop) ==
        u(Weight::sum_zd(V({2}))) * (QPolynomial::one() + QPolynomial::vz(1, 0)));

  WeightedGainGraph with_half(GainGraph(1, 1, {Edge::half(0)}), Semigroup::SumZd,
                              {Weight::sum_zd(V({0}))});
  CHECK_THROWS_AS(q_graph(with_half), semantic_error);
}

TEST_CASE("evaluation substitutes exactly") {
  QPolynomial q = q_total_subset(phi_star());
  std::map<std::string, Rational> ones;
  for (const auto& [key, w] : q.udict) ones[key] = Rational(1);
  CHECK(evaluate(q, ones, Rational(1), Rational(1)) == Rational(8));  // 2^{|E|}
  CHECK(evaluate(QPolynomial::one(), {}, Rational(7, 3), Rational(-2)) == Rational(1));
  CHECK_THROWS_AS(evaluate(q, {}, Rational(1), Rational(1)), semantic_error);
}

TEST_CASE("shifting v expands binomially") {
  // p = v^2 + 3v; p(v+1) = v^2 + 5v + 4.
  QPolynomial p = QPolynomial::vz(2, 0, 1) + QPolynomial::vz(1, 0, 3);
  QPolynomial shifted = shift_v(p, 1);
  QPolynomial expected =
      QPolynomial::vz(2, 0, 1) + QPolynomial::vz(1, 0, 5) + QPolynomial::vz(0, 0, 4);
  CHECK(shifted == expected);
}

TEST_CASE("machine format is stable") {
  // K2 with a zero-gain edge: both subsets are balanced and rank-exact, so
  // no v or z appears; terms come in canonical display order.
  QPolynomial q = q_total_subset(k2_lists());
  CHECK(to_machine(q) ==
        "{\"terms\":[{\"u\":[\"finite-list:{(0),(1),(2)}\"],\"v\":0,\"z\":0,\"coef\":1},"
        "{\"u\":[\"finite-list:{(0),(1),(2)}\",\"finite-list:{(0),(1),(2)}\"],\"v\":0,\"z\":0,"
        "\"coef\":1}]}");
}
