#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instances.hpp"
#include "qnull/msphere.hpp"
#include "qnull/verify.hpp"

using namespace qnull;
using Q = Quaternion<Rat>;
using T = QTuple<Rat>;
using P = QPoly<Rat>;

namespace {

const Q one = Q::scalar(Rat(1));
const Q i = Q::unit_i(), j = Q::unit_j(), k = Q::unit_k();

SphereBlock<Rat> block(long a, long lambda, long rho, const Q& w) { return {{Rat(a)}, {Rat(lambda)}, Rat(rho), w}; }

AffinePair<Rat> reduce(std::vector<int> e, std::vector<Rat> A, std::vector<Rat> l, Rat rho) {
  return block_monomial_reduce<Rat>(e, A, l, rho);
}

// Two distinct directions per block.
std::pair<T, T> distinct_directions(const MultiSphere<Rat>& ms, Rng& rng) {
  T first, second;
  for (const auto& b : ms.blocks) {
    Q w1 = sample_sphere_point_deep(b, rng, 2), w2 = w1;
    while (w2 == w1) w2 = sample_sphere_point_deep(b, rng, 2);
    first.push_back(w1);
    second.push_back(w2);
  }
  return {first, second};
}

}  // namespace

TEST_CASE("block monomial reduction") {
  auto a = reduce({2}, {Rat(0)}, {Rat(1)}, Rat(1));
  CHECK(a.c == Rat(-1));
  CHECK(a.d == Rat(0));
  // (1+2w)(3w) = -6 + 3w
  auto b = reduce({1, 1}, {Rat(1), Rat(0)}, {Rat(2), Rat(3)}, Rat(1));
  CHECK(b.c == Rat(-6));
  CHECK(b.d == Rat(3));
  auto c = reduce({1}, {Rat(1)}, {Rat(2)}, Rat(1));
  CHECK(c.c == Rat(1));
  CHECK(c.d == Rat(2));
}

TEST_CASE("reduction agrees with direct products on the sphere") {
  Rng rng(1);
  for (int n = 0; n < 300; ++n) {
    int dim = 1 + static_cast<int>(rng.below(3));
    std::vector<int> e;
    std::vector<Rat> A, l;
    for (int m = 0; m < dim; ++m) {
      e.push_back(static_cast<int>(rng.below(4)));
      A.push_back(inst::small_rat(rng));
      l.push_back(inst::small_rat(rng));
    }
    const auto& dirs = inst::square_norm_directions();
    Q w = inst::direction(dirs[rng.below(dirs.size())]);
    auto [c, d] = reduce(e, A, l, w.norm());
    Q direct = one;
    for (int m = 0; m < dim; ++m)
      for (int p = 0; p < e[m]; ++p) direct = direct * (Q::scalar(A[m]) + w.scaled(l[m]));
    CHECK(direct == Q::scalar(c) + w.scaled(d));
  }
}

TEST_CASE("restriction examples") {
  MultiSphere<Rat> ij{{}, {block(0, 1, 1, i), block(0, 1, 1, j)}};
  auto q = restrict_poly(P::term({1, 1}, one), ij);
  MultiAffine<Rat> y1y2(2);
  y1y2.add(0b11, one);
  CHECK(q == y1y2);

  // x1^2 x2 on blocks (1+2i) and (j): (-3 + 4 w1) w2.
  MultiSphere<Rat> mixed{{}, {block(1, 2, 1, i), block(0, 1, 1, j)}};
  auto r = restrict_poly(P::term({2, 1}, one), mixed);
  MultiAffine<Rat> expected(2);
  expected.add(0b11, Q::scalar(Rat(4)));
  expected.add(0b10, Q::scalar(Rat(-3)));
  CHECK(r == expected);
  CHECK(r.to_string() == "(-3)*y2 + (4)*y1*y2");

  MultiSphere<Rat> si{{}, {block(0, 1, 1, i)}};
  CHECK(restrict_poly(P::term({2}, one) + P::constant(1, one), si).is_zero());

  // The prefix value multiplies on the left.
  auto pre = restrict_poly(P::term({1, 1}, one), blow_up(T{i, j}));
  MultiAffine<Rat> iy(1);
  iy.add(0b1, i);
  CHECK(pre == iy);

  CHECK_THROWS_AS(restrict_poly(P::term({1}, one), ij), ArityMismatch);
}

TEST_CASE("vanishing examples") {
  P x2_plus_1 = P::term({2}, one) + P::constant(1, one);
  CHECK(vanishes_on(MultiSphere<Rat>{{}, {block(0, 1, 1, i)}}, x2_plus_1));
  auto four = MultiSphere<Rat>{{}, {block(0, 1, 4, i.scaled(Rat(2)))}};
  CHECK_FALSE(vanishes_on(four, x2_plus_1));
  CHECK(restrict_poly(x2_plus_1, four).terms().at(0) == Q::scalar(Rat(-3)));
  CHECK_FALSE(vanishes_on(blow_up(T{i, j}), P::variable(2, 1) - P::constant(2, j)));
}

TEST_CASE("restriction matches evaluation at sampled points") {
  Rng rng(2);
  auto pool = inst::coefficient_pool();
  for (int inst_no = 0; inst_no < 40; ++inst_no) {
    auto ms = blow_up(inst::commensurable_point(rng, 5));
    const int n = static_cast<int>(ms.dim());
    for (int s = 0; s < 5; ++s) {
      P p = random_poly<Rat>(n, 3, 5, pool, rng.next());
      auto q = restrict_poly(p, ms);
      CHECK(q.max_degree_per_variable() <= 1);
      for (int t = 0; t < 5; ++t) {
        T ws = sample_directions(ms, rng);
        CHECK(p.eval(ms.point(ws)) == q.evaluate(ws));
      }
    }
  }
}

TEST_CASE("restriction is left-linear") {
  Rng rng(3);
  auto pool = inst::coefficient_pool();
  for (int n = 0; n < 100; ++n) {
    auto ms = blow_up(inst::commensurable_point(rng, 5));
    const int ar = static_cast<int>(ms.dim());
    P p = random_poly<Rat>(ar, 3, 4, pool, rng.next()), q = random_poly<Rat>(ar, 3, 4, pool, rng.next());
    Q c = pool[rng.below(pool.size())];
    auto sum = restrict_poly(p, ms);
    sum += restrict_poly(q, ms);
    CHECK(restrict_poly(p + q, ms) == sum);
    CHECK(restrict_poly(p.scale_left(c), ms) == restrict_poly(p, ms).scale_left(c));
  }
}

TEST_CASE("zero restriction iff vanishing on a grid iff vanishing on samples") {
  Rng rng(4);
  auto pool = inst::coefficient_pool();
  int vanishing = 0;
  for (int n = 0; n < 150; ++n) {
    auto ms = blow_up(inst::commensurable_point(rng, 4));
    const int ar = static_cast<int>(ms.dim());
    P p = random_poly<Rat>(ar, 2, 3, pool, rng.next());
    // Every other instance is a cutting-ideal member, so both outcomes occur.
    if (n % 2 == 0) {
      auto gens = cutting_generators(ms);
      p = P(ar);
      for (int t = 0; t < 2; ++t)
        p += random_poly<Rat>(ar, 1, 2, pool, rng.next()) * gens[rng.below(gens.size())].poly;
    }
    bool by_restriction = vanishes_on(ms, p);
    auto [w1, w2] = distinct_directions(ms, rng);
    bool by_grid = true;
    for (const auto& pt : grid_points(ms, w1, w2)) by_grid = by_grid && p.eval(pt).is_zero();
    bool by_samples = true;
    for (int s = 0; s < 20; ++s) by_samples = by_samples && p.eval(sample_msphere_point(ms, rng)).is_zero();
    CHECK(by_restriction == by_grid);
    CHECK(by_restriction == by_samples);
    vanishing += by_restriction;
  }
  CHECK(vanishing > 20);

  MultiSphere<Rat> si{{}, {block(0, 1, 1, i)}};
  P x2_plus_1 = P::term({2}, one) + P::constant(1, one);
  for (const auto& pt : grid_points(si, T{i}, T{j})) CHECK(x2_plus_1.eval(pt).is_zero());
}

TEST_CASE("cutting generator examples") {
  auto a = cutting_generators(blow_up(T{one + i.scaled(Rat(2)), j}));
  REQUIRE(a.size() == 2);
  CHECK(a[0].kind == GeneratorKind::Prefix);
  CHECK(a[0].poly == P::variable(2, 0) - P::constant(2, one + i.scaled(Rat(2))));
  CHECK(a[1].kind == GeneratorKind::Norm);
  CHECK(a[1].poly == P::term({0, 2}, one) + P::constant(2, one));

  auto b = cutting_generators(blow_up(T{i, j, one, j}));
  int pre = 0, pair = 0, norm = 0;
  for (const auto& g : b) {
    pre += g.kind == GeneratorKind::Prefix;
    pair += g.kind == GeneratorKind::Pairwise;
    norm += g.kind == GeneratorKind::Norm;
    CHECK(g.poly.eval(T{i, j, one, j}).is_zero());
  }
  CHECK(pre == 1);
  CHECK(pair == 3);
  CHECK(norm == 3);
  // The real coordinate inside the block gets (x3 - 1)^2.
  P x3m1 = P::variable(4, 2) - P::constant(4, one);
  CHECK(b.back().poly == P::term({0, 0, 0, 2}, one) + P::constant(4, one));
  CHECK(b[b.size() - 2].poly == x3m1 * x3m1);

  auto c = cutting_generators(blow_up(T{one, i, one + i}));
  CHECK(c.size() == 3);
  for (const auto& g : c) CHECK(g.kind == GeneratorKind::Prefix);

  CHECK_THROWS_AS(cutting_generators(MultiSphere<Rat>{T{i, j}, {}}), NotABlowUp);
}

TEST_CASE("non-prefix generators have central coefficients") {
  Rng rng(5);
  for (int n = 0; n < 100; ++n)
    for (const auto& g : cutting_generators(blow_up(inst::commensurable_point(rng))))
      if (g.kind != GeneratorKind::Prefix) CHECK(g.poly.has_central_coefficients());
}

TEST_CASE("cut harness") {
  auto ms = blow_up(T{one + i.scaled(Rat(2)), j});
  auto gens = cutting_generators(ms);
  auto rep = verify_cut(ms, gens, 1);
  CHECK(rep.pass());
  // (1+2i, 2j) is off the sphere: x2^2 + 1 = -3 there.
  CHECK(gens[1].poly.eval(T{one + i.scaled(Rat(2)), j.scaled(Rat(2))}) == Q::scalar(Rat(-3)));

  Rng rng(6);
  for (int n = 0; n < 10; ++n) {
    auto m = blow_up(inst::commensurable_point(rng, 5));
    CHECK(verify_cut(m, cutting_generators(m), rng.next(), HarnessSizes{10, 10, 10, 5, 1}).pass());
  }
}
