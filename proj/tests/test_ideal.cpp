#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instances.hpp"
#include "qnull/ideal.hpp"
#include "qnull/verify.hpp"

using namespace qnull;
using Q = Quaternion<Rat>;
using T = QTuple<Rat>;
using P = QPoly<Rat>;

namespace {

const Q one = Q::scalar(Rat(1));
const Q i = Q::unit_i(), j = Q::unit_j(), k = Q::unit_k();

bool contains(const std::vector<T>& pts, const T& v) {
  for (const auto& p : pts)
    if (p == v) return true;
  return false;
}

}  // namespace

TEST_CASE("ideal members") {
  P g = P::term({0, 2}, one) + P::constant(2, one);
  LeftIdeal<Rat> ideal({g}, 2);
  CHECK(ideal.combine({P(2)}).is_zero());
  CHECK(ideal.combine({P::constant(2, one)}) == g);
  CHECK_THROWS_AS(ideal.combine({}), ArityMismatch);
  CHECK_THROWS_AS(sample_member(LeftIdeal<Rat>({}, 2), 1, 1), EmptyIdeal);
  CHECK_THROWS_AS(LeftIdeal<Rat>({P(3)}, 2), ArityMismatch);
  CHECK(sample_member(ideal, 2, 9) == sample_member(ideal, 2, 9));

  // x2^2 + 1 has real coefficients, so every member vanishes at (1+2i, i).
  const T v{one + i.scaled(Rat(2)), i};
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(sample_member(ideal, 2, seed).eval(v).is_zero());
}

TEST_CASE("conjugation step") {
  CHECK(conj_transform(T{i, j}, 1) == T{i, -j});
  CHECK(conj_transform(T{Q::scalar(Rat(2)), j}, 1) == T{Q::scalar(Rat(2)), j});
  CHECK(conj_transform(T{i, one + j}, 1) == T{i, one - j});
  CHECK(conj_transform(T{i, j, k}, 2) == T{i, j, -k});
  CHECK_THROWS_AS(conj_transform(T{Q(), j}, 1), ZeroPivot);
  CHECK_THROWS_AS(conj_transform(T{i, j}, 2), PreconditionFailed);
  CHECK_THROWS_AS(conj_transform(T{i, j}, 0), PreconditionFailed);
}

TEST_CASE("conjugation at a block boundary stays in the blow-up") {
  Rng rng(1);
  for (int n = 0; n < 200; ++n) {
    T v = inst::commensurable_point(rng);
    auto cp = central_presentation(v);
    auto ms = blow_up(v);
    for (std::size_t b : cp.boundaries()) CHECK(msphere_contains(ms, conj_transform(v, b + 1)));
  }
}

TEST_CASE("central grid examples") {
  auto g = q_grid(T{i, j});
  REQUIRE(g.points.size() == 2);
  CHECK(g.points[0] == T{i, i});
  CHECK(g.points[1] == T{i, -i});
  CHECK(g.direction == i);

  auto h = q_grid(T{i, one, j});
  REQUIRE(h.points.size() == 2);
  CHECK(contains(h.points, T{i, one, i}));
  CHECK(contains(h.points, T{i, one, -i}));

  // Central input: the grid is {v}.
  CHECK(q_grid(T{one, i}).points == std::vector<T>{T{one, i}});

  // Radius 3 against a unit prefix direction.
  Q root3 = Q(Rat(0), Rat(1), Rat(1), Rat(1));
  CHECK_THROWS_AS(q_grid(T{i, root3}), IncommensurableRadii);

  // Prefix direction (3,4,0) has norm 25; a unit block then has mu = 1/5.
  Q d(Rat(0), Rat(3), Rat(4), Rat(0));
  auto s = q_grid(T{d, k});
  CHECK(s.points[0] == T{d, d.scaled(Rat(1, 5))});
}

TEST_CASE("grid points are central, distinct and inside the blow-up") {
  Rng rng(2);
  for (int n = 0; n < 200; ++n) {
    T v = inst::commensurable_point(rng);
    auto g = q_grid(v);
    auto ms = blow_up(v);
    CHECK(g.points.size() == (std::size_t{1} << g.source.r()));
    for (std::size_t a = 0; a < g.points.size(); ++a) {
      CHECK(is_central_tuple(g.points[a]));
      CHECK(msphere_contains(ms, g.points[a]));
      for (std::size_t b = a + 1; b < g.points.size(); ++b) CHECK_FALSE(g.points[a] == g.points[b]);
    }
  }
}

TEST_CASE("blow-up harness") {
  auto rep = verify_blowup_theorem(T{i, j}, 1);
  CHECK(rep.pass());
  CHECK(verify_blowup_theorem(T{one, i, one + i}, 2).pass());
  CHECK(verify_blowup_theorem(T{i, j, one, j, k}, 3).pass());

  auto ideal = cutting_ideal(blow_up(T{i, j}));
  CHECK(generators_vanish_at(ideal, T{i, -j}));
  CHECK_FALSE(generators_vanish_at(ideal, T{j, j}));
  CHECK_FALSE(ideal.generators[0].eval(T{j, j}).is_zero());

  Rng rng(4);
  for (int n = 0; n < 10; ++n)
    CHECK(verify_blowup_theorem(inst::commensurable_point(rng, 5), rng.next(), HarnessSizes{10, 10, 5, 5, 1}).pass());
}

TEST_CASE("central-zeros pipeline examples") {
  const T v{i, j};
  P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
  auto a = verify_central_zeros(x2 * x2 + P::constant(2, one), v, 1);
  CHECK(a.pass());

  auto b = verify_central_zeros(x2 - P::constant(2, j), v, 1);
  CHECK(b.pass());
  bool reported = false;
  for (const auto& c : b.checks) reported = reported || c.detail.find("not central-vanishing") != std::string::npos;
  CHECK(reported);

  CHECK(verify_central_zeros(x1 - P::constant(2, i), v, 1).pass());
}

TEST_CASE("central-zeros pipeline on random instances") {
  Rng rng(5);
  auto pool = inst::coefficient_pool();
  for (int n = 0; n < 30; ++n) {
    T v = inst::commensurable_point(rng, 5);
    const int ar = static_cast<int>(v.size());
    auto ideal = cutting_ideal(blow_up(v));
    P member = sample_member(ideal, 1, rng.next());
    CHECK(verify_central_zeros(member, v, 0).pass());
    P f = random_poly<Rat>(ar, 2, 3, pool, rng.next());
    if (!f.eval(v).is_zero()) CHECK(verify_central_zeros(f, v, 0).pass());
  }
}

TEST_CASE("left multiples of real-coefficient polynomials") {
  // x2^2 + 1 at (1+2i, i): window {x2} is trivially central.
  P g = P::term({0, 2}, one) + P::constant(2, one);
  CHECK(verify_real_multiple_lemma(g, T{one + i.scaled(Rat(2)), i}, 1).pass());

  // x1 - x2 at (j, j, i): the window {x1, x2} is central.
  P diff = P::variable(3, 0) - P::variable(3, 1);
  CHECK(verify_real_multiple_lemma(diff, T{j, j, i}, 2).pass());

  CHECK_THROWS_AS(verify_real_multiple_lemma(P::variable(2, 1) - P::constant(2, j), T{i, j}, 1),
                  PreconditionFailed);
  CHECK_THROWS_AS(verify_real_multiple_lemma(diff, T{i, j, k}, 1), PreconditionFailed);
  CHECK_THROWS_AS(verify_real_multiple_lemma(g, T{i, k.scaled(Rat(2))}, 1), PreconditionFailed);
  CHECK_THROWS_AS(verify_real_multiple_lemma(g, T{i}, 1), ArityMismatch);
}
