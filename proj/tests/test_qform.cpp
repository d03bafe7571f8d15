#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnull/qform.hpp"
#include "qnull/rng.hpp"

using namespace qnull;

namespace {

const RatFunc al = RatFunc::var(kVarAl);
const RatFunc be = RatFunc::var(kVarBe);
const RatFunc t = RatFunc::var(kVarT);
const RatFunc one(1);

DiagForm form(std::initializer_list<RatFunc> xs) { return DiagForm(std::vector<RatFunc>(xs)); }

DiagForm random_monomial_form(Rng& rng, int max_dim, int vars) {
  std::vector<RatFunc> entries;
  int dim = 1 + static_cast<int>(rng.below(max_dim));
  for (int m = 0; m < dim; ++m) {
    SignedMonomial s{rng.coin() ? 1 : -1, {}};
    for (int v = 0; v < vars; ++v) s.exps[v] = static_cast<int>(rng.below(3));
    entries.push_back(s.to_ratfunc());
  }
  return DiagForm(entries);
}

}  // namespace

TEST_CASE("norm forms") {
  CHECK(norm_form(RatFunc(-1), RatFunc(-1)) == form({one, one, one, one}));
  CHECK(norm_form(-t, al + be * t) == form({one, t, -(al + be * t), -t * (al + be * t)}));
  CHECK(norm_form(al, be) == form({one, -al, -be, al * be}));
  CHECK(norm_form(al, be).to_string() == "<1,-al,-be,al*be>");
}

TEST_CASE("Albert forms") {
  DiagForm phi = albert_form({-t, al + be * t}, {al, be});
  CHECK(phi == form({-t, al + be * t, t * (al + be * t), -al, -be, al * be}));
  // Last entry is cd = (-1)(-1) = 1.
  CHECK(albert_form({RatFunc(-1), RatFunc(-1)}, {RatFunc(-1), RatFunc(-1)}) ==
        form({RatFunc(-1), RatFunc(-1), RatFunc(-1), one, one, one}));
  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    auto a = random_monomial_form(rng, 4, 3).entries();
    CHECK(albert_form({a[0], a[0]}, {a.back(), a.back()}).dim() == 6);
  }
}

TEST_CASE("residue forms") {
  DiagForm phi = albert_form({-t, al + be * t}, {al, be});
  auto r = springer_residues(phi, LinearPrime::from((al + be * t).num()));
  CHECK(r.units == parse_monomial_form("<al*be,-al,-be,al*be>"));
  CHECK(r.pi_part == parse_monomial_form("<1,-al*be>"));

  auto s = springer_residues(form({one, t}), LinearPrime::from(t.num()));
  CHECK(s.units == form({one}));
  CHECK(s.pi_part == form({one}));

  auto u = springer_residues(form({t * t}), LinearPrime::from(t.num()));
  CHECK(u.units == form({one}));
  CHECK(u.pi_part.dim() == 0);
}

TEST_CASE("residue forms keep the dimension") {
  Rng rng(2);
  LinearPrime pi = LinearPrime::from((al + be * t).num());
  for (int n = 0; n < 100; ++n) {
    DiagForm q = random_monomial_form(rng, 5, 3);
    auto r = springer_residues(q, pi);
    CHECK(r.units.dim() + r.pi_part.dim() == q.dim());
  }
}

TEST_CASE("form text and square classes") {
  CHECK(parse_monomial_form("<1,-al*be,t>") == form({one, -al * be, t}));
  CHECK(same_square_class(RatFunc(4) * al * al * be, be));
  CHECK_FALSE(same_square_class(RatFunc(2) * be, be));
  CHECK_FALSE(same_square_class(-be, be));
  CHECK(is_subform_by_square_class(form({one, t}), norm_form(-t, al)));
  CHECK_FALSE(is_subform_by_square_class(form({one, one}), norm_form(-t, al)));
  CHECK(form({RatFunc(9) * al * al * al}).normalized() == form({al}));
}

TEST_CASE("certifier examples") {
  auto a = anisotropic_cert(form({one, one}));
  CHECK(a.verdict == Verdict::Anisotropic);
  CHECK(a.root.rule == "definite");

  auto b = anisotropic_cert(form({one, RatFunc(-1)}));
  REQUIRE(b.verdict == Verdict::Isotropic);
  REQUIRE(b.witness.size() == 2);
  CHECK(form({one, RatFunc(-1)}).evaluate(b.witness).is_zero());

  auto c = anisotropic_cert(form({one, one, -al, -be}));
  CHECK(c.verdict == Verdict::Anisotropic);
  CHECK(c.root.rule == "split");
  CHECK(c.root.split_var == kVarAl);
  REQUIRE(c.root.children.size() == 2);
  CHECK(c.root.children[0].form.size() == 3);
  CHECK(c.root.children[0].split_var == kVarBe);
  CHECK(c.replay());

  CHECK(anisotropic_cert(parse_monomial_form("<1,-al*be>")).verdict == Verdict::Anisotropic);
  CHECK(anisotropic_cert(parse_monomial_form("<al*be,-al,-be,al*be>")).verdict == Verdict::Anisotropic);
  // <1,-al,-be,al*be> is the norm form of (al,be): anisotropic.
  CHECK(anisotropic_cert(norm_form(al, be)).verdict == Verdict::Anisotropic);
  CHECK(anisotropic_cert(form({al, -al})).verdict == Verdict::Isotropic);
}

TEST_CASE("certificates replay and isotropy witnesses evaluate to zero") {
  Rng rng(3);
  for (int n = 0; n < 300; ++n) {
    DiagForm q = random_monomial_form(rng, 4, 2);
    auto c = anisotropic_cert(q);
    CHECK(c.replay());
    if (c.verdict == Verdict::Isotropic) {
      REQUIRE(c.witness.size() == q.dim());
      CHECK(q.evaluate(c.witness).is_zero());
      bool nonzero = false;
      for (const auto& x : c.witness) nonzero = nonzero || !x.is_zero();
      CHECK(nonzero);
    }
  }
}

TEST_CASE("verdict is invariant under scaling by a monomial") {
  Rng rng(4);
  for (int n = 0; n < 200; ++n) {
    DiagForm q = random_monomial_form(rng, 4, 2);
    SignedMonomial s{rng.coin() ? 1 : -1, {static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)), 0}};
    auto v1 = anisotropic_cert(q).verdict, v2 = anisotropic_cert(q.scaled(s.to_ratfunc())).verdict;
    if (v1 != Verdict::Undecided && v2 != Verdict::Undecided) CHECK(v1 == v2);
  }
}

TEST_CASE("counterexample chain") {
  Report rep = verify_counterexample(7, 200);
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 9);
  CHECK(rep.to_json()["pass"] == true);
}
