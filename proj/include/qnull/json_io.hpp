#pragma once

// JSON encodings. Scalars are emitted as exact strings ("3/4" in rat mode).
//   QPoly:        {n, terms:[{exps:[...], coeff:{x0,x1,x2,x3}}]}
//   MultiSphere:  {v0:[...], blocks:[{A:[...], lambda:[...], rho, witness:[...]}]}

#include <json.hpp>

#include <string>
#include <vector>

#include "qnull/central.hpp"
#include "qnull/msphere.hpp"
#include "qnull/parse.hpp"
#include "qnull/poly.hpp"

namespace qnull {

using Json = nlohmann::ordered_json;

template <class S>
Json quaternion_json(const Quaternion<S>& q) {
  return Json{{"x0", to_string(q[0])}, {"x1", to_string(q[1])}, {"x2", to_string(q[2])}, {"x3", to_string(q[3])}};
}

template <class S>
Json tuple_json(const QTuple<S>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(q.to_string());
  return arr;
}

template <class S>
Json scalars_json(const std::vector<S>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

template <class S>
Json poly_json(const QPoly<S>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exps", e}, {"coeff", quaternion_json(c)}});
  return Json{{"n", p.arity()}, {"terms", terms}};
}

template <class S>
S scalar_from_json(const Json& j) {
  QPoly<S> p = parse_poly<S>(j.get<std::string>(), 0);
  return p.is_zero() ? S(0) : p.terms().begin()->second.real_part();
}

template <class S>
QPoly<S> poly_from_json(const Json& j, const AlgebraPtr<S>& alg = nullptr) {
  const int n = j.at("n").get<int>();
  QPoly<S> p(n, alg);
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    Quaternion<S> q(scalar_from_json<S>(c.at("x0")), scalar_from_json<S>(c.at("x1")), scalar_from_json<S>(c.at("x2")),
                    scalar_from_json<S>(c.at("x3")), alg);
    p.add_term(t.at("exps").get<Monomial>(), q);
  }
  return p;
}

template <class S>
Json msphere_json(const MultiSphere<S>& ms) {
  Json blocks = Json::array();
  for (const auto& b : ms.blocks) {
    blocks.push_back(Json{{"A", scalars_json(b.A)},
                          {"lambda", scalars_json(b.lambda)},
                          {"rho", to_string(b.rho)},
                          {"witness", scalars_json(std::vector<S>(b.witness.coords().begin(), b.witness.coords().end()))}});
  }
  return Json{{"v0", tuple_json(ms.v0)}, {"blocks", blocks}};
}

template <class S>
Json presentation_json(const CentralPresentation<S>& cp) {
  Json blocks = Json::array();
  for (const auto& b : cp.blocks) blocks.push_back(tuple_json(b));
  return Json{{"r", cp.r()}, {"v0", tuple_json(cp.v0)}, {"blocks", blocks}};
}

template <class S>
Json multiaffine_json(const MultiAffine<S>& q) {
  Json terms = Json::array();
  for (const auto& [mask, c] : q.terms()) {
    std::vector<int> subset;
    for (int i = 0; i < q.r(); ++i)
      if (mask & (1U << i)) subset.push_back(i + 1);
    terms.push_back(Json{{"vars", subset}, {"coeff", quaternion_json(c)}});
  }
  return Json{{"r", q.r()}, {"terms", terms}};
}

template <class S>
Json generators_json(const std::vector<Generator<S>>& gens) {
  Json arr = Json::array();
  for (const auto& g : gens) {
    Json p = poly_json(g.poly);
    p["kind"] = generator_kind_name(g.kind);
    p["text"] = g.poly.to_string();
    arr.push_back(std::move(p));
  }
  return arr;
}

}  // namespace qnull
