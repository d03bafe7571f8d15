#pragma once

// Finitely generated left ideals as sampling objects, the conjugation step
// v -> (v_1..v_i, v_{i+1}^{q_i}, ..., v_n^{q_i}), and the 2^r-point central grid
// inside a blow-up.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qnull/central.hpp"
#include "qnull/errors.hpp"
#include "qnull/msphere.hpp"
#include "qnull/poly.hpp"
#include "qnull/rng.hpp"

namespace qnull {

/// { sum p_i g_i : p_i in R }. Membership is never decided, only sampled.
template <class S>
struct LeftIdeal {
  std::vector<QPoly<S>> generators;
  int n = 0;

  LeftIdeal() = default;
  LeftIdeal(std::vector<QPoly<S>> gens, int arity) : generators(std::move(gens)), n(arity) {
    for (const auto& g : generators)
      if (g.arity() != n) throw ArityMismatch("ideal generator arity");
  }

  /// sum_i multipliers[i] * generators[i].
  QPoly<S> combine(const std::vector<QPoly<S>>& multipliers) const {
    if (multipliers.size() != generators.size()) throw ArityMismatch("one multiplier per generator required");
    QPoly<S> out(n);
    for (std::size_t i = 0; i < generators.size(); ++i) out += multipliers[i] * generators[i];
    return out;
  }
};

template <class S>
LeftIdeal<S> cutting_ideal(const MultiSphere<S>& ms) {
  return LeftIdeal<S>(generator_polys(cutting_generators(ms)), static_cast<int>(ms.dim()));
}

/// Random member sum p_i g_i with deg p_i <= max_deg and at most two terms per
/// multiplier, coefficients drawn from `pool`.
template <class S>
QPoly<S> sample_member(const LeftIdeal<S>& ideal, int max_deg, std::uint64_t seed,
                       std::span<const Quaternion<S>> pool) {
  if (ideal.generators.empty()) throw EmptyIdeal("ideal has no generators");
  Rng rng(seed);
  std::vector<QPoly<S>> mult;
  mult.reserve(ideal.generators.size());
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    int terms = static_cast<int>(rng.below(3));
    mult.push_back(random_poly<S>(ideal.n, max_deg, terms, pool, rng.next()));
  }
  return ideal.combine(mult);
}

template <class S>
QPoly<S> sample_member(const LeftIdeal<S>& ideal, int max_deg, std::uint64_t seed) {
  static const auto pool = small_quaternion_pool<S>(1);
  return sample_member(ideal, max_deg, seed, std::span<const Quaternion<S>>(pool));
}

/// Conjugates coordinates i+1..n by q_i (i is 1-based).
template <class S>
QTuple<S> conj_transform(const QTuple<S>& v, std::size_t i) {
  if (i < 1 || i + 1 > v.size()) throw PreconditionFailed("pivot index must satisfy 1 <= i <= n-1");
  const auto& pivot = v[i - 1];
  if (pivot.is_zero()) throw ZeroPivot("pivot coordinate is zero");
  QTuple<S> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
  auto tail = conjugate_tuple(std::span<const Quaternion<S>>(v).subspan(i), pivot);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

template <class S>
struct QGrid {
  std::vector<QTuple<S>> points;
  CentralPresentation<S> source;
  /// Pure part of the last prefix coordinate (zero when r = 0).
  Quaternion<S> direction;
};

/// The 2^r points (v0, A_1 +/- lambda_1 mu_1 d, ..., A_r +/- lambda_r mu_r d)
/// where d is the pure part of the last coordinate of v0 and
/// mu_i^2 n(d) = rho_i. Bit i of the enumeration index selects the minus sign.
template <class S>
QGrid<S> q_grid(const QTuple<S>& v) {
  QGrid<S> grid{{}, central_presentation(v), Quaternion<S>()};
  const auto& cp = grid.source;
  if (cp.r() == 0) {
    grid.points.push_back(v);
    return grid;
  }
  const Quaternion<S>& last = cp.v0.back();
  if (last.is_scalar()) throw PreconditionFailed("last prefix coordinate must be non-scalar when r >= 1");
  grid.direction = last.pure_part();
  S dn = grid.direction.norm();

  std::vector<Quaternion<S>> steps;
  for (std::size_t i = 0; i < cp.r(); ++i) {
    const auto& b = cp.spheres[i];
    bool any = false;
    for (const auto& l : b.lambda) any = any || !is_zero(l);
    if (!any) throw ZeroBlock("block " + std::to_string(i + 1) + " has lambda = 0");
    auto mu = exact_sqrt(b.rho * inverse(dn));
    if (!mu) {
      throw IncommensurableRadii("rho_" + std::to_string(i + 1) + " / n(d) = " + to_string(b.rho * inverse(dn)) +
                                 " is not a rational square");
    }
    steps.push_back(grid.direction.scaled(*mu));
  }

  const std::size_t r = cp.r();
  MultiSphere<S> ms{cp.v0, cp.spheres};
  for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
    QTuple<S> ws;
    for (std::size_t i = 0; i < r; ++i) ws.push_back((mask & (1U << i)) ? -steps[i] : steps[i]);
    grid.points.push_back(ms.point(ws));
  }
  return grid;
}

/// The common zero set of the ideal's generators at w (raw generators only).
template <class S>
bool generators_vanish_at(const LeftIdeal<S>& ideal, const QTuple<S>& w) {
  for (const auto& g : ideal.generators)
    if (!g.eval(w).is_zero()) return false;
  return true;
}

}  // namespace qnull
