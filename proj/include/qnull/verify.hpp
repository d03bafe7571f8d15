#pragma once

// Executable verification harnesses. Each returns a Report; none throws on a
// failed check. Vanishing of ideal members is established by sampling: the
// substitution rule is not multiplicative, so generator vanishing alone does
// not imply member vanishing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnull/central.hpp"
#include "qnull/ideal.hpp"
#include "qnull/kernels.hpp"
#include "qnull/msphere.hpp"
#include "qnull/report.hpp"
#include "qnull/rng.hpp"

namespace qnull {

struct HarnessSizes {
  int members = 50;
  int points = 50;
  int off_points = 50;
  int replay_points = 10;
  int member_degree = 1;
};

namespace detail {

template <class S>
std::vector<QTuple<S>> sample_points(const MultiSphere<S>& ms, int count, Rng& rng) {
  std::vector<QTuple<S>> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) pts.push_back(sample_msphere_point(ms, rng));
  return pts;
}

template <class S>
std::vector<QPoly<S>> sample_members(const LeftIdeal<S>& ideal, int count, int degree, Rng& rng) {
  std::vector<QPoly<S>> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(sample_member(ideal, degree, rng.next()));
  return out;
}

template <class S>
Quaternion<S> random_quaternion(Rng& rng, long lim) {
  return Quaternion<S>(S(rng.range(-lim, lim)), S(rng.range(-lim, lim)), S(rng.range(-lim, lim)),
                       S(rng.range(-lim, lim)));
}

/// A point off the multisphere: one coordinate of a sample nudged by a small quaternion.
template <class S>
QTuple<S> perturbed_point(const MultiSphere<S>& ms, Rng& rng) {
  while (true) {
    QTuple<S> w = sample_msphere_point(ms, rng);
    Quaternion<S> delta = random_quaternion<S>(rng, 2);
    if (delta.is_zero()) continue;
    w[rng.below(w.size())] += delta;
    if (!msphere_contains(ms, w)) return w;
  }
}

template <class S>
std::string pair_witness(const std::vector<QPoly<S>>&, const std::vector<QTuple<S>>& pts,
                         const std::pair<std::size_t, std::size_t>& at) {
  return "poly " + std::to_string(at.first) + " at " + tuple_to_string(pts[at.second]);
}

}  // namespace detail

/// (a) sampled points of S annihilate every generator and random left
/// combinations; (b) perturbed points off S are rejected by msphere_contains
/// and violate a raw generator; (c) for each prefix generator x_j - q_j, p*g
/// vanishes on (C_q)^(j-1) x {q} x H^(n-j).
template <class S>
Report verify_cut(const MultiSphere<S>& ms, const std::vector<Generator<S>>& gens, std::uint64_t seed,
                  const HarnessSizes& sizes = {}) {
  Report rep{"verify cut", {}};
  Rng rng(seed);
  const int n = static_cast<int>(ms.dim());
  LeftIdeal<S> ideal(generator_polys(gens), n);

  rep.add("real_generators_central",
          [&] {
            for (const auto& g : gens)
              if (g.kind != GeneratorKind::Prefix && !g.poly.has_central_coefficients()) return false;
            return true;
          }(),
          "pairwise and norm generators have scalar coefficients");

  auto pts = detail::sample_points(ms, sizes.points, rng);
  if (auto bad = first_nonvanishing(ideal.generators, pts)) {
    rep.add("generators_vanish_on_S", false, "", detail::pair_witness(ideal.generators, pts, *bad));
  } else {
    rep.add("generators_vanish_on_S", true, std::to_string(ideal.generators.size()) + " generators x " +
                                                std::to_string(pts.size()) + " points");
  }

  if (ideal.generators.empty()) {
    rep.add("members_vanish_on_S", true, "empty generator system");
  } else {
    auto members = detail::sample_members(ideal, sizes.members, sizes.member_degree, rng);
    auto bad = first_nonvanishing(members, pts);
    rep.add("members_vanish_on_S", !bad.has_value(),
            std::to_string(members.size()) + " members x " + std::to_string(pts.size()) + " points",
            bad ? std::optional<std::string>(detail::pair_witness(members, pts, *bad)) : std::nullopt);
  }

  if (ms.r() > 0 || !ms.v0.empty()) {
    bool all_rejected = true;
    std::optional<std::string> witness;
    for (int k = 0; k < sizes.off_points; ++k) {
      auto w = detail::perturbed_point(ms, rng);
      if (generators_vanish_at(ideal, w)) {
        all_rejected = false;
        witness = tuple_to_string(w);
        break;
      }
    }
    rep.add("off_points_rejected", all_rejected, std::to_string(sizes.off_points) + " perturbed points", witness);
  }

  static const auto pool = small_quaternion_pool<S>(1);
  for (const auto& g : gens) {
    if (g.kind != GeneratorKind::Prefix) continue;
    const Quaternion<S>& q = ms.v0[g.index];
    Quaternion<S> dir = q.pure_part();
    std::vector<QTuple<S>> slice_pts;
    for (int k = 0; k < 10; ++k) {
      QTuple<S> w;
      for (std::size_t m = 0; m < ms.dim(); ++m) {
        if (m < g.index) {
          w.push_back(q.is_scalar() ? detail::random_quaternion<S>(rng, 2)
                                    : Quaternion<S>::scalar(S(rng.range(-2, 2))) + dir.scaled(S(rng.range(-2, 2))));
        } else if (m == g.index) {
          w.push_back(q);
        } else {
          w.push_back(detail::random_quaternion<S>(rng, 2));
        }
      }
      slice_pts.push_back(std::move(w));
    }
    std::vector<QPoly<S>> multiples;
    for (int k = 0; k < 10; ++k) {
      auto p = random_poly<S>(n, 2, 1 + static_cast<int>(rng.below(3)), std::span<const Quaternion<S>>(pool), rng.next());
      multiples.push_back(p * g.poly);
    }
    auto bad = first_nonvanishing(multiples, slice_pts);
    rep.add("prefix_multiples_vanish[x" + std::to_string(g.index + 1) + "]", !bad.has_value(),
            "p*(x_j - q_j) on (C_q)^(j-1) x {q} x H^(n-j)",
            bad ? std::optional<std::string>(detail::pair_witness(multiples, slice_pts, *bad)) : std::nullopt);
  }
  return rep;
}

/// Builds I = cutting ideal of B(v) (so v lies in V(I)), samples members and
/// points of B(v), and replays the conjugation step at block boundaries.
template <class S>
Report verify_blowup_theorem(const QTuple<S>& v, std::uint64_t seed, const HarnessSizes& sizes = {}) {
  Report rep{"verify blowup", {}};
  Rng rng(seed);
  auto cp = central_presentation(v);
  MultiSphere<S> ms{cp.v0, cp.spheres};
  auto ideal = cutting_ideal(ms);

  rep.add("v_in_V(generators)", generators_vanish_at(ideal, v), "r = " + std::to_string(cp.r()));
  rep.add("v_in_B(v)", msphere_contains(ms, v));

  std::vector<QTuple<S>> pts{v};
  for (int k = 1; k < sizes.points; ++k) pts.push_back(sample_msphere_point(ms, rng));
  auto members = detail::sample_members(ideal, sizes.members, sizes.member_degree, rng);
  {
    auto bad = first_nonvanishing(members, pts);
    rep.add("members_vanish_on_B(v)", !bad.has_value(),
            std::to_string(members.size()) + " members x " + std::to_string(pts.size()) + " points",
            bad ? std::optional<std::string>(detail::pair_witness(members, pts, *bad)) : std::nullopt);
  }

  std::vector<QTuple<S>> replay;
  bool replay_inside = true;
  for (std::size_t b : cp.boundaries()) {
    for (int k = 0; k < sizes.replay_points && k < static_cast<int>(pts.size()); ++k) {
      auto w = conj_transform(pts[k], b + 1);
      replay_inside = replay_inside && msphere_contains(ms, w);
      replay.push_back(std::move(w));
    }
  }
  rep.add("replayed_points_in_B(v)", replay_inside, std::to_string(replay.size()) + " conj_transform points");
  {
    auto bad = first_nonvanishing(members, replay);
    rep.add("members_vanish_on_replayed_points", !bad.has_value(), "",
            bad ? std::optional<std::string>(detail::pair_witness(members, replay, *bad)) : std::nullopt);
  }

  if (cp.r() > 0 || v.size() > 0) {
    auto off = detail::perturbed_point(ms, rng);
    rep.add("off_point_violates_generator", !generators_vanish_at(ideal, off), "", tuple_to_string(off));
  }
  return rep;
}

/// Grid pipeline: f vanishing on the 2^r central grid forces f to vanish on
/// B(v), hence f(v) = 0; contrapositively f(v) != 0 yields a grid witness.
template <class S>
Report verify_central_zeros(const QPoly<S>& f, const QTuple<S>& v, std::uint64_t seed) {
  (void)seed;  // the grid pipeline is fully deterministic
  Report rep{"verify central-zeros", {}};
  auto grid = q_grid(v);
  const auto& cp = grid.source;
  MultiSphere<S> ms{cp.v0, cp.spheres};

  rep.add("grid_size", grid.points.size() == (std::size_t{1} << cp.r()),
          std::to_string(grid.points.size()) + " points, r = " + std::to_string(cp.r()));
  bool central = true, inside = true, distinct = true;
  for (std::size_t a = 0; a < grid.points.size(); ++a) {
    central = central && is_central_tuple(grid.points[a]);
    inside = inside && msphere_contains(ms, grid.points[a]);
    for (std::size_t b = a + 1; b < grid.points.size(); ++b) {
      bool same = true;
      for (std::size_t m = 0; m < v.size(); ++m) same = same && grid.points[a][m] == grid.points[b][m];
      distinct = distinct && !same;
    }
  }
  rep.add("grid_central", central);
  rep.add("grid_in_B(v)", inside);
  rep.add("grid_distinct", distinct);

  std::optional<std::size_t> witness;
  for (std::size_t a = 0; a < grid.points.size() && !witness; ++a)
    if (!f.eval(grid.points[a]).is_zero()) witness = a;
  const bool f_at_v_zero = f.eval(v).is_zero();

  if (!witness) {
    rep.add("hypothesis", true, "f vanishes on the central grid");
    rep.add("restriction_zero", vanishes_on(ms, f));
    rep.add("f(v)=0", f_at_v_zero);
  } else {
    rep.add("hypothesis", true, "not central-vanishing: f(q) != 0 at grid point",
            tuple_to_string(grid.points[*witness]));
  }
  if (!f_at_v_zero) rep.add("grid_witness_for_f(v)!=0", witness.has_value());
  return rep;
}

/// p with scalar coefficients supported on a window of variables where v is
/// central, p(v) = 0: every sampled left multiple m*p vanishes at v.
template <class S>
Report verify_real_multiple_lemma(const QPoly<S>& p, const QTuple<S>& v, std::uint64_t seed, int samples = 100) {
  if (static_cast<int>(v.size()) != p.arity()) throw ArityMismatch("point arity");
  if (!p.has_central_coefficients()) throw PreconditionFailed("p must have scalar coefficients");
  int lo = p.arity(), hi = -1;
  for (const auto& [e, c] : p.terms())
    for (int k = 0; k < p.arity(); ++k)
      if (e[k] > 0) {
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
  if (hi >= lo) {
    QTuple<S> window(v.begin() + lo, v.begin() + hi + 1);
    if (!is_central_tuple(window)) throw PreconditionFailed("variable window of p is not central at v");
  }
  if (!p.eval(v).is_zero()) throw PreconditionFailed("p(v) != 0");

  Report rep{"verify real-multiple", {}};
  Rng rng(seed);
  static const auto pool = small_quaternion_pool<S>(1);
  std::vector<QPoly<S>> multiples;
  for (int k = 0; k < samples; ++k) {
    auto m = random_poly<S>(p.arity(), 2, 1 + static_cast<int>(rng.below(4)), std::span<const Quaternion<S>>(pool),
                            rng.next());
    multiples.push_back(m * p);
  }
  auto bad = first_nonvanishing(multiples, std::vector<QTuple<S>>{v});
  rep.add("left_multiples_vanish", !bad.has_value(), std::to_string(samples) + " multiples",
          bad ? std::optional<std::string>(multiples[bad->first].to_string()) : std::nullopt);
  return rep;
}

}  // namespace qnull
