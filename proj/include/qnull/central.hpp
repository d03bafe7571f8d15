#pragma once

// Central structure of points in H^n: the decomposition v = A + lambda*u of a
// central tuple, the unique central presentation, multispheres and blow-ups.
//
// Sphere directions are kept unnormalized: a block is
//   { A + lambda*w : w pure, n(w) = rho }
// so everything stays exact over Q. The unit-direction form A + B*s is
// recovered with B = lambda*sqrt(rho).

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnull/errors.hpp"
#include "qnull/quat.hpp"
#include "qnull/rng.hpp"

namespace qnull {

// Scaling of a pure direction to its canonical representative.
// Rat: the primitive integer vector with the same orientation.
// double: the unit vector.
inline Rat direction_scale(const Quaternion<Rat>& pure) {
  mpz_class l = 1, g = 0;
  for (int k = 1; k < 4; ++k) {
    mpz_class d = pure[k].den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  for (int k = 1; k < 4; ++k) {
    mpz_class n = pure[k].num() * (l / pure[k].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return Rat(mpq_class(g, l));
}

inline double direction_scale(const Quaternion<double>& pure) { return std::sqrt(pure.norm()); }

inline std::optional<Rat> exact_sqrt(const Rat& x) { return x.sqrt_exact(); }
inline std::optional<double> exact_sqrt(double x) {
  if (x < 0) return std::nullopt;
  return std::sqrt(x);
}

template <class S>
struct CentralDecomposition {
  std::vector<S> A;
  std::vector<S> lambda;
  S rho;
  Quaternion<S> u;
};

/// Writes a central, not all-scalar tuple as A + lambda*u with a canonical
/// pure direction u (derived from the first non-scalar coordinate), rho = n(u).
template <class S>
CentralDecomposition<S> decompose_central(std::span<const Quaternion<S>> v) {
  if (!is_central_tuple(v)) throw NotCentral("tuple coordinates do not commute");
  const Quaternion<S>* first = nullptr;
  for (const auto& q : v)
    if (!q.is_scalar()) {
      first = &q;
      break;
    }
  if (!first) throw AllReal("every coordinate is a scalar");

  Quaternion<S> pure = first->pure_part();
  Quaternion<S> u = pure.scaled(inverse(direction_scale(pure)));
  int pivot = 1;
  while (is_zero(u[pivot])) ++pivot;

  CentralDecomposition<S> out{{}, {}, u.norm(), u};
  for (const auto& q : v) {
    Quaternion<S> im = q.pure_part();
    S lam = im[pivot] * inverse(u[pivot]);
    if (!(im == u.scaled(lam))) throw NotCentral("coordinate not proportional to the block direction");
    out.A.push_back(q.real_part());
    out.lambda.push_back(lam);
  }
  return out;
}

template <class S>
CentralDecomposition<S> decompose_central(const QTuple<S>& v) {
  return decompose_central(std::span<const Quaternion<S>>(v));
}

/// { A + lambda*w : w pure, n(w) = rho }, with witness direction n(witness) = rho.
template <class S>
struct SphereBlock {
  std::vector<S> A;
  std::vector<S> lambda;
  S rho;
  Quaternion<S> witness;

  std::size_t dim() const { return A.size(); }

  static SphereBlock from_central(std::span<const Quaternion<S>> v) {
    auto d = decompose_central(v);
    return SphereBlock{std::move(d.A), std::move(d.lambda), std::move(d.rho), std::move(d.u)};
  }

  /// The block tuple A + lambda*w.
  QTuple<S> point(const Quaternion<S>& w) const {
    QTuple<S> out;
    out.reserve(dim());
    for (std::size_t m = 0; m < dim(); ++m) out.push_back(Quaternion<S>::scalar(A[m]) + w.scaled(lambda[m]));
    return out;
  }
  QTuple<S> reference() const { return point(witness); }
};

template <class S>
struct CentralPresentation {
  QTuple<S> v0;
  std::vector<QTuple<S>> blocks;
  std::vector<SphereBlock<S>> spheres;

  std::size_t r() const { return blocks.size(); }
  QTuple<S> flatten() const {
    QTuple<S> out = v0;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  /// 0-based index of the last coordinate of v0 and of blocks 1..r-1.
  std::vector<std::size_t> boundaries() const {
    std::vector<std::size_t> out;
    std::size_t pos = v0.size();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      out.push_back(pos - 1);
      pos += blocks[i].size();
    }
    return out;
  }
};

/// Greedy maximal central blocks left to right, then trailing scalars of each
/// block are moved to the front of the next block.
template <class S>
CentralPresentation<S> central_presentation(const QTuple<S>& v) {
  std::vector<QTuple<S>> parts;
  std::size_t start = 0;
  while (start < v.size()) {
    QTuple<S> block{v[start]};
    std::size_t end = start + 1;
    for (; end < v.size(); ++end) {
      bool ok = true;
      for (const auto& q : block)
        if (!commutes(q, v[end])) {
          ok = false;
          break;
        }
      if (!ok) break;
      block.push_back(v[end]);
    }
    parts.push_back(std::move(block));
    start = end;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    while (parts[i].back().is_scalar()) {
      parts[i + 1].insert(parts[i + 1].begin(), parts[i].back());
      parts[i].pop_back();
    }
  }

  CentralPresentation<S> out;
  if (parts.empty()) return out;
  out.v0 = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.spheres.push_back(SphereBlock<S>::from_central(parts[i]));
    out.blocks.push_back(std::move(parts[i]));
  }
  return out;
}

/// {v0} x prod_i { A_i + lambda_i*w : n(w) = rho_i }.
template <class S>
struct MultiSphere {
  QTuple<S> v0;
  std::vector<SphereBlock<S>> blocks;

  std::size_t r() const { return blocks.size(); }
  std::size_t dim() const {
    std::size_t n = v0.size();
    for (const auto& b : blocks) n += b.dim();
    return n;
  }

  /// Point with block i taken at direction ws[i].
  QTuple<S> point(std::span<const Quaternion<S>> ws) const {
    QTuple<S> out = v0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto b = blocks[i].point(ws[i]);
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  }
  QTuple<S> point(const QTuple<S>& ws) const { return point(std::span<const Quaternion<S>>(ws)); }
};

template <class S>
MultiSphere<S> blow_up(const QTuple<S>& v) {
  auto cp = central_presentation(v);
  return MultiSphere<S>{std::move(cp.v0), std::move(cp.spheres)};
}

/// Solves w_m = A_m + lambda_m*x for one pure x per block and checks n(x) = rho.
template <class S>
bool msphere_contains(const MultiSphere<S>& ms, const QTuple<S>& w) {
  if (w.size() != ms.dim()) return false;
  std::size_t pos = 0;
  for (; pos < ms.v0.size(); ++pos)
    if (!(w[pos] == ms.v0[pos])) return false;
  for (const auto& b : ms.blocks) {
    std::optional<Quaternion<S>> x;
    for (std::size_t m = 0; m < b.dim(); ++m, ++pos) {
      Quaternion<S> shifted = w[pos] - Quaternion<S>::scalar(b.A[m]);
      if (is_zero(b.lambda[m])) {
        if (!shifted.is_zero()) return false;
        continue;
      }
      Quaternion<S> cand = shifted.scaled(inverse(b.lambda[m]));
      if (!cand.is_imaginary()) return false;
      if (x && !(*x == cand)) return false;
      if (!x) x = cand;
    }
    if (!x || !is_zero(x->norm() - b.rho)) return false;
  }
  return true;
}

/// Random small nonzero pure direction with integer coordinates in [-3, 3].
template <class S>
Quaternion<S> random_pure_direction(Rng& rng) {
  while (true) {
    long a = rng.range(-3, 3), b = rng.range(-3, 3), c = rng.range(-3, 3);
    if (a || b || c) return Quaternion<S>(S(0), S(a), S(b), S(c));
  }
}

/// Reflects the block witness across the plane normal to a random rational
/// direction d: w = u - 2 (<u,d>/<d,d>) d, so n(w) = rho exactly.
template <class S>
Quaternion<S> sample_sphere_point(const SphereBlock<S>& block, Rng& rng) {
  Quaternion<S> d = random_pure_direction<S>(rng);
  const Quaternion<S>& u = block.witness;
  S coef = S(2) * pure_dot(u, d) * inverse(pure_dot(d, d));
  return u - d.scaled(coef);
}

template <class S>
Quaternion<S> sample_sphere_point(const SphereBlock<S>& block, std::uint64_t seed) {
  Rng rng(seed);
  return sample_sphere_point(block, rng);
}

/// Chained reflections give a richer spread than a single chord.
template <class S>
Quaternion<S> sample_sphere_point_deep(const SphereBlock<S>& block, Rng& rng, int reflections) {
  SphereBlock<S> cur = block;
  for (int k = 0; k < reflections; ++k) cur.witness = sample_sphere_point(cur, rng);
  return cur.witness;
}

/// Per-block sphere directions of a random point of the multisphere.
template <class S>
QTuple<S> sample_directions(const MultiSphere<S>& ms, Rng& rng) {
  QTuple<S> ws;
  for (const auto& b : ms.blocks) ws.push_back(sample_sphere_point_deep(b, rng, 1 + static_cast<int>(rng.below(2))));
  return ws;
}

template <class S>
QTuple<S> sample_msphere_point(const MultiSphere<S>& ms, Rng& rng) {
  return ms.point(sample_directions(ms, rng));
}

}  // namespace qnull
