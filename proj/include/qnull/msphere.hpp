#pragma once

// Polynomials restricted to multispheres. On a block {A + lambda*w : n(w) = rho}
// every pure w satisfies w^2 = -rho, so
//   (a + b w)(c + d w) = (ac - bd*rho) + (ad + bc) w
// and each block monomial collapses to c + d w with scalar c, d. A polynomial
// therefore restricts to a multi-affine polynomial in the block directions.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnull/central.hpp"
#include "qnull/errors.hpp"
#include "qnull/poly.hpp"

namespace qnull {

/// sum_T c_T * prod_{i in T, ascending} y_i, T a subset of {0..r-1} as a bitmask.
template <class S>
class MultiAffine {
 public:
  explicit MultiAffine(int r = 0) : r_(r) {}

  int r() const { return r_; }
  const std::map<std::uint32_t, Quaternion<S>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::uint32_t subset, const Quaternion<S>& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(subset, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient on the left, then the w factors in ascending index.
  Quaternion<S> evaluate(std::span<const Quaternion<S>> ws) const {
    if (static_cast<int>(ws.size()) != r_) throw ArityMismatch("multi-affine evaluation arity");
    Quaternion<S> acc;
    for (const auto& [mask, c] : terms_) {
      Quaternion<S> t = c;
      for (int i = 0; i < r_; ++i)
        if (mask & (1U << i)) t = t * ws[i];
      acc += t;
    }
    return acc;
  }
  Quaternion<S> evaluate(const QTuple<S>& ws) const { return evaluate(std::span<const Quaternion<S>>(ws)); }

  MultiAffine& operator+=(const MultiAffine& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  MultiAffine scale_left(const Quaternion<S>& c) const {
    MultiAffine out(r_);
    for (const auto& [m, x] : terms_) out.add(m, c * x);
    return out;
  }

  friend bool operator==(const MultiAffine& a, const MultiAffine& b) {
    if (a.r_ != b.r_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  /// Every variable has degree 0 or 1 by construction.
  int max_degree_per_variable() const { return terms_.empty() ? -1 : 1; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (int i = 0; i < r_; ++i)
        if (m & (1U << i)) out += "*y" + std::to_string(i + 1);
    }
    return out;
  }

 private:
  int r_;
  std::map<std::uint32_t, Quaternion<S>> terms_;
};

template <class S>
struct AffinePair {
  S c;
  S d;
};

/// Reduces prod_m (A_m + lambda_m w)^exps_m to c + d w for every pure w with n(w) = rho.
template <class S>
AffinePair<S> block_monomial_reduce(std::span<const int> exps, std::span<const S> A, std::span<const S> lambda,
                                    const S& rho) {
  S c(1), d(0);
  for (std::size_t m = 0; m < exps.size(); ++m) {
    for (int e = 0; e < exps[m]; ++e) {
      S nc = c * A[m] - d * lambda[m] * rho;
      S nd = c * lambda[m] + d * A[m];
      c = std::move(nc);
      d = std::move(nd);
    }
  }
  return {c, d};
}

/// q(w_1..w_r) with p(v0, A_1 + lambda_1 w_1, ...) = q(w_1, ..., w_r).
template <class S>
MultiAffine<S> restrict_poly(const QPoly<S>& p, const MultiSphere<S>& ms) {
  if (static_cast<std::size_t>(p.arity()) != ms.dim()) throw ArityMismatch("polynomial arity differs from multisphere dimension");
  const std::size_t k0 = ms.v0.size();
  const int r = static_cast<int>(ms.r());
  if (r > 31) throw Unsupported("more than 31 sphere blocks");

  // Powers of the fixed prefix coordinates.
  std::vector<std::vector<Quaternion<S>>> prefix_pow(k0);
  for (std::size_t k = 0; k < k0; ++k) {
    int d = std::max(p.degree_in(static_cast<int>(k)), 0);
    prefix_pow[k].push_back(Quaternion<S>::scalar(S(1)));
    for (int e = 1; e <= d; ++e) prefix_pow[k].push_back(prefix_pow[k].back() * ms.v0[k]);
  }

  MultiAffine<S> out(r);
  std::vector<AffinePair<S>> pairs(r, AffinePair<S>{S(1), S(0)});
  for (const auto& [e, coeff] : p.terms()) {
    Quaternion<S> lead = coeff;
    for (std::size_t k = 0; k < k0; ++k)
      if (e[k] > 0) lead = lead * prefix_pow[k][e[k]];

    std::size_t pos = k0;
    for (int i = 0; i < r; ++i) {
      const auto& b = ms.blocks[i];
      pairs[i] = block_monomial_reduce<S>(std::span<const int>(e).subspan(pos, b.dim()), b.A, b.lambda, b.rho);
      pos += b.dim();
    }
    // Expand prod_i (c_i + d_i y_i); the scalars commute past the coefficient.
    std::vector<std::pair<std::uint32_t, S>> expansion{{0U, S(1)}};
    for (int i = 0; i < r; ++i) {
      std::vector<std::pair<std::uint32_t, S>> next;
      next.reserve(expansion.size() * 2);
      for (const auto& [mask, val] : expansion) {
        if (!is_zero(pairs[i].c)) next.emplace_back(mask, val * pairs[i].c);
        if (!is_zero(pairs[i].d)) next.emplace_back(mask | (1U << i), val * pairs[i].d);
      }
      expansion = std::move(next);
    }
    for (const auto& [mask, val] : expansion) out.add(mask, lead.scaled(val));
  }
  return out;
}

/// Exact decision through the restriction.
template <class S>
bool vanishes_on(const MultiSphere<S>& ms, const QPoly<S>& p) {
  return restrict_poly(p, ms).is_zero();
}

/// {v0} x prod_i {A_i + lambda_i w_i1, A_i + lambda_i w_i2}, enumerated by bitmask
/// (bit i set selects the second direction of block i).
template <class S>
std::vector<QTuple<S>> grid_points(const MultiSphere<S>& ms, const QTuple<S>& first, const QTuple<S>& second) {
  const std::size_t r = ms.r();
  std::vector<QTuple<S>> out;
  for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
    QTuple<S> ws;
    for (std::size_t i = 0; i < r; ++i) ws.push_back((mask & (1U << i)) ? second[i] : first[i]);
    out.push_back(ms.point(ws));
  }
  return out;
}

enum class GeneratorKind { Prefix, Pairwise, Norm };

inline const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Prefix: return "prefix";
    case GeneratorKind::Pairwise: return "pairwise";
    case GeneratorKind::Norm: return "norm";
  }
  return "?";
}

template <class S>
struct Generator {
  QPoly<S> poly;
  GeneratorKind kind;
  /// Prefix: 0-based coordinate index; otherwise the block index.
  std::size_t index;
};

/// Generator system whose left ideal cuts out the blow-up:
///   x_{0,j} - q_j,
///   (x_{i,j} - A_{i,j}) lambda_{i,l} - (x_{i,l} - A_{i,l}) lambda_{i,j}   (j < l),
///   (x_{i,j} - A_{i,j})^2 + lambda_{i,j}^2 rho_i.
/// Pairwise generators that are identically zero are dropped.
template <class S>
std::vector<Generator<S>> cutting_generators(const MultiSphere<S>& ms) {
  if (!is_central_tuple(ms.v0)) throw NotABlowUp("multisphere prefix is not central");
  const int n = static_cast<int>(ms.dim());
  std::vector<Generator<S>> out;
  auto x = [n](std::size_t idx) { return QPoly<S>::variable(n, static_cast<int>(idx)); };
  auto constant = [n](const Quaternion<S>& q) { return QPoly<S>::constant(n, q); };

  for (std::size_t j = 0; j < ms.v0.size(); ++j) out.push_back({x(j) - constant(ms.v0[j]), GeneratorKind::Prefix, j});

  std::size_t pos = ms.v0.size();
  for (std::size_t i = 0; i < ms.blocks.size(); ++i) {
    const auto& b = ms.blocks[i];
    std::vector<QPoly<S>> shifted;
    for (std::size_t m = 0; m < b.dim(); ++m) shifted.push_back(x(pos + m) - constant(Quaternion<S>::scalar(b.A[m])));
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t l = j + 1; l < b.dim(); ++l) {
        QPoly<S> g = shifted[j].scale_left(Quaternion<S>::scalar(b.lambda[l])) -
                     shifted[l].scale_left(Quaternion<S>::scalar(b.lambda[j]));
        if (!g.is_zero()) out.push_back({std::move(g), GeneratorKind::Pairwise, i});
      }
    for (std::size_t j = 0; j < b.dim(); ++j)
      out.push_back({shifted[j] * shifted[j] + constant(Quaternion<S>::scalar(b.lambda[j] * b.lambda[j] * b.rho)),
                     GeneratorKind::Norm, i});
    pos += b.dim();
  }
  return out;
}

template <class S>
std::vector<QPoly<S>> generator_polys(const std::vector<Generator<S>>& gens) {
  std::vector<QPoly<S>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.poly);
  return out;
}

}  // namespace qnull
