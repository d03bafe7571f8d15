#pragma once

// R = D[x1,...,xn]: polynomials with left quaternion coefficients in central
// commuting variables, evaluated by the substitution rule
//   f(a) = sum c_e a1^e1 ... an^en   (coefficient on the left).

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnull/errors.hpp"
#include "qnull/quat.hpp"
#include "qnull/rng.hpp"

namespace qnull {

using Monomial = std::vector<int>;

template <class S>
class QPoly {
 public:
  using TermMap = std::map<Monomial, Quaternion<S>>;

  QPoly() = default;
  explicit QPoly(int n, AlgebraPtr<S> alg = nullptr) : n_(n), alg_(std::move(alg)) {}

  static QPoly constant(int n, const Quaternion<S>& c) {
    QPoly p(n, c.algebra_ptr());
    p.add_term(Monomial(n, 0), c);
    return p;
  }
  static QPoly variable(int n, int index, AlgebraPtr<S> alg = nullptr) {
    Monomial e(n, 0);
    e.at(index) = 1;
    QPoly p(n, alg);
    p.add_term(e, Quaternion<S>::scalar(S(1), alg));
    return p;
  }
  static QPoly term(const Monomial& e, const Quaternion<S>& c) {
    QPoly p(static_cast<int>(e.size()), c.algebra_ptr());
    p.add_term(e, c);
    return p;
  }

  int arity() const { return n_; }
  const TermMap& terms() const { return terms_; }
  const AlgebraPtr<S>& algebra_ptr() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  /// True when every coefficient is a scalar (lies in the center).
  bool has_central_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_scalar(); });
  }

  void add_term(const Monomial& e, const Quaternion<S>& c) {
    if (static_cast<int>(e.size()) != n_) throw ArityMismatch("monomial length differs from arity");
    if (c.is_zero()) return;
    if (!alg_) alg_ = c.algebra_ptr();
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QPoly& operator+=(const QPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly p, const QPoly& q) { return p += q; }
  friend QPoly operator-(QPoly p, const QPoly& q) { return p -= q; }
  friend QPoly operator-(const QPoly& p) {
    QPoly r(p.n_, p.alg_);
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  /// (a X^e)(b X^f) = (ab) X^(e+f): variables are central.
  friend QPoly operator*(const QPoly& p, const QPoly& q) {
    p.check_arity(q);
    QPoly r(p.n_, p.alg_ ? p.alg_ : q.alg_);
    Monomial sum(p.n_);
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        for (int k = 0; k < p.n_; ++k) sum[k] = ep[k] + eq[k];
        r.add_term(sum, cp * cq);
      }
    }
    return r;
  }

  /// c * p for a constant quaternion c (multiplied on the left).
  QPoly scale_left(const Quaternion<S>& c) const {
    QPoly r(n_, alg_);
    for (const auto& [e, x] : terms_) r.add_term(e, c * x);
    return r;
  }

  friend bool operator==(const QPoly& p, const QPoly& q) {
    if (p.n_ != q.n_ || p.terms_.size() != q.terms_.size()) return false;
    auto it = q.terms_.begin();
    for (const auto& [e, c] : p.terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Substitution rule with per-coordinate power memoization.
  Quaternion<S> eval(std::span<const Quaternion<S>> v) const {
    if (static_cast<int>(v.size()) != n_) throw ArityMismatch("point length differs from arity");
    std::vector<std::vector<Quaternion<S>>> powers(n_);
    for (int k = 0; k < n_; ++k) {
      int d = degree_in(k);
      powers[k].reserve(std::max(d, 0) + 1);
      powers[k].push_back(Quaternion<S>::scalar(S(1), alg_));
      for (int e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * v[k]);
    }
    Quaternion<S> acc = Quaternion<S>::scalar(S(0), alg_);
    for (const auto& [e, c] : terms_) {
      Quaternion<S> t = c;
      for (int k = 0; k < n_; ++k)
        if (e[k] > 0) t = t * powers[k][e[k]];
      acc += t;
    }
    return acc;
  }
  Quaternion<S> eval(const QTuple<S>& v) const { return eval(std::span<const Quaternion<S>>(v)); }

  /// Replaces variable `var` by the central scalar `value`; arity is kept.
  QPoly specialize(int var, const S& value) const {
    QPoly r(n_, alg_);
    for (const auto& [e, c] : terms_) {
      S f(1);
      for (int k = 0; k < e[var]; ++k) f = f * value;
      Monomial m = e;
      m[var] = 0;
      r.add_term(m, c.scaled(f));
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check_arity(const QPoly& o) const {
    if (n_ != o.n_) throw ArityMismatch("polynomials of different arity");
  }

  int n_ = 0;
  TermMap terms_;
  AlgebraPtr<S> alg_;
};

/// Prints as sum of "(coeff)*x1^e1*x2^e2"; parseable by parse_poly.
template <class S>
std::string QPoly<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    for (int k = 0; k < n_; ++k) {
      if (e[k] == 0) continue;
      out += "*x" + std::to_string(k + 1);
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

template <class S>
Quaternion<S> eval(const QPoly<S>& p, const QTuple<S>& v) {
  return p.eval(v);
}

/// Deterministic random polynomial: n_terms draws of a monomial with total
/// degree <= max_deg and a coefficient from the pool. Colliding draws add up.
template <class S>
QPoly<S> random_poly(int n, int max_deg, int n_terms, std::span<const Quaternion<S>> coeff_pool,
                     std::uint64_t seed) {
  if (n < 0 || max_deg < 0 || n_terms < 0) throw PreconditionFailed("random_poly bounds must be non-negative");
  if (n_terms > 0 && coeff_pool.empty()) throw PreconditionFailed("random_poly needs a coefficient pool");
  Rng rng(seed);
  QPoly<S> p(n, coeff_pool.empty() ? nullptr : coeff_pool.front().algebra_ptr());
  for (int t = 0; t < n_terms; ++t) {
    Monomial e(n, 0);
    int budget = static_cast<int>(rng.range(0, max_deg));
    for (int s = 0; s < budget && n > 0; ++s) ++e[rng.below(n)];
    p.add_term(e, coeff_pool[rng.below(coeff_pool.size())]);
  }
  return p;
}

/// Small exact quaternions with coordinates in [-lim, lim], zero excluded.
template <class S>
std::vector<Quaternion<S>> small_quaternion_pool(int lim, AlgebraPtr<S> alg = nullptr) {
  std::vector<Quaternion<S>> pool;
  for (int a = -lim; a <= lim; ++a)
    for (int b = -lim; b <= lim; ++b)
      for (int c = -lim; c <= lim; ++c)
        for (int d = -lim; d <= lim; ++d) {
          if (a == 0 && b == 0 && c == 0 && d == 0) continue;
          pool.emplace_back(S(a), S(b), S(c), S(d), alg);
        }
  return pool;
}

}  // namespace qnull
