#pragma once

// Quaternion algebras (a,b)_F = F<i,j | i^2 = a, j^2 = b, ji = -ij> over an
// exact (or binary64) scalar field. Hamilton's quaternions are (-1,-1).

#include <array>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnull/errors.hpp"
#include "qnull/scalar.hpp"

namespace qnull {

template <class S>
struct AlgebraSpec {
  S a;
  S b;

  AlgebraSpec(S a_, S b_) : a(std::move(a_)), b(std::move(b_)) {
    if (is_zero(a) || is_zero(b)) throw ZeroConstant("quaternion structure constants must be nonzero");
  }

  static std::shared_ptr<const AlgebraSpec> make(S a, S b) {
    return std::make_shared<const AlgebraSpec>(std::move(a), std::move(b));
  }
  static const std::shared_ptr<const AlgebraSpec>& hamilton() {
    static const auto h = make(S(-1), S(-1));
    return h;
  }

  friend bool operator==(const AlgebraSpec& x, const AlgebraSpec& y) { return x.a == y.a && x.b == y.b; }
};

template <class S>
using AlgebraPtr = std::shared_ptr<const AlgebraSpec<S>>;

/// Element x0 + x1 i + x2 j + x3 ij of a quaternion algebra.
template <class S>
class Quaternion {
 public:
  Quaternion() : x_{S(0), S(0), S(0), S(0)} {}
  Quaternion(S x0, S x1, S x2, S x3, AlgebraPtr<S> alg = nullptr)
      : x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}, alg_(std::move(alg)) {}
  static Quaternion scalar(S s, AlgebraPtr<S> alg = nullptr) {
    return Quaternion(std::move(s), S(0), S(0), S(0), std::move(alg));
  }
  static Quaternion unit_i(AlgebraPtr<S> alg = nullptr) { return Quaternion(S(0), S(1), S(0), S(0), std::move(alg)); }
  static Quaternion unit_j(AlgebraPtr<S> alg = nullptr) { return Quaternion(S(0), S(0), S(1), S(0), std::move(alg)); }
  static Quaternion unit_k(AlgebraPtr<S> alg = nullptr) { return Quaternion(S(0), S(0), S(0), S(1), std::move(alg)); }

  const S& operator[](int idx) const { return x_[idx]; }
  const std::array<S, 4>& coords() const { return x_; }
  const AlgebraPtr<S>& algebra_ptr() const { return alg_; }
  const AlgebraSpec<S>& algebra() const { return alg_ ? *alg_ : *AlgebraSpec<S>::hamilton(); }
  Quaternion with_algebra(AlgebraPtr<S> alg) const { return Quaternion(x_[0], x_[1], x_[2], x_[3], std::move(alg)); }

  bool is_zero() const { return qnull::is_zero(x_[0]) && is_scalar(); }
  bool is_scalar() const { return qnull::is_zero(x_[1]) && qnull::is_zero(x_[2]) && qnull::is_zero(x_[3]); }
  bool is_imaginary() const { return qnull::is_zero(x_[0]); }

  S real_part() const { return x_[0]; }
  Quaternion pure_part() const { return Quaternion(S(0), x_[1], x_[2], x_[3], alg_); }
  Quaternion conjugate() const { return Quaternion(x_[0], -x_[1], -x_[2], -x_[3], alg_); }

  /// n(q) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
  S norm() const {
    const auto& A = algebra();
    return x_[0] * x_[0] - A.a * x_[1] * x_[1] - A.b * x_[2] * x_[2] + A.a * A.b * x_[3] * x_[3];
  }

  Quaternion inverse() const {
    S n = norm();
    if (qnull::is_zero(n)) throw NonInvertible("quaternion has zero norm");
    S inv = qnull::inverse(n);
    Quaternion c = conjugate();
    return c.scaled(inv);
  }

  Quaternion scaled(const S& s) const {
    return Quaternion(x_[0] * s, x_[1] * s, x_[2] * s, x_[3] * s, alg_);
  }

  Quaternion& operator+=(const Quaternion& o) {
    for (int k = 0; k < 4; ++k) x_[k] += o.x_[k];
    if (!alg_) alg_ = o.alg_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    for (int k = 0; k < 4; ++k) x_[k] -= o.x_[k];
    if (!alg_) alg_ = o.alg_;
    return *this;
  }
  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator-(const Quaternion& p) { return Quaternion(-p.x_[0], -p.x_[1], -p.x_[2], -p.x_[3], p.alg_); }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    const AlgebraPtr<S>& alg = p.alg_ ? p.alg_ : q.alg_;
    const AlgebraSpec<S>& A = alg ? *alg : *AlgebraSpec<S>::hamilton();
    const auto& P = p.x_;
    const auto& Q = q.x_;
    S ab = A.a * A.b;
    return Quaternion(P[0] * Q[0] + A.a * P[1] * Q[1] + A.b * P[2] * Q[2] - ab * P[3] * Q[3],
                      P[0] * Q[1] + P[1] * Q[0] - A.b * P[2] * Q[3] + A.b * P[3] * Q[2],
                      P[0] * Q[2] + P[2] * Q[0] + A.a * P[1] * Q[3] - A.a * P[3] * Q[1],
                      P[0] * Q[3] + P[3] * Q[0] + P[1] * Q[2] - P[2] * Q[1], alg);
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  /// Exact coordinate equality (tolerance-based for binary64).
  friend bool operator==(const Quaternion& p, const Quaternion& q) { return (p - q).is_zero(); }

  std::string to_string() const;

 private:
  std::array<S, 4> x_;
  AlgebraPtr<S> alg_;
};

template <class S>
using QTuple = std::vector<Quaternion<S>>;

/// Text form "x0 + x1*I + x2*J + x3*K"; zero parts are omitted.
template <class S>
std::string Quaternion<S>::to_string() const {
  static const char* const kUnits[4] = {"", "I", "J", "K"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (qnull::is_zero(x_[k])) continue;
    std::string c = qnull::to_string(x_[k]);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += c;
    } else if (c == "1") {
      out += kUnits[k];
    } else {
      out += c + "*" + kUnits[k];
    }
  }
  return out.empty() ? "0" : out;
}

template <class S>
Quaternion<S> commutator(const Quaternion<S>& p, const Quaternion<S>& q) {
  return p * q - q * p;
}

template <class S>
bool commutes(const Quaternion<S>& p, const Quaternion<S>& q) {
  return commutator(p, q).is_zero();
}

/// True iff all coordinates pairwise commute.
template <class S>
bool is_central_tuple(std::span<const Quaternion<S>> v) {
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!commutes(v[a], v[b])) return false;
  return true;
}

template <class S>
bool is_central_tuple(const QTuple<S>& v) {
  return is_central_tuple(std::span<const Quaternion<S>>(v));
}

/// v^q = (q v_1 q^-1, ..., q v_n q^-1).
template <class S>
QTuple<S> conjugate_tuple(std::span<const Quaternion<S>> v, const Quaternion<S>& q) {
  Quaternion<S> qi = q.inverse();
  QTuple<S> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(q * x * qi);
  return out;
}

template <class S>
QTuple<S> conjugate_tuple(const QTuple<S>& v, const Quaternion<S>& q) {
  return conjugate_tuple(std::span<const Quaternion<S>>(v), q);
}

template <class S>
struct ImaginaryDirection {
  S real_part;
  Quaternion<S> im;
};

/// q = real_part + im with im purely imaginary (unnormalized).
template <class S>
ImaginaryDirection<S> imaginary_direction(const Quaternion<S>& q) {
  return {q.real_part(), q.pure_part()};
}

/// Polar form of the norm on pure quaternions; Euclidean dot product for Hamilton.
template <class S>
S pure_dot(const Quaternion<S>& u, const Quaternion<S>& w) {
  const auto& A = u.algebra();
  return -A.a * u[1] * w[1] - A.b * u[2] * w[2] + A.a * A.b * u[3] * w[3];
}

template <class S>
std::string tuple_to_string(const QTuple<S>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].to_string();
  }
  return out + ")";
}

}  // namespace qnull
