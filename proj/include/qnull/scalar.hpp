#pragma once

// Exact scalar fields: arbitrary-precision rationals (Rat), the rational
// function field Q(al, be, t) (RatFunc), signed monomials for square-class
// bookkeeping, and a binary64 adapter for approximate work.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnull/errors.hpp"

namespace qnull {

// ---------------------------------------------------------------------------
// Rat
// ---------------------------------------------------------------------------

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rat(const mpz_class& v) : v_(v) {}

  /// Parses "p", "-p" or "p/q".
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  Rat inverse() const;
  /// Exact square root if this is the square of a rational.
  std::optional<Rat> sqrt_exact() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline std::string to_string(const Rat& x) { return x.to_string(); }
inline Rat inverse(const Rat& x) { return x.inverse(); }

// ---------------------------------------------------------------------------
// binary64 adapter
// ---------------------------------------------------------------------------

/// Comparison tolerance for the floating-point fallback.
inline constexpr double kF64Tolerance = 1e-9;

inline bool is_zero(double x) { return std::abs(x) < kF64Tolerance; }
std::string to_string(double x);
inline double inverse(double x) {
  if (is_zero(x)) throw DivisionByZero("inverse of (near-)zero double");
  return 1.0 / x;
}

// ---------------------------------------------------------------------------
// Multivariate polynomials over Q in the fixed indeterminates al, be, t
// ---------------------------------------------------------------------------

inline constexpr int kFuncVars = 3;
inline constexpr std::array<std::string_view, kFuncVars> kFuncVarNames{"al", "be", "t"};
inline constexpr int kVarAl = 0;
inline constexpr int kVarBe = 1;
inline constexpr int kVarT = 2;

using Exps = std::array<int, kFuncVars>;

/// Graded lexicographic order, largest first (al > be > t).
struct GrLexDescending {
  bool operator()(const Exps& a, const Exps& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exps, Rat, GrLexDescending>;

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static MPoly var(int index, int power = 1);
  static MPoly monomial(const Rat& c, const Exps& e);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  Rat constant_value() const;
  std::size_t term_count() const { return terms_.size(); }

  const Exps& leading_exps() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }
  int total_degree() const;
  int degree_in(int v) const;
  /// Coefficient of v^d, as a polynomial free of v.
  MPoly coeff_in(int v, int d) const;
  /// Content over Q normalized so the leading coefficient is 1.
  MPoly monic() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  MPoly scaled(const Rat& c) const;
  MPoly pow(int e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  std::string to_string() const;

 private:
  void add_term(const Exps& e, const Rat& c);
  TermMap terms_;
};

/// Exact quotient a / b when b divides a, otherwise nullopt.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
/// Monic greatest common divisor in Q[al, be, t].
MPoly gcd(const MPoly& a, const MPoly& b);

// ---------------------------------------------------------------------------
// Rational functions Q(al, be, t)
// ---------------------------------------------------------------------------

/// Element of Q(al, be, t): num/den in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& num, const MPoly& den);
  static RatFunc var(int index) { return RatFunc(MPoly::var(index)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  /// Equality through a*d == b*c; independent of the canonical form.
  static bool cross_equal(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }
inline RatFunc inverse(const RatFunc& x) { return x.inverse(); }

// ---------------------------------------------------------------------------
// Square classes and valuations
// ---------------------------------------------------------------------------

/// +/- al^a be^b t^c, used as a square-class representative.
struct SignedMonomial {
  int sign = 1;
  Exps exps{};

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
  friend auto operator<=>(const SignedMonomial&, const SignedMonomial&) = default;

  RatFunc to_ratfunc() const;
  std::string to_string() const;
  /// Recognizes q * monomial / monomial with q = +/- a rational square.
  static std::optional<SignedMonomial> from_ratfunc(const RatFunc& f);
};

/// Reduces every exponent mod 2; the sign is kept.
SignedMonomial normalize_square_class(const SignedMonomial& m);

/// A prime of Q(K)[x] given by a polynomial of degree one in `var`.
struct LinearPrime {
  MPoly pi;
  int var;

  /// Chooses the highest-index variable in which pi has degree one.
  static LinearPrime from(const MPoly& pi);
  /// The root of pi in the residue field: x -> -pi0/pi1.
  RatFunc root() const;
};

struct Valuation {
  int order;
  RatFunc unit_part;
};

/// e = pi^order * unit_part with unit_part of order zero at pi.
Valuation poly_valuation(const RatFunc& e, const LinearPrime& pi);
/// Substitutes var -> root(pi); requires order zero at pi.
RatFunc residue_at(const RatFunc& e, const LinearPrime& pi);
/// Substitutes var -> value in a rational function.
RatFunc substitute(const RatFunc& e, int var, const RatFunc& value);

}  // namespace qnull
