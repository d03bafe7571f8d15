#include "qnull/scalar.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qnull {

// ---------------------------------------------------------------------------
// Rat
// ---------------------------------------------------------------------------

Rat::Rat(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("invalid rational literal '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
  q.canonicalize();
  return Rat(q);
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rat> Rat::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = num(), d = den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(mpq_class(rn, rd));
}

std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// MPoly
// ---------------------------------------------------------------------------

namespace {

int degree_of(const Exps& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kFuncVars; ++i) r[i] = a[i] + b[i];
  return r;
}

std::optional<Exps> sub_exps(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kFuncVars; ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) return std::nullopt;
  }
  return r;
}

}  // namespace

bool GrLexDescending::operator()(const Exps& a, const Exps& b) const {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

MPoly MPoly::var(int index, int power) {
  Exps e{};
  e[index] = power;
  return monomial(Rat(1), e);
}

MPoly MPoly::monomial(const Rat& c, const Exps& e) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{});
}

Rat MPoly::constant_value() const {
  auto it = terms_.find(Exps{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
}

int MPoly::degree_in(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

MPoly MPoly::coeff_in(int v, int d) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[v] != d) continue;
    Exps f = e;
    f[v] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

void MPoly::add_term(const Exps& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exps(ea, eb), ca * cb);
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  if (c.is_zero()) return {};
  MPoly r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

MPoly MPoly::pow(int e) const {
  MPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rat(1);
    bool any_var = e != Exps{};
    if (!unit || !any_var) os << mag.to_string();
    bool need_star = !unit || !any_var;
    for (int i = 0; i < kFuncVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << kFuncVarNames[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  MPoly q, r = a;
  const Exps& lb = b.leading_exps();
  const Rat& cb = b.leading_coeff();
  while (!r.is_zero()) {
    auto shift = sub_exps(r.leading_exps(), lb);
    if (!shift) return std::nullopt;
    MPoly t = MPoly::monomial(r.leading_coeff() / cb, *shift);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// A variable missing from one side is taken first (its content step is cheap);
// otherwise the one of least degree, which keeps the remainder sequence short.
int main_variable(const MPoly& a, const MPoly& b) {
  int best = -1;
  std::pair<int, int> best_key{0, 0};
  for (int v = 0; v < kFuncVars; ++v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 && db == 0) continue;
    if (da == 0 || db == 0) return v;
    std::pair<int, int> key{std::min(da, db), std::max(da, db)};
    if (best < 0 || key < best_key) {
      best = v;
      best_key = key;
    }
  }
  return best;
}

MPoly content_in(const MPoly& a, int v) {
  MPoly g;
  for (int d = a.degree_in(v); d >= 0; --d) {
    MPoly c = a.coeff_in(v, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in v.
// Full pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
MPoly pseudo_remainder(MPoly a, const MPoly& b, int v) {
  int db = b.degree_in(v);
  MPoly lcb = b.coeff_in(v, db);
  int steps = a.degree_in(v) - db + 1;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    MPoly lca = a.coeff_in(v, da);
    a = lcb * a - lca * MPoly::var(v, da - db) * b;
    --steps;
  }
  for (; steps > 0; --steps) a = a * lcb;
  return a;
}

// Monic as well, so the rational content cannot grow along the sequence.
MPoly primitive_part(const MPoly& a, int v) {
  return divide_exact(a, content_in(a, v))->monic();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  int v = main_variable(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  MPoly ca = content_in(a, v), cb = content_in(b, v);
  MPoly pa = divide_exact(a, ca)->monic(), pb = divide_exact(b, cb)->monic();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  if (divide_exact(pa, pb)) return (gcd(ca, cb) * pb).monic();
  // Subresultant sequence: exact divisions keep coefficients small without
  // a content gcd at every step.
  MPoly g(1), h(1);
  while (true) {
    int d = pa.degree_in(v) - pb.degree_in(v);
    MPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = MPoly(1);
      break;
    }
    MPoly scale = g;
    for (int e = 0; e < d; ++e) scale = scale * h;
    pa = std::move(pb);
    pb = *divide_exact(r, scale);
    g = pa.coeff_in(v, pa.degree_in(v));
    if (d == 0) continue;
    MPoly num(1), den(1);
    for (int e = 0; e < d; ++e) num = num * g;
    for (int e = 1; e < d; ++e) den = den * h;
    h = *divide_exact(num, den);
  }
  return (gcd(ca, cb) * primitive_part(pb, v)).monic();
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(den.constant_value().inverse());
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num, den);
  MPoly n = *divide_exact(num, g), d = *divide_exact(den, g);
  Rat lc = d.leading_coeff().inverse();
  num_ = n.scaled(lc);
  den_ = d.scaled(lc);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      return *this;
    }
    *this = RatFunc(num_ + o.num_, den_);
    return *this;
  }
  *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -a.num_;
  return r;
}

bool RatFunc::cross_equal(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) {
    if (num_.term_count() <= 1) return num_.to_string();
    return "(" + num_.to_string() + ")";
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// SignedMonomial
// ---------------------------------------------------------------------------

RatFunc SignedMonomial::to_ratfunc() const {
  Exps up{}, down{};
  for (int i = 0; i < kFuncVars; ++i) (exps[i] >= 0 ? up[i] : down[i]) = std::abs(exps[i]);
  return RatFunc(MPoly::monomial(Rat(sign), up), MPoly::monomial(Rat(1), down));
}

std::string SignedMonomial::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool any = false;
  for (int i = 0; i < kFuncVars; ++i) {
    if (exps[i] == 0) continue;
    if (any) os << "*";
    os << kFuncVarNames[i];
    if (exps[i] != 1) os << "^" << exps[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::optional<SignedMonomial> SignedMonomial::from_ratfunc(const RatFunc& f) {
  if (f.num().term_count() != 1 || f.den().term_count() != 1) return std::nullopt;
  Rat c = f.num().leading_coeff() / f.den().leading_coeff();
  SignedMonomial m;
  m.sign = c.sign();
  if (!(c.sign() < 0 ? -c : c).sqrt_exact()) return std::nullopt;
  for (int i = 0; i < kFuncVars; ++i) m.exps[i] = f.num().leading_exps()[i] - f.den().leading_exps()[i];
  return m;
}

SignedMonomial normalize_square_class(const SignedMonomial& m) {
  SignedMonomial r = m;
  for (int& e : r.exps) e = ((e % 2) + 2) % 2;
  return r;
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

LinearPrime LinearPrime::from(const MPoly& pi) {
  for (int v = kFuncVars - 1; v >= 0; --v)
    if (pi.degree_in(v) == 1) return LinearPrime{pi, v};
  throw Error("prime polynomial must have degree one in some variable");
}

RatFunc LinearPrime::root() const {
  return RatFunc(-pi.coeff_in(var, 0), pi.coeff_in(var, 1));
}

namespace {

int strip_factor(MPoly& p, const MPoly& pi) {
  int k = 0;
  while (true) {
    auto q = divide_exact(p, pi);
    if (!q) return k;
    p = std::move(*q);
    ++k;
  }
}

}  // namespace

Valuation poly_valuation(const RatFunc& e, const LinearPrime& pi) {
  if (e.is_zero()) throw ZeroElement("valuation of zero");
  MPoly n = e.num(), d = e.den();
  int order = strip_factor(n, pi.pi) - strip_factor(d, pi.pi);
  return Valuation{order, RatFunc(n, d)};
}

RatFunc substitute(const RatFunc& e, int var, const RatFunc& value) {
  auto eval_poly = [&](const MPoly& p) {
    RatFunc acc;
    for (int d = p.degree_in(var); d >= 0; --d) acc = acc * value + RatFunc(p.coeff_in(var, d));
    return acc;
  };
  RatFunc den = eval_poly(e.den());
  if (den.is_zero()) throw PoleAtPi("denominator vanishes under substitution");
  return eval_poly(e.num()) / den;
}

RatFunc residue_at(const RatFunc& e, const LinearPrime& pi) {
  if (e.is_zero()) throw PoleAtPi("zero has no residue as a unit");
  Valuation v = poly_valuation(e, pi);
  if (v.order != 0) throw PoleAtPi("element has order " + std::to_string(v.order) + " at pi");
  return substitute(e, pi.var, pi.root());
}

}  // namespace qnull
