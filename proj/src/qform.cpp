#include "qnull/qform.hpp"

#include <algorithm>
#include <sstream>

#include "qnull/poly.hpp"
#include "qnull/quat.hpp"
#include "qnull/rng.hpp"

namespace qnull {

namespace {

// Monomial entries with coefficient exactly +/-1 print in monomial notation.
std::string entry_text(const RatFunc& c) {
  if (c.num().term_count() == 1 && c.den().term_count() == 1) {
    Rat coef = c.num().leading_coeff() / c.den().leading_coeff();
    if (coef == Rat(1) || coef == Rat(-1)) {
      if (auto m = SignedMonomial::from_ratfunc(c)) return m->to_string();
    }
  }
  std::string s = c.to_string();
  return s;
}

RatFunc normalize_entry(const RatFunc& c) {
  if (auto m = SignedMonomial::from_ratfunc(c)) return normalize_square_class(*m).to_ratfunc();
  return c;
}

}  // namespace

DiagForm::DiagForm(std::vector<RatFunc> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.is_zero()) throw ZeroConstant("diagonal form entries must be nonzero");
}

DiagForm DiagForm::normalized() const {
  std::vector<RatFunc> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(normalize_entry(e));
  return DiagForm(std::move(out));
}

DiagForm DiagForm::scaled(const RatFunc& c) const {
  std::vector<RatFunc> out;
  for (const auto& e : entries_) out.push_back(e * c);
  return DiagForm(std::move(out));
}

DiagForm DiagForm::operator+(const DiagForm& o) const {
  std::vector<RatFunc> out = entries_;
  out.insert(out.end(), o.entries_.begin(), o.entries_.end());
  return DiagForm(std::move(out));
}

RatFunc DiagForm::evaluate(const std::vector<RatFunc>& x) const {
  if (x.size() != entries_.size()) throw ArityMismatch("form evaluation arity");
  RatFunc acc;
  for (std::size_t k = 0; k < x.size(); ++k) acc += entries_[k] * x[k] * x[k];
  return acc;
}

std::string DiagForm::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ",";
    out += entry_text(entries_[k]);
  }
  return out + ">";
}

DiagForm parse_monomial_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() < 2 || s.front() != '<' || s.back() != '>') throw SyntaxError("form must be enclosed in <...>", 0);
  std::vector<RatFunc> entries;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    SignedMonomial m;
    std::size_t pos = 0;
    if (!item.empty() && item[0] == '-') {
      m.sign = -1;
      pos = 1;
    }
    std::stringstream fs(item.substr(pos));
    std::string factor;
    while (std::getline(fs, factor, '*')) {
      if (factor == "1") continue;
      int power = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        power = std::stoi(factor.substr(caret + 1));
        factor = factor.substr(0, caret);
      }
      auto it = std::find(kFuncVarNames.begin(), kFuncVarNames.end(), factor);
      if (it == kFuncVarNames.end()) throw SyntaxError("unknown form variable '" + factor + "'", 0);
      m.exps[it - kFuncVarNames.begin()] += power;
    }
    entries.push_back(m.to_ratfunc());
  }
  return DiagForm(std::move(entries));
}

bool same_square_class(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto m = SignedMonomial::from_ratfunc(a / b);
  if (!m || m->sign < 0) return false;
  return normalize_square_class(*m).exps == Exps{};
}

bool is_subform_by_square_class(const DiagForm& sub, const DiagForm& form) {
  std::vector<bool> used(form.dim(), false);
  for (const auto& e : sub.entries()) {
    bool found = false;
    for (std::size_t k = 0; k < form.dim() && !found; ++k) {
      if (!used[k] && same_square_class(e, form.entries()[k])) {
        used[k] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

DiagForm norm_form(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroConstant("norm form constants must be nonzero");
  return DiagForm({RatFunc(1), -a, -b, a * b});
}

DiagForm albert_form(const std::pair<RatFunc, RatFunc>& A, const std::pair<RatFunc, RatFunc>& Q) {
  const auto& [a, b] = A;
  const auto& [c, d] = Q;
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero())
    throw ZeroConstant("Albert form constants must be nonzero");
  return DiagForm({a, b, -(a * b), -c, -d, c * d});
}

ResidueForms springer_residues(const DiagForm& q, const LinearPrime& pi) {
  std::vector<RatFunc> units, pi_part;
  for (const auto& c : q.entries()) {
    Valuation v = poly_valuation(c, pi);
    int parity = ((v.order % 2) + 2) % 2;
    if (parity != 0 && parity != 1) throw BadOrder("unexpected valuation parity");
    RatFunc res = residue_at(v.unit_part, pi);
    (parity == 0 ? units : pi_part).push_back(normalize_entry(res));
  }
  return {DiagForm(std::move(units)), DiagForm(std::move(pi_part))};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Anisotropic: return "anisotropic";
    case Verdict::Isotropic: return "isotropic";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Certifier
// ---------------------------------------------------------------------------

namespace {

std::pair<std::vector<SignedMonomial>, std::vector<SignedMonomial>> split_by_parity(
    const std::vector<SignedMonomial>& form, int var) {
  std::vector<SignedMonomial> even, odd;
  for (const auto& m : form) {
    if (m.exps[var] == 0) {
      even.push_back(m);
    } else {
      SignedMonomial r = m;
      r.exps[var] = 0;
      odd.push_back(r);
    }
  }
  return {even, odd};
}

std::vector<Rat> embed_witness(const std::vector<SignedMonomial>& form, int var, bool odd_part,
                               const std::vector<Rat>& child) {
  std::vector<Rat> out(form.size(), Rat(0));
  std::size_t c = 0;
  for (std::size_t k = 0; k < form.size(); ++k) {
    bool is_odd = form[k].exps[var] != 0;
    if (is_odd == odd_part) out[k] = child[c++];
  }
  return out;
}

CertNode certify(std::vector<SignedMonomial> form) {
  CertNode node;
  node.form = std::move(form);
  const auto& f = node.form;
  if (f.size() <= 1) {
    node.verdict = Verdict::Anisotropic;
    node.rule = "dim<=1";
    return node;
  }
  for (int var = 0; var < kFuncVars; ++var) {
    bool odd = std::any_of(f.begin(), f.end(), [var](const SignedMonomial& m) { return m.exps[var] != 0; });
    if (!odd) continue;
    node.rule = "split";
    node.split_var = var;
    auto [even_part, odd_part] = split_by_parity(f, var);
    node.children.push_back(certify(even_part));
    node.children.push_back(certify(odd_part));
    const auto& e = node.children[0];
    const auto& o = node.children[1];
    if (e.verdict == Verdict::Anisotropic && o.verdict == Verdict::Anisotropic) {
      node.verdict = Verdict::Anisotropic;
    } else if (e.verdict == Verdict::Isotropic) {
      node.verdict = Verdict::Isotropic;
      node.witness = embed_witness(f, var, false, e.witness);
    } else if (o.verdict == Verdict::Isotropic) {
      node.verdict = Verdict::Isotropic;
      node.witness = embed_witness(f, var, true, o.witness);
    } else {
      node.verdict = Verdict::Undecided;
    }
    return node;
  }
  // Only +/-1 entries remain.
  auto pos = std::find_if(f.begin(), f.end(), [](const SignedMonomial& m) { return m.sign > 0; });
  auto neg = std::find_if(f.begin(), f.end(), [](const SignedMonomial& m) { return m.sign < 0; });
  if (pos == f.end() || neg == f.end()) {
    node.verdict = Verdict::Anisotropic;
    node.rule = "definite";
    return node;
  }
  node.verdict = Verdict::Isotropic;
  node.rule = "hyperbolic-pair";
  node.witness.assign(f.size(), Rat(0));
  node.witness[pos - f.begin()] = Rat(1);
  node.witness[neg - f.begin()] = Rat(1);
  return node;
}

bool replay_node(const CertNode& node) {
  const auto& f = node.form;
  for (const auto& m : f)
    for (int e : m.exps)
      if (e != 0 && e != 1) return false;
  if (node.rule == "dim<=1") return f.size() <= 1 && node.verdict == Verdict::Anisotropic;
  if (node.rule == "definite") {
    if (f.size() < 2) return false;
    for (const auto& m : f)
      if (m.exps != Exps{} || m.sign != f.front().sign) return false;
    return node.verdict == Verdict::Anisotropic;
  }
  if (node.rule == "hyperbolic-pair") {
    if (node.witness.size() != f.size()) return false;
    Rat acc(0);
    bool nonzero = false;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k].exps != Exps{}) return false;
      acc += Rat(f[k].sign) * node.witness[k] * node.witness[k];
      nonzero = nonzero || !node.witness[k].is_zero();
    }
    return nonzero && acc.is_zero() && node.verdict == Verdict::Isotropic;
  }
  if (node.rule == "split") {
    if (node.children.size() != 2 || node.split_var < 0) return false;
    auto [even_part, odd_part] = split_by_parity(f, node.split_var);
    if (even_part != node.children[0].form || odd_part != node.children[1].form) return false;
    return replay_node(node.children[0]) && replay_node(node.children[1]);
  }
  return node.rule == "unsupported" && node.verdict == Verdict::Undecided;
}

void print_node(const CertNode& node, int depth, std::ostringstream& os) {
  std::vector<RatFunc> entries;
  for (const auto& m : node.form) entries.push_back(m.to_ratfunc());
  os << std::string(2 * depth, ' ') << DiagForm(entries).to_string() << " : " << node.rule;
  if (node.split_var >= 0) os << " by " << kFuncVarNames[node.split_var];
  os << " -> " << verdict_name(node.verdict) << "\n";
  for (const auto& c : node.children) print_node(c, depth + 1, os);
}

}  // namespace

AnisotropyCertificate anisotropic_cert(const DiagForm& q) {
  AnisotropyCertificate cert;
  std::vector<SignedMonomial> reduced;
  std::vector<RatFunc> root_factor;  // entry = reduced * root_factor^2
  for (const auto& c : q.entries()) {
    auto m = SignedMonomial::from_ratfunc(c);
    if (!m) {
      cert.root.rule = "unsupported";
      cert.root.verdict = Verdict::Undecided;
      return cert;
    }
    SignedMonomial n = normalize_square_class(*m);
    reduced.push_back(n);
    root_factor.push_back(c / n.to_ratfunc());
  }
  for (auto& f : root_factor) {
    // f = q^2 * monomial^2 with q rational: take the square root term-wise.
    Rat coef = f.num().leading_coeff() / f.den().leading_coeff();
    Exps up{}, down{};
    for (int v = 0; v < kFuncVars; ++v) {
      int e = f.num().leading_exps()[v] - f.den().leading_exps()[v];
      (e >= 0 ? up[v] : down[v]) = std::abs(e) / 2;
    }
    f = RatFunc(MPoly::monomial(*coef.sqrt_exact(), up), MPoly::monomial(Rat(1), down));
  }
  cert.root = certify(reduced);
  cert.verdict = cert.root.verdict;
  if (cert.verdict == Verdict::Isotropic) {
    for (std::size_t k = 0; k < reduced.size(); ++k) cert.witness.push_back(RatFunc(cert.root.witness[k]) / root_factor[k]);
  }
  return cert;
}

bool AnisotropyCertificate::replay() const { return replay_node(root) && root.verdict == verdict; }

std::string AnisotropyCertificate::to_string() const {
  std::ostringstream os;
  print_node(root, 0, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Counterexample chain
// ---------------------------------------------------------------------------

Report verify_counterexample(std::uint64_t seed, int members) {
  using Q = Quaternion<RatFunc>;
  using P = QPoly<RatFunc>;
  Report rep{"verify counterexample", {}};

  const RatFunc al = RatFunc::var(kVarAl), be = RatFunc::var(kVarBe), t = RatFunc::var(kVarT);
  auto alg = AlgebraSpec<RatFunc>::make(al, be);
  const Q one = Q::scalar(RatFunc(1), alg), qi = Q::unit_i(alg), qj = Q::unit_j(alg);
  auto c = [&](const RatFunc& s) { return Q::scalar(s, alg); };

  // (1) Q = (al,be)_F and p = x^2 - al + t(y^2 - be).
  const P x = P::variable(2, 0, alg), y = P::variable(2, 1, alg);
  const P p = x * x - P::constant(2, c(al)) + (y * y - P::constant(2, c(be))).scale_left(c(t));
  bool relations = qi * qi == c(al) && qj * qj == c(be) && qj * qi == -(qi * qj);
  rep.add("1_build_algebra_and_p", relations && p.arity() == 2, "p = " + p.to_string());

  // (2), (3)
  const QTuple<RatFunc> point{qi, qj};
  Q p_at = p.eval(point);
  rep.add("2_p(i,j)=0", p_at.is_zero(), "p(i,j) = " + p_at.to_string());
  Q f_at = (x * x).eval(point);
  rep.add("3_x^2(i,j)=al", f_at == c(al) && !f_at.is_zero(), "x^2(i,j) = " + f_at.to_string());

  // (4) members of R*p vanish at (i,j).
  {
    std::vector<Q> pool;
    const std::vector<RatFunc> scalars{RatFunc(0), RatFunc(1), RatFunc(-1), RatFunc(2), al, be, t, al + t, -be};
    Rng rng(seed);
    for (int k = 0; k < 40; ++k) {
      Q q(scalars[rng.below(scalars.size())], scalars[rng.below(scalars.size())], scalars[rng.below(scalars.size())],
          scalars[rng.below(scalars.size())], alg);
      if (!q.is_zero()) pool.push_back(q);
    }
    std::vector<P> sample;
    sample.push_back(P::term({1, 0}, qi) * p);
    for (int k = 1; k < members; ++k) {
      P m = random_poly<RatFunc>(2, 2, 1 + static_cast<int>(rng.below(3)), std::span<const Q>(pool), rng.next());
      sample.push_back(m * p);
    }
    std::optional<std::string> bad;
    for (std::size_t k = 0; k < sample.size() && !bad; ++k)
      if (!sample[k].eval(point).is_zero()) bad = sample[k].to_string();
    Q ixp = sample.front().eval(point);
    rep.add("4_members_of_Rp_vanish_at_(i,j)", !bad && ixp.is_zero(),
            std::to_string(sample.size()) + " members including (i*x)*p", bad);
  }

  // (5) p is pi = <1, t, -(al+be*t)> with z := 1.
  const RatFunc pi_poly = al + be * t;
  const DiagForm pi_form({RatFunc(1), t, -pi_poly});
  {
    P quad(3, alg);
    for (int k = 0; k < 3; ++k) {
      Monomial e(3, 0);
      e[k] = 2;
      quad.add_term(e, c(pi_form.entries()[k]));
    }
    P x3 = P::variable(3, 0, alg), y3 = P::variable(3, 1, alg);
    P p3 = x3 * x3 - P::constant(3, c(al)) + (y3 * y3 - P::constant(3, c(be))).scale_left(c(t));
    rep.add("5_p_is_pi_at_z=1", quad.specialize(2, RatFunc(1)) == p3, "pi = " + pi_form.to_string());
  }

  // (6) pi is a subform of <<-t, al+be*t>>.
  const DiagForm tau = norm_form(-t, pi_poly);
  rep.add("6_pi_subform_of_pfister", is_subform_by_square_class(pi_form, tau),
          "tau = " + tau.to_string() + " (standard expansion <1,-a,-b,ab>)");

  // (7) Albert form and its residue forms at al + be*t.
  const DiagForm phi = albert_form({-t, pi_poly}, {al, be});
  const DiagForm phi_expected({-t, pi_poly, t * pi_poly, -al, -be, al * be});
  const auto residues = springer_residues(phi, LinearPrime::from(pi_poly.num()));
  const DiagForm units_expected = parse_monomial_form("<al*be,-al,-be,al*be>");
  const DiagForm pi_expected = parse_monomial_form("<1,-al*be>");
  rep.add("7_albert_residue_forms",
          phi == phi_expected && residues.units == units_expected && residues.pi_part == pi_expected,
          "phi = " + phi.to_string() + "; residues " + residues.pi_part.to_string() + " and " +
              residues.units.to_string());

  // (8) both residue forms anisotropic.
  auto cert_pi = anisotropic_cert(residues.pi_part);
  auto cert_units = anisotropic_cert(residues.units);
  rep.add("8_residue_forms_anisotropic",
          cert_pi.verdict == Verdict::Anisotropic && cert_units.verdict == Verdict::Anisotropic &&
              cert_pi.replay() && cert_units.replay(),
          residues.pi_part.to_string() + ": " + verdict_name(cert_pi.verdict) + "; " + residues.units.to_string() +
              ": " + verdict_name(cert_units.verdict));

  // (9) conclusion relative to standard quadratic-form theorems.
  bool chain = true;
  for (const auto& ch : rep.checks) chain = chain && ch.pass;
  rep.add("9_conclusion_Vc(<p>)_empty", chain,
          "phi anisotropic (Springer: both residue forms anisotropic over a complete discretely valued field), so "
          "A tensor Q is a division algebra (Albert form criterion), so A is not split by any subfield K, so "
          "tau and its subform pi are anisotropic over K (norm form of A / subform isotropy), so p has no root in "
          "Q_c^2; assumed theorems: Springer, Albert criterion, norm form splitting, subform isotropy");
  return rep;
}

}  // namespace qnull
