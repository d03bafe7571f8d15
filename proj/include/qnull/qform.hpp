#pragma once

// Diagonal quadratic forms over Q(al, be, t): Pfister/norm and Albert forms,
// residue forms at a linear prime, and a recursive anisotropy certifier for
// forms with +/- monomial coefficients.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnull/report.hpp"
#include "qnull/scalar.hpp"

namespace qnull {

/// <c1, ..., cm> = sum ci xi^2 with nonzero ci.
class DiagForm {
 public:
  DiagForm() = default;
  explicit DiagForm(std::vector<RatFunc> entries);

  const std::vector<RatFunc>& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }

  /// Entries that are +/- square * monomial replaced by their reduced
  /// SignedMonomial representative; other entries kept as is.
  DiagForm normalized() const;
  DiagForm scaled(const RatFunc& c) const;
  /// Orthogonal sum.
  DiagForm operator+(const DiagForm& o) const;
  /// sum ci xi^2 at the given vector.
  RatFunc evaluate(const std::vector<RatFunc>& x) const;

  /// "<1,-al*be>".
  std::string to_string() const;

  friend bool operator==(const DiagForm&, const DiagForm&) = default;

 private:
  std::vector<RatFunc> entries_;
};

/// Parses "<1,-al*be,t>"-style text with monomial entries.
DiagForm parse_monomial_form(const std::string& text);

/// a/b is a nonzero rational square times an even monomial.
bool same_square_class(const RatFunc& a, const RatFunc& b);
/// Every entry of `sub` matched to a distinct entry of `form` of the same square class.
bool is_subform_by_square_class(const DiagForm& sub, const DiagForm& form);

/// <<a,b>> = <1,-a,-b,ab>, the norm form of (a,b)_F.
DiagForm norm_form(const RatFunc& a, const RatFunc& b);
/// <a, b, -ab, -c, -d, cd> for (a,b) tensor (c,d).
DiagForm albert_form(const std::pair<RatFunc, RatFunc>& A, const std::pair<RatFunc, RatFunc>& Q);

struct ResidueForms {
  DiagForm units;
  DiagForm pi_part;
};

/// Splits q = q_units + pi * q_pi over the pi-adic valuation and returns both
/// residue forms, square-class normalized. Entries are reduced modulo squares
/// of pi first, so only orders 0 and 1 remain.
ResidueForms springer_residues(const DiagForm& q, const LinearPrime& pi);

enum class Verdict { Anisotropic, Isotropic, Undecided };
const char* verdict_name(Verdict v);

/// One step of the certifier: a normalized monomial form and either a base
/// rule or a split by the parity of one variable's exponent.
struct CertNode {
  std::vector<SignedMonomial> form;
  Verdict verdict = Verdict::Undecided;
  std::string rule;  // "dim<=1", "definite", "hyperbolic-pair", "split", "unsupported"
  int split_var = -1;
  std::vector<CertNode> children;  // split: {even part, odd part / x}
  /// Isotropy witness for `form` (rational entries).
  std::vector<Rat> witness;
};

struct AnisotropyCertificate {
  Verdict verdict = Verdict::Undecided;
  CertNode root;
  /// For an isotropic verdict: a nonzero vector x with form.evaluate(x) == 0
  /// for the original (unnormalized) form.
  std::vector<RatFunc> witness;

  /// Re-derives every split from its parent and checks each leaf rule.
  bool replay() const;
  std::string to_string() const;
};

AnisotropyCertificate anisotropic_cert(const DiagForm& q);

/// The full chain showing p = x^2 - al + t(y^2 - be) over (al,be)_F has no
/// central zeros while every member of R*p vanishes at (i, j).
Report verify_counterexample(std::uint64_t seed, int members = 1000);

}  // namespace qnull
