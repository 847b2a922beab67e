#ifndef GENTLE_NORMAL_FORM_HPP
#define GENTLE_NORMAL_FORM_HPP

#include <string>
#include <variant>

#include "gentle/analysis.hpp"

namespace gentle {

/// Derived-equivalence class tag. Canonical Gamma representative: r >= 0, and
/// p <= q when r == 0 (absorbing (p,q,r) ~ (q,p,-r)).
struct NormalForm {
  enum class Kind { Gamma, GammaPrime } kind = Kind::Gamma;
  int p = 0;  // Gamma only
  int q = 0;
  int r = 0;

  std::string render() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm make_gamma(int p, int q, int r);        // canonicalizes
NormalForm make_gamma_prime(int q, int r);
NormalForm canonical(NormalForm nf);
NormalForm parse_normal_form(const std::string& text);  // "Gamma(1,2,3)" literals

/// Invariant report returned instead of a normal form for unrecognized shapes.
struct UnsupportedReport {
  GentleReport gentle;
  bool one_cycle = false;
  ClockInvariants clocks;       // valid when gentle && one_cycle
  bool have_clocks = false;
  int signed_degree = 0;        // valid when one_cycle
  bool have_signed_degree = false;
  bool finite_global_dimension = false;
  bool have_gldim = false;
};

std::variant<NormalForm, UnsupportedReport> normal_form_or_report(
    const GradedAlgebraPresentation& p);

/// Convenience wrapper; throws errc::unsupported_shape for unrecognized inputs.
NormalForm normal_form(const GradedAlgebraPresentation& p);

bool derived_equivalent(const NormalForm& a, const NormalForm& b);

struct ConjectureReport {
  bool graded_clock = false;
  NormalForm nf;
  bool degree_zero_class = false;  // Gamma(.,.,0) or GammaPrime(q,0)
  bool agree = false;
  ClockInvariants clocks;
};

/// Graded clock condition versus normal form having trivial cycle grading.
ConjectureReport conjecture_check(const GradedAlgebraPresentation& p);

} // namespace gentle

#endif
