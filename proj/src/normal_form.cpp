#include "gentle/normal_form.hpp"

#include <sstream>

namespace gentle {

std::string NormalForm::render() const {
  std::ostringstream os;
  if (kind == Kind::Gamma) os << "Gamma(" << p << "," << q << "," << r << ")";
  else os << "GammaPrime(" << q << "," << r << ")";
  return os.str();
}

NormalForm canonical(NormalForm nf) {
  if (nf.kind == NormalForm::Kind::Gamma) {
    if (nf.r < 0) {
      std::swap(nf.p, nf.q);
      nf.r = -nf.r;
    }
    if (nf.r == 0 && nf.p > nf.q) std::swap(nf.p, nf.q);
  }
  return nf;
}

NormalForm make_gamma(int p, int q, int r) {
  if (p < 1 || q < 1)
    throw error(errc::parameter_out_of_range, "Gamma requires p, q >= 1");
  NormalForm nf;
  nf.kind = NormalForm::Kind::Gamma;
  nf.p = p;
  nf.q = q;
  nf.r = r;
  return canonical(nf);
}

NormalForm make_gamma_prime(int q, int r) {
  if (q < 1) throw error(errc::parameter_out_of_range, "GammaPrime requires q >= 1");
  NormalForm nf;
  nf.kind = NormalForm::Kind::GammaPrime;
  nf.p = 0;
  nf.q = q;
  nf.r = r;
  return nf;
}

NormalForm parse_normal_form(const std::string& text) {
  auto fail = [&]() -> NormalForm {
    throw error(errc::bad_argument,
                "cannot parse normal form '" + text + "' (expected Gamma(p,q,r) or GammaPrime(q,r))");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  bool prime = s.rfind("GammaPrime(", 0) == 0;
  bool gamma = !prime && s.rfind("Gamma(", 0) == 0;
  if (!prime && !gamma) return fail();
  size_t open = s.find('(');
  if (s.empty() || s.back() != ')') return fail();
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::vector<int> vals;
  std::istringstream in(args);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      vals.push_back(std::stoi(tok));
    } catch (...) {
      return fail();
    }
  }
  if (prime) {
    if (vals.size() != 2) return fail();
    return make_gamma_prime(vals[0], vals[1]);
  }
  if (vals.size() != 3) return fail();
  return make_gamma(vals[0], vals[1], vals[2]);
}

std::variant<NormalForm, UnsupportedReport> normal_form_or_report(
    const GradedAlgebraPresentation& p) {
  ShapeMatch match = match_shape(p);  // throws NotGentle / NotOneCycle
  switch (match.tag) {
    case ShapeTag::Gamma:
      return make_gamma(match.p, match.q, match.r);
    case ShapeTag::Lambda: {
      int r = match.lam_r, n = match.lam_n, m = match.lam_m, d = match.lam_d;
      if (n > r) return make_gamma(n - r, m + r, r - d);
      // n == r: GammaPrime(n+m, n-d) via the identity with the degree-(m+d)
      // completed-cycle quotient
      return make_gamma_prime(n + m, n - d);
    }
    case ShapeTag::GammaPrime:
      return make_gamma_prime(match.gp_q, match.gp_r);
    case ShapeTag::Unrecognized:
      break;
  }
  UnsupportedReport rep;
  rep.gentle = check_gentle(p);
  rep.one_cycle = rep.gentle.connected && rep.gentle.cycle_count == 1;
  if (rep.one_cycle) {
    rep.signed_degree = signed_cycle_degree(p);
    rep.have_signed_degree = true;
    if (rep.gentle.is_gentle) {
      rep.clocks = clock_invariants(p);
      rep.have_clocks = true;
    }
  }
  if (rep.gentle.is_gentle) {
    rep.finite_global_dimension = has_finite_global_dimension(p);
    rep.have_gldim = true;
  }
  return rep;
}

NormalForm normal_form(const GradedAlgebraPresentation& p) {
  auto result = normal_form_or_report(p);
  if (auto* nf = std::get_if<NormalForm>(&result)) return *nf;
  throw error(errc::unsupported_shape,
              "no Gamma/Lambda/GammaPrime shape recognized; invariants available via normal_form_or_report");
}

bool derived_equivalent(const NormalForm& a, const NormalForm& b) {
  NormalForm ca = canonical(a);
  NormalForm cb = canonical(b);
  if (ca.kind != cb.kind) return false;  // finite vs infinite global dimension
  if (ca.kind == NormalForm::Kind::Gamma)
    return ca.p == cb.p && ca.q == cb.q && ca.r == cb.r;
  return ca.q == cb.q && ca.r == cb.r;
}

ConjectureReport conjecture_check(const GradedAlgebraPresentation& p) {
  ConjectureReport rep;
  rep.clocks = clock_invariants(p);
  rep.graded_clock = rep.clocks.graded_clock;
  rep.nf = normal_form(p);  // throws UnsupportedShape for unrecognized inputs
  rep.degree_zero_class = rep.nf.r == 0;
  rep.agree = rep.graded_clock == rep.degree_zero_class;
  return rep;
}

} // namespace gentle
