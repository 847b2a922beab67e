#include "gentle/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentle/ar_quiver.hpp"
#include "gentle/dsl.hpp"
#include "gentle/normal_form.hpp"

namespace gentle {

namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

GradedAlgebraPresentation load_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open '" + path + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse(SourceDocument{buf.str()});
  if (!parsed.ok()) {
    for (const Diagnostic& d : parsed.diagnostics)
      err << path << ":" << d.render() << "\n";
    throw UsageError{"parse failed with " + std::to_string(parsed.diagnostics.size()) +
                     " diagnostic(s)"};
  }
  return *parsed.presentation;
}

json gentle_report_json(const GentleReport& rep) {
  json v = json::array();
  for (const GentleViolation& viol : rep.violations) {
    json e;
    e["condition"] = viol.condition;
    if (viol.vertex != GentleViolation::INT_UNSET) e["vertex"] = viol.vertex;
    if (viol.arrow != GentleViolation::INT_UNSET) e["arrow"] = viol.arrow;
    e["note"] = viol.note;
    v.push_back(e);
  }
  return json{{"is_gentle", rep.is_gentle},
              {"violations", v},
              {"connected", rep.connected},
              {"cycle_count", rep.cycle_count}};
}

json clock_json(const ClockInvariants& c) {
  return json{{"cw_relations", c.cw_relations},
              {"ccw_relations", c.ccw_relations},
              {"cw_degree_sum", c.cw_degree_sum},
              {"ccw_degree_sum", c.ccw_degree_sum},
              {"d_plus", c.d_plus},
              {"d_minus", c.d_minus},
              {"clock", c.clock},
              {"graded_clock", c.graded_clock}};
}

void print_clock_text(std::ostream& out, const ClockInvariants& c) {
  out << "clock: cw_relations=" << c.cw_relations << " ccw_relations=" << c.ccw_relations
      << " cw_degree_sum=" << c.cw_degree_sum << " ccw_degree_sum=" << c.ccw_degree_sum
      << "\n";
  out << "d_plus=" << c.d_plus << " d_minus=" << c.d_minus
      << " clock=" << (c.clock ? "true" : "false")
      << " graded_clock=" << (c.graded_clock ? "true" : "false") << "\n";
}

int cmd_analyze(const std::string& file, bool as_json, std::ostream& out, std::ostream& err) {
  GradedAlgebraPresentation pres = load_file(file, err);
  GentleReport rep = check_gentle(pres);
  json j;
  j["gentle"] = gentle_report_json(rep);
  bool one_cycle = rep.connected && rep.cycle_count == 1;
  if (!as_json) {
    out << "gentle: " << (rep.is_gentle ? "true" : "false") << "\n";
    for (const GentleViolation& v : rep.violations) {
      out << "  violation of condition (" << v.condition << ")";
      if (v.vertex != GentleViolation::INT_UNSET) out << " at vertex " << v.vertex;
      if (v.arrow != GentleViolation::INT_UNSET) out << " at arrow " << v.arrow;
      out << ": " << v.note << "\n";
    }
    out << "connected: " << (rep.connected ? "true" : "false")
        << "  cycle_count: " << rep.cycle_count << "\n";
  }
  if (rep.is_gentle && one_cycle) {
    ClockInvariants clocks = clock_invariants(pres);
    j["clock"] = clock_json(clocks);
    j["signed_cycle_degree"] = signed_cycle_degree(pres);
    if (!as_json) {
      print_clock_text(out, clocks);
      out << "signed_cycle_degree: " << signed_cycle_degree(pres) << "\n";
    }
  }
  if (rep.is_gentle) {
    bool fin = has_finite_global_dimension(pres);
    j["finite_global_dimension"] = fin;
    if (!as_json)
      out << "finite_global_dimension: " << (fin ? "true" : "false") << "\n";
  }
  if (as_json) out << j.dump(2) << "\n";
  return 0;
}

json normal_form_json(const NormalForm& nf) {
  json j;
  j["kind"] = nf.kind == NormalForm::Kind::Gamma ? "Gamma" : "GammaPrime";
  if (nf.kind == NormalForm::Kind::Gamma) j["p"] = nf.p;
  j["q"] = nf.q;
  j["r"] = nf.r;
  j["literal"] = nf.render();
  return j;
}

int cmd_normal_form(const GradedAlgebraPresentation& pres, bool as_json,
                    std::ostream& out) {
  auto result = normal_form_or_report(pres);
  if (auto* nf = std::get_if<NormalForm>(&result)) {
    if (as_json) out << normal_form_json(*nf).dump(2) << "\n";
    else out << nf->render() << "\n";
    return 0;
  }
  const UnsupportedReport& rep = std::get<UnsupportedReport>(result);
  if (as_json) {
    json j;
    j["unsupported_shape"] = true;
    j["gentle"] = gentle_report_json(rep.gentle);
    j["one_cycle"] = rep.one_cycle;
    if (rep.have_clocks) j["clock"] = clock_json(rep.clocks);
    if (rep.have_signed_degree) j["signed_cycle_degree"] = rep.signed_degree;
    if (rep.have_gldim) j["finite_global_dimension"] = rep.finite_global_dimension;
    out << j.dump(2) << "\n";
  } else {
    out << "UnsupportedShape: no Gamma/Lambda/GammaPrime structure recognized\n";
    out << "gentle: " << (rep.gentle.is_gentle ? "true" : "false")
        << "  connected: " << (rep.gentle.connected ? "true" : "false")
        << "  cycle_count: " << rep.gentle.cycle_count << "\n";
    if (rep.have_clocks) print_clock_text(out, rep.clocks);
    if (rep.have_signed_degree)
      out << "signed_cycle_degree: " << rep.signed_degree << "\n";
    if (rep.have_gldim)
      out << "finite_global_dimension: "
          << (rep.finite_global_dimension ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_hom(const CoveringQuiver& ctx, const std::string& xs, const std::string& ys,
            const std::string& shifts, bool as_json, std::ostream& out) {
  Interval x = ctx.parse_interval(xs);
  Interval y = ctx.parse_interval(ys);
  size_t dots = shifts.find("..");
  if (dots == std::string::npos)
    throw UsageError{"--shifts expects LO..HI, got '" + shifts + "'"};
  int lo = std::stoi(shifts.substr(0, dots));
  int hi = std::stoi(shifts.substr(dots + 2));
  if (lo > hi) throw UsageError{"--shifts range is empty"};
  OrbitObject ox = make_orbit(ctx, x), oy = make_orbit(ctx, y);
  json rows = json::array();
  if (!as_json)
    out << "orbit Hom(" << ox.render() << ", Sigma^n " << oy.render() << "):\n";
  for (int n = lo; n <= hi; ++n) {
    int d = orbit_hom_dim(ctx, ox, oy, n);
    if (as_json) rows.push_back({{"n", n}, {"dim", d}});
    else out << "  n = " << n << ": " << d << "\n";
  }
  if (as_json) out << rows.dump(2) << "\n";
  return 0;
}

int env_slack(const CoveringQuiver& ctx) {
  const char* env = std::getenv("GENTLE_ORACLE_SLACK");
  if (env) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return ctx.params().p + ctx.params().q;
}

int cmd_verify(const CoveringQuiver& ctx, int samples, std::uint64_t seed,
               std::ostream& out) {
  const CoveringParams& pp = ctx.params();
  out << "verify: Gamma(" << pp.p << "," << pp.q << "," << pp.r << ")  samples=" << samples
      << "  seed=" << seed << "\n";

  std::vector<Family> regular_families =
      ctx.linear() ? std::vector<Family>{Family::X}
                   : std::vector<Family>{Family::X1, Family::X2};
  out << "[tau-sigma]\n";
  for (Family f : regular_families)
    out << "  " << verify_tau_sigma(ctx, f, samples, seed).render() << "\n";
  if (!ctx.linear())
    out << "  " << verify_tau_sigma(ctx, Family::P, samples, seed).render() << "\n";

  out << "[suspension]\n";
  std::vector<Family> families = regular_families;
  if (!ctx.linear()) {
    families.push_back(Family::P);
    families.push_back(Family::Y1);
    families.push_back(Family::Z2);
  } else {
    families.push_back(Family::Y);
    families.push_back(Family::Z);
  }
  for (Family f : families)
    out << "  " << verify_suspension(ctx, f, samples, seed).render() << "\n";

  // oracle agreement on random pairs
  int slack = env_slack(ctx);
  std::uint64_t state = seed ? seed : 0x9E3779B97F4A7C15ULL;
  int per = ctx.period();
  int mismatches = 0;
  for (int i = 0; i < samples; ++i) {
    int copy = static_cast<int>(rng_range(state, 0, ctx.copies() - 1));
    auto random_interval = [&]() {
      long long b = rng_range(state, -2LL * per, 2LL * per);
      long long len = rng_range(state, 1, 2LL * per);
      int kind = static_cast<int>(rng_range(state, 0, 9));
      if (kind == 8) return ctx.interval(copy, std::nullopt, b);
      if (kind == 9) return ctx.interval(copy, b + len, std::nullopt);
      return ctx.interval(copy, b + len, b);
    };
    Interval m = random_interval();
    Interval n = random_interval();
    if (hom_dim(ctx, m, n) != window_oracle_hom(ctx, m, n, slack)) ++mismatches;
  }
  out << "[oracle] hom_dim vs window oracle (slack=" << slack << "): "
      << (samples - mismatches) << "/" << samples << " agree\n";

  int ar_checked = 0, ar_failures = 0;
  for (int i = 0; i < samples; ++i) {
    int copy = static_cast<int>(rng_range(state, 0, ctx.copies() - 1));
    long long b = rng_range(state, -2LL * per, 2LL * per);
    long long len = rng_range(state, 1, 2LL * per);
    Interval m = ctx.interval(copy, b + len, b);
    if (is_projective(ctx, m)) continue;
    ++ar_checked;
    Interval t = ar_translate(ctx, m);
    if (ext1_dim(ctx, m, t) != 1 || hom_dim(ctx, m, m) != 1) ++ar_failures;
  }
  out << "[oracle] ext1(M, tau M) = 1 and End(M) = k on " << (ar_checked - ar_failures)
      << "/" << ar_checked << " non-projective samples\n";
  return (mismatches == 0 && ar_failures == 0) ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gentle one-cycle algebra toolkit"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "gentleness, clock data, global dimension");
  std::string analyze_file;
  bool analyze_json = false;
  analyze->add_option("file", analyze_file, "input .gq file")->required();
  analyze->add_flag("--json", analyze_json, "JSON output");

  // normal-form
  auto* nf = app.add_subcommand("normal-form", "derived-equivalence normal form");
  std::string nf_file;
  bool nf_json = false;
  std::vector<int> nf_lambda, nf_gamma, nf_gamma_prime;
  nf->add_option("file", nf_file, "input .gq file");
  nf->add_option("--lambda", nf_lambda, "R N M D builtin")->expected(4);
  nf->add_option("--gamma", nf_gamma, "P Q R builtin")->expected(3);
  nf->add_option("--gamma-prime", nf_gamma_prime, "Q R builtin")->expected(2);
  nf->add_flag("--json", nf_json, "JSON output");

  // equiv
  auto* equiv = app.add_subcommand("equiv", "decide derived equivalence of normal forms");
  std::string equiv_a, equiv_b;
  bool equiv_json = false;
  equiv->add_option("first", equiv_a, "e.g. \"Gamma(1,2,3)\"")->required();
  equiv->add_option("second", equiv_b, "e.g. \"GammaPrime(2,1)\"")->required();
  equiv->add_flag("--json", equiv_json, "JSON output");

  // summary
  auto* summary = app.add_subcommand("summary", "AR-quiver component summary");
  std::vector<int> sum_gamma, sum_gamma_prime, sum_lambda;
  bool sum_json = false;
  summary->add_option("--gamma", sum_gamma, "P Q R")->expected(3);
  summary->add_option("--gamma-prime", sum_gamma_prime, "Q R")->expected(2);
  summary->add_option("--lambda", sum_lambda, "R N M D")->expected(4);
  summary->add_flag("--json", sum_json, "JSON output");

  // hom
  auto* hom = app.add_subcommand("hom", "orbit-category Hom dimensions");
  std::vector<int> hom_gamma;
  std::string hom_x, hom_y, hom_shifts = "0..1";
  bool hom_json = false;
  hom->add_option("--gamma", hom_gamma, "P Q R (p >= 0)")->expected(3)->required();
  hom->add_option("--x", hom_x, "interval, e.g. \"M(0;2,0)\"")->required();
  hom->add_option("--y", hom_y, "interval")->required();
  hom->add_option("--shifts", hom_shifts, "LO..HI suspension range");
  hom->add_flag("--json", hom_json, "JSON output");

  // ar-window
  auto* win = app.add_subcommand("ar-window", "mesh window of the AR quiver");
  std::vector<int> win_gamma;
  std::string win_center, win_dot, win_json_path;
  int win_radius = 2;
  win->add_option("--gamma", win_gamma, "P Q R (p >= 0)")->expected(3)->required();
  win->add_option("--center", win_center, "interval, e.g. \"M(0;2,0)\"")->required();
  win->add_option("--radius", win_radius, "mesh steps from the center");
  win->add_option("--dot", win_dot, "write Graphviz DOT here");
  win->add_option("--json", win_json_path, "write JSON graph here");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized tau-sigma / suspension / oracle checks");
  std::vector<int> verify_gamma;
  int verify_samples = 100;
  std::uint64_t verify_seed = 1;
  verify->add_option("--gamma", verify_gamma, "P Q R (p >= 0)")->expected(3)->required();
  verify->add_option("--samples", verify_samples, "sample count");
  verify->add_option("--seed", verify_seed, "RNG seed");

  // check-conjecture
  auto* conj = app.add_subcommand("check-conjecture", "graded clock condition vs normal form");
  std::string conj_file;
  bool conj_json = false;
  conj->add_option("file", conj_file, "input .gq file")->required();
  conj->add_flag("--json", conj_json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("gentle");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (analyze->parsed()) return cmd_analyze(analyze_file, analyze_json, out, err);

  if (nf->parsed()) {
    int sources = (!nf_file.empty()) + !nf_lambda.empty() + !nf_gamma.empty() +
                  !nf_gamma_prime.empty();
    if (sources != 1)
      throw UsageError{"normal-form needs exactly one input source (file or builtin)"};
    GradedAlgebraPresentation pres;
    if (!nf_file.empty()) pres = load_file(nf_file, err);
    else if (!nf_lambda.empty())
      pres = builtin_lambda(nf_lambda[0], nf_lambda[1], nf_lambda[2], nf_lambda[3]);
    else if (!nf_gamma.empty()) pres = builtin_gamma(nf_gamma[0], nf_gamma[1], nf_gamma[2]);
    else pres = builtin_gamma_prime(nf_gamma_prime[0], nf_gamma_prime[1]);
    return cmd_normal_form(pres, nf_json, out);
  }

  if (equiv->parsed()) {
    NormalForm a, b;
    try {
      a = parse_normal_form(equiv_a);
      b = parse_normal_form(equiv_b);
    } catch (const error& e) {
      throw UsageError{e.what()};
    }
    bool eq = derived_equivalent(a, b);
    if (equiv_json)
      out << json{{"first", a.render()}, {"second", b.render()},
                  {"derived_equivalent", eq}}
                 .dump(2)
          << "\n";
    else out << "derived-equivalent: " << (eq ? "true" : "false") << "\n";
    return 0;
  }

  if (summary->parsed()) {
    int sources = !sum_gamma.empty() + !sum_gamma_prime.empty() + !sum_lambda.empty();
    if (sources != 1)
      throw UsageError{"summary needs exactly one of --gamma/--gamma-prime/--lambda"};
    ARQuiverSummary s;
    if (!sum_gamma.empty()) s = summary_gamma(sum_gamma[0], sum_gamma[1], sum_gamma[2]);
    else if (!sum_gamma_prime.empty())
      s = summary_gamma_prime(sum_gamma_prime[0], sum_gamma_prime[1]);
    else s = summary_lambda(sum_lambda[0], sum_lambda[1], sum_lambda[2], sum_lambda[3]);
    out << (sum_json ? s.to_json_text() + "\n" : s.render_text());
    return 0;
  }

  if (hom->parsed()) {
    CoveringQuiver ctx(CoveringParams{hom_gamma[0], hom_gamma[1], hom_gamma[2]});
    return cmd_hom(ctx, hom_x, hom_y, hom_shifts, hom_json, out);
  }

  if (win->parsed()) {
    if (win_dot.empty() && win_json_path.empty())
      throw UsageError{"ar-window needs --dot PATH and/or --json PATH"};
    CoveringQuiver ctx(CoveringParams{win_gamma[0], win_gamma[1], win_gamma[2]});
    OrbitObject center = make_orbit(ctx, ctx.parse_interval(win_center));
    MeshGraph g = ar_window(ctx, center, win_radius);
    auto write_file = [&](const std::string& path, const std::string& text) {
      std::ofstream f(path);
      if (!f) throw UsageError{"cannot write '" + path + "'"};
      f << text;
    };
    if (!win_dot.empty()) write_file(win_dot, g.to_dot());
    if (!win_json_path.empty()) write_file(win_json_path, g.to_json_text());
    out << "ar-window: " << g.nodes.size() << " nodes, " << g.edges.size()
        << " edges, " << g.triangles.size() << " meshes\n";
    return 0;
  }

  if (verify->parsed()) {
    CoveringQuiver ctx(CoveringParams{verify_gamma[0], verify_gamma[1], verify_gamma[2]});
    return cmd_verify(ctx, verify_samples, verify_seed, out);
  }

  if (conj->parsed()) {
    GradedAlgebraPresentation pres = load_file(conj_file, err);
    ConjectureReport rep = conjecture_check(pres);
    if (conj_json) {
      out << json{{"graded_clock", rep.graded_clock},
                  {"normal_form", rep.nf.render()},
                  {"degree_zero_class", rep.degree_zero_class},
                  {"agree", rep.agree},
                  {"clock", clock_json(rep.clocks)}}
                 .dump(2)
          << "\n";
    } else {
      out << "graded_clock: " << (rep.graded_clock ? "true" : "false") << "\n";
      out << "normal_form: " << rep.nf.render() << "\n";
      out << "degree_zero_class: " << (rep.degree_zero_class ? "true" : "false") << "\n";
      out << "conjecture: " << (rep.agree ? "agree" : "DISAGREE") << "\n";
    }
    return rep.agree ? 0 : 1;
  }

  throw UsageError{"no subcommand"};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace gentle
