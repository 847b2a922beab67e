#include "gentle/orbit.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

std::uint64_t rng_next(std::uint64_t& state) {
  // xorshift64*; fixed here so verify reports are byte-identical across
  // platforms for a given seed
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return state * 0x2545F4914F6CDD1DULL;
}

long long rng_range(std::uint64_t& state, long long lo, long long hi) {
  if (lo > hi) throw error(errc::bad_argument, "rng_range: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng_next(state) % span);
}

OrbitObject make_orbit(const CoveringQuiver& ctx, const Interval& m) {
  if (m.params != ctx.params())
    throw error(errc::mixed_quiver, "interval belongs to a different parameter triple");
  return OrbitObject{m};
}

OrbitObject make_orbit(const CoveringQuiver& ctx, const DerivedObject& d) {
  // (M, s) ~ (sigma_*^s M, 0)
  return OrbitObject{ctx.apply_degree_shift(d.module, d.shift)};
}

OrbitObject suspend(const CoveringQuiver& ctx, const OrbitObject& x, int n) {
  return OrbitObject{ctx.apply_degree_shift(x.rep, n)};
}

bool orbit_isomorphic(const CoveringQuiver& ctx, const OrbitObject& x,
                      const OrbitObject& y) {
  (void)ctx;
  return x.rep == y.rep;
}

bool orbit_isomorphic_search(const CoveringQuiver& ctx, const DerivedObject& x,
                             const DerivedObject& y, int bound) {
  for (int p = -bound; p <= bound; ++p) {
    // Phi^p (M, s) = (sigma_*^{-p} M, s + p)
    DerivedObject shifted{ctx.apply_degree_shift(y.module, -p), y.shift + p};
    if (shifted.shift == x.shift && shifted.module == x.module) return true;
  }
  return false;
}

int orbit_hom_dim(const CoveringQuiver& ctx, const OrbitObject& x,
                  const OrbitObject& y, int n) {
  if (!x.rep.finite() || !y.rep.finite())
    throw error(errc::infinite_dimensional,
                "orbit_hom_dim requires finite-dimensional objects");
  Interval yn = ctx.apply_degree_shift(y.rep, n);
  Interval yn1 = ctx.apply_degree_shift(y.rep, n - 1);
  return hom_dim(ctx, x.rep, yn) + ext1_dim(ctx, x.rep, yn1);
}

namespace {

// valid interval cut residues per regular family (see classify_component)
std::vector<int> family_residues(const CoveringQuiver& ctx, Family f) {
  int p = ctx.params().p, q = ctx.params().q;
  std::vector<int> out;
  if (ctx.linear()) {
    for (int i = 1; i <= q; ++i) out.push_back(i);  // every residue
    return out;
  }
  if (f == Family::X1) {
    out.push_back(1);
    for (int i = p + 2; i <= p + q; ++i) out.push_back(i);
  } else {
    for (int i = 2; i <= p + 1; ++i) out.push_back(i);
  }
  return out;
}

} // namespace

Interval sample_in_family(const CoveringQuiver& ctx, Family family,
                          std::uint64_t& rng_state) {
  int per = ctx.period();
  int copy = static_cast<int>(rng_range(rng_state, 0, ctx.copies() - 1));
  switch (family) {
    case Family::X: {
      long long b = rng_range(rng_state, -3LL * per, 3LL * per);
      long long len = rng_range(rng_state, 1, 3LL * per);
      return ctx.interval(copy, b + len, b);
    }
    case Family::X1:
    case Family::X2: {
      std::vector<int> res = family_residues(ctx, family);
      // pick a valid left cut, then a valid right cut a few periods out
      long long base = rng_range(rng_state, -3, 3) * per;
      long long b = base + res[rng_range(rng_state, 0, static_cast<long long>(res.size()) - 1)];
      // candidate right cuts: valid residues within (b, b + 3 periods]
      std::vector<long long> candidates;
      for (long long a = b + 1; a <= b + 3LL * per; ++a)
        if (std::find(res.begin(), res.end(), ctx.residue(a)) != res.end())
          candidates.push_back(a);
      long long a = candidates[rng_range(rng_state, 0, static_cast<long long>(candidates.size()) - 1)];
      Interval m = ctx.interval(copy, a, b);
      ComponentTag tag = classify_component(ctx, m);
      if (tag.family != family)
        throw error(errc::bad_argument, "sample_in_family: residue bookkeeping failed");
      return m;
    }
    case Family::P: {
      // rejection sampling over mixed-residue intervals
      for (int tries = 0; tries < 256; ++tries) {
        long long b = rng_range(rng_state, -3LL * per, 3LL * per);
        long long len = rng_range(rng_state, 1, 3LL * per);
        Interval m = ctx.interval(copy, b + len, b);
        if (classify_component(ctx, m).family == Family::P) return m;
      }
      throw error(errc::bad_argument, "sample_in_family: could not hit the P family");
    }
    case Family::Y:
    case Family::Y1:
    case Family::Y2: {
      for (int tries = 0; tries < 256; ++tries) {
        long long b = rng_range(rng_state, -3LL * per, 3LL * per);
        Interval m = ctx.interval(copy, std::nullopt, b);
        if (classify_component(ctx, m).family == family) return m;
      }
      throw error(errc::bad_argument, "sample_in_family: no such Y member");
    }
    case Family::Z:
    case Family::Z1:
    case Family::Z2: {
      for (int tries = 0; tries < 256; ++tries) {
        long long a = rng_range(rng_state, -3LL * per, 3LL * per);
        Interval m = ctx.interval(copy, a, std::nullopt);
        if (classify_component(ctx, m).family == family) return m;
      }
      throw error(errc::bad_argument, "sample_in_family: no such Z member");
    }
    case Family::A:
      return ctx.interval(copy, std::nullopt, std::nullopt);
  }
  throw error(errc::bad_argument, "sample_in_family: unhandled family");
}

std::string TauSigmaReport::render() const {
  std::ostringstream os;
  os << "family " << family_name(family) << ": ";
  if (relations.empty()) {
    os << "no tau^k = Sigma^e relation held on " << samples << " samples";
  } else {
    for (size_t i = 0; i < relations.size(); ++i) {
      if (i) os << ", ";
      os << "tau^" << relations[i].tau_exponent << " = Sigma^"
         << relations[i].sigma_exponent;
    }
    os << " (on " << samples << " samples)";
  }
  return os.str();
}

TauSigmaReport verify_tau_sigma(const CoveringQuiver& ctx, Family family,
                                int samples, std::uint64_t seed) {
  if (samples < 1) throw error(errc::bad_argument, "samples must be >= 1");
  TauSigmaReport report;
  report.family = family;
  report.samples = samples;

  int p = ctx.params().p, q = ctx.params().q, r = ctx.params().r;
  std::vector<int> exponents;
  if (p >= 1) exponents.push_back(p);
  if (std::find(exponents.begin(), exponents.end(), q) == exponents.end())
    exponents.push_back(q);
  std::vector<int> sigma_exps = {r, -r};
  if (r == -r) sigma_exps = {r};

  std::vector<TauSigmaRelation> candidates;
  for (int k : exponents)
    for (int e : sigma_exps) candidates.push_back({k, e});
  std::sort(candidates.begin(), candidates.end());

  std::uint64_t state = seed ? seed : 0x9E3779B97F4A7C15ULL;
  std::vector<Interval> pool;
  for (int i = 0; i < samples; ++i) pool.push_back(sample_in_family(ctx, family, state));

  for (const TauSigmaRelation& cand : candidates) {
    bool holds = true;
    for (const Interval& m : pool) {
      Interval t = m;
      bool defined = true;
      for (int step = 0; step < cand.tau_exponent; ++step) {
        try {
          t = derived_translate(ctx, t);
        } catch (const error&) {
          defined = false;
          break;
        }
      }
      if (!defined ||
          !orbit_isomorphic(ctx, make_orbit(ctx, t),
                            suspend(ctx, make_orbit(ctx, m), cand.sigma_exponent))) {
        holds = false;
        break;
      }
    }
    if (holds) report.relations.push_back(cand);
  }
  return report;
}

std::string SuspensionReport::render() const {
  std::ostringstream os;
  os << "family " << family_name(family) << ": suspension "
     << (family_preserved ? "preserves the family" : "LEAVES the family") << ", copy "
     << (copy_decrements ? "decrements mod |r|" : "does NOT decrement") << ", order "
     << (order_matches ? "matches |r|" : "does NOT match |r|") << " (" << samples
     << " samples)";
  return os.str();
}

SuspensionReport verify_suspension(const CoveringQuiver& ctx, Family family,
                                   int samples, std::uint64_t seed) {
  if (samples < 1) throw error(errc::bad_argument, "samples must be >= 1");
  SuspensionReport report;
  report.family = family;
  report.samples = samples;
  report.family_preserved = true;
  report.copy_decrements = true;
  report.order_matches = true;
  std::uint64_t state = seed ? seed : 0x9E3779B97F4A7C15ULL;
  int copies = ctx.copies();
  for (int i = 0; i < samples; ++i) {
    Interval m = sample_in_family(ctx, family, state);
    ComponentTag before = classify_component(ctx, m);
    Interval sm = ctx.apply_degree_shift(m, 1);
    ComponentTag after = classify_component(ctx, sm);
    if (after.family != before.family) report.family_preserved = false;
    if (after.copy != ((before.copy - 1) % copies + copies) % copies)
      report.copy_decrements = false;
    Interval back = ctx.apply_degree_shift(m, copies);
    ComponentTag again = classify_component(ctx, back);
    if (again.family != before.family || again.copy != before.copy)
      report.order_matches = false;
    // strictly smaller powers must move the copy index
    for (int t = 1; t < copies; ++t) {
      Interval part = ctx.apply_degree_shift(m, t);
      if (classify_component(ctx, part).copy == before.copy) report.order_matches = false;
    }
  }
  return report;
}

} // namespace gentle
