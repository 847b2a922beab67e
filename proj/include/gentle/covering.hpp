#ifndef GENTLE_COVERING_HPP
#define GENTLE_COVERING_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

/// Parameters of a graded affine-A covering: p >= 0, q >= 1, r != 0.
struct CoveringParams {
  int p = 0;
  int q = 1;
  int r = 1;

  friend bool operator==(const CoveringParams&, const CoveringParams&) = default;
};

/// One interval module M_{a,b} living on copy `copy` of the covering quiver:
/// support is the vertex range [b, a-1], maps are identities inside it.
/// a = nullopt means +infinity, b = nullopt means -infinity; a > b required.
struct Interval {
  CoveringParams params;
  int copy = 0;
  std::optional<long long> a;  // upper cut (exclusive end of support + 1)
  std::optional<long long> b;  // lower cut (first supported vertex)

  bool finite() const { return a.has_value() && b.has_value(); }
  long long dimension() const;                 // finite only
  bool simple() const { return finite() && *a == *b + 1; }
  long long lo() const { return *b; }          // finite b only
  long long hi() const { return *a - 1; }      // finite a only

  std::string render() const;                  // "M(j; a, b)"
  friend bool operator==(const Interval&, const Interval&) = default;
  friend bool operator<(const Interval& x, const Interval& y);
};

/// Disjoint union of |r| copies of the linear (p = 0) or generalized zigzag
/// (p > 0) A-double-infinity quiver, with the degree-shift automorphism sigma.
/// The zigzag pattern has period p+q: local sources at i = 1 mod p+q, local
/// sinks at i = p+1 mod p+q, ascending arrows i -> i+1 for i = 1..p, and
/// descending runs from each source down to the previous sink.
class CoveringQuiver {
public:
  explicit CoveringQuiver(CoveringParams params);

  const CoveringParams& params() const { return params_; }
  int copies() const;                // |r|
  int period() const;                // p+q (zigzag) or q (linear)
  bool linear() const { return params_.p == 0; }

  /// Direction of the edge {i, i+1}: true = arrow i -> i+1.
  bool up(long long i) const;
  bool is_source(long long i) const;   // two arrows out (zigzag) / never (linear)
  bool is_sink(long long i) const;     // no arrows out

  long long s_shift(long long i, int power = 1) const;  // the automorphism s

  Interval interval(int copy, std::optional<long long> a,
                    std::optional<long long> b) const;
  Interval parse_interval(const std::string& text) const;  // "M(j;a,b)"

  /// sigma_* applied k times (k may be negative). Realizes the internal
  /// degree shift <k> on graded modules.
  Interval apply_degree_shift(const Interval& m, int k) const;

  /// Residue of a vertex in {1, ..., period()}.
  int residue(long long i) const;

private:
  CoveringParams params_;
  Interval sigma_once(const Interval& m) const;
  Interval sigma_inverse_once(const Interval& m) const;
};

/// Vertex-by-vertex image of an interval module under the covering
/// equivalence: which algebra vertex and internal degree each covering vertex
/// represents. Normalized so that applying the degree shift <1> agrees with
/// sigma_* exactly.
struct CoveringDescriptorEntry {
  long long covering_vertex = 0;
  int algebra_vertex = 0;       // in 1..p+q (zigzag) or 1..q (linear)
  long long internal_degree = 0;
};

struct GradedModuleDescriptor {
  Interval module;
  std::vector<CoveringDescriptorEntry> entries;
};

GradedModuleDescriptor covering_descriptor(const CoveringQuiver& ctx,
                                           const Interval& m);

} // namespace gentle

#endif
