#ifndef GENTLE_ANALYSIS_HPP
#define GENTLE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/finite_rep.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

struct GentleViolation {
  int condition = 0;  // 1..4
  int vertex = INT_UNSET;
  int arrow = INT_UNSET;
  std::string note;

  static constexpr int INT_UNSET = -1000000;
};

struct GentleReport {
  bool is_gentle = false;
  std::vector<GentleViolation> violations;
  bool connected = false;
  int cycle_count = 0;
};

/// The four local gentleness conditions, each evaluated literally; witnesses
/// name the offending vertex or arrow.
GentleReport check_gentle(const GradedAlgebraPresentation& p);

struct ClockInvariants {
  int cw_relations = 0;
  int ccw_relations = 0;
  int cw_degree_sum = 0;
  int ccw_degree_sum = 0;
  int d_plus = 0;   // cw_relations - cw_degree_sum
  int d_minus = 0;  // ccw_relations - ccw_degree_sum
  bool clock = false;        // cw_relations == ccw_relations
  bool graded_clock = false; // d_plus == d_minus
};

/// Clock data relative to the canonical cycle traversal. A relation counts as
/// clockwise iff both its arrows lie on the cycle with traversal sign +1;
/// relations touching non-cycle arrows belong to neither class.
/// Requires gentle, connected, exactly one cycle.
ClockInvariants clock_invariants(const GradedAlgebraPresentation& p);

/// Sum of sign(arrow) * deg(arrow) over the cycle; invariant under vertex
/// regrading. Requires connected, exactly one cycle.
int signed_cycle_degree(const GradedAlgebraPresentation& p);

/// deg'(a) = deg(a) + weights[src(a)] - weights[dst(a)]; graded equivalence.
GradedAlgebraPresentation regrade(const GradedAlgebraPresentation& p,
                                  const std::map<int, int>& weights);

/// True iff no oriented cycle of arrows has every consecutive composite in
/// the relation set. Requires gentle.
bool has_finite_global_dimension(const GradedAlgebraPresentation& p);

enum class ShapeTag { Gamma, Lambda, GammaPrime, Unrecognized };

struct ShapeMatch {
  ShapeTag tag = ShapeTag::Unrecognized;
  // Gamma: (p, q, r) raw, sign of r traversal-dependent for mixed cycles
  int p = 0, q = 0, r = 0;
  // Lambda: (r, n, m, d)
  int lam_r = 0, lam_n = 0, lam_m = 0, lam_d = 0;
  // GammaPrime: (q, r)
  int gp_q = 0, gp_r = 0;
  // vertex correspondence to the builtin presentation, when a genuine quiver
  // isomorphism exists (Lambda / GammaPrime)
  std::map<int, int> vertex_map;
};

/// Recognize the Gamma / Lambda / GammaPrime families up to relabeling and
/// regrading. Full-relation oriented cycles without a tail come back as
/// GammaPrime (Lambda(n,n,0,d) denotes the same presentation).
/// Requires gentle, connected, exactly one cycle.
ShapeMatch match_shape(const GradedAlgebraPresentation& p);

} // namespace gentle

#endif
