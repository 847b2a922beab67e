#ifndef GENTLE_REP_CALCULUS_HPP
#define GENTLE_REP_CALCULUS_HPP

#include <vector>

#include "gentle/covering.hpp"

namespace gentle {

/// Component families of Rep of the covering quiver, following the zigzag
/// inventory (P glues preprojectives and preinjectives at the derived level)
/// and the linear inventory {X, Y, Z, A}.
enum class Family { P, X, X1, X2, Y, Y1, Y2, Z, Z1, Z2, A };

enum class ComponentShape { ZAInfinity, ZAInfinityInfinity, LinearAInfinityInfinity, A1 };

struct ComponentTag {
  Family family = Family::X;
  int copy = 0;
  ComponentShape shape = ComponentShape::ZAInfinity;

  std::string render() const;
  friend bool operator==(const ComponentTag&, const ComponentTag&) = default;
};

const char* family_name(Family f);
const char* shape_name(ComponentShape s);

/// dim Hom between interval modules: 0 or 1, decided at the boundary vertices
/// of the support intersection. errc::mixed_quiver on parameter mismatch.
int hom_dim(const CoveringQuiver& ctx, const Interval& m, const Interval& n);

/// dim Ext^1 from the projective presentation 0 -> P1 -> P0 -> M -> 0:
/// cokernel dimension of Hom(P0,N) -> Hom(P1,N), evaluated via exactness as
/// dim Hom(P1,N) - dim Hom(P0,N) + dim Hom(M,N). M must be finite.
int ext1_dim(const CoveringQuiver& ctx, const Interval& m, const Interval& n);

/// Local sources / sinks of the support (finite intervals).
std::vector<long long> tops(const CoveringQuiver& ctx, const Interval& m);
std::vector<long long> bottoms(const CoveringQuiver& ctx, const Interval& m);

/// Indecomposable projective / injective at a covering vertex, as intervals.
Interval projective_interval(const CoveringQuiver& ctx, int copy, long long v);
Interval injective_interval(const CoveringQuiver& ctx, int copy, long long v);

bool is_projective(const CoveringQuiver& ctx, const Interval& m);
bool is_injective(const CoveringQuiver& ctx, const Interval& m);

/// Projective presentation data: P0 = sum of P_t over tops, P1 = sum of P_w
/// over syzygy vertices, with the adjacency used by the connecting map.
struct Presentation {
  std::vector<long long> top_vertices;
  struct SyzygyPiece {
    long long vertex;
    std::vector<long long> adjacent_tops;  // 1 or 2 entries
  };
  std::vector<SyzygyPiece> syzygy;
};

Presentation projective_presentation(const CoveringQuiver& ctx, const Interval& m);

/// Auslander-Reiten translate in rep(Q). Linear orientation: M_{a+1,b+1};
/// zigzag: DTr by explicit linear algebra (kernel of the Nakayama image of
/// the presentation). Errors: ProjectiveInput, InfiniteDimensionalInput.
Interval ar_translate(const CoveringQuiver& ctx, const Interval& m);

/// Inverse translate TrD; errc::bad_argument on injective input.
Interval ar_translate_inverse(const CoveringQuiver& ctx, const Interval& m);

/// Translate in the orbit category: projectives continue into the injective
/// side of the previous degree (tau P_v = sigma^{-1} I_v) and vice versa, so
/// iteration never leaves the interval calculus.
Interval derived_translate(const CoveringQuiver& ctx, const Interval& m);
Interval derived_translate_inverse(const CoveringQuiver& ctx, const Interval& m);

ComponentTag classify_component(const CoveringQuiver& ctx, const Interval& m);

/// All interval modules supported inside [lo, hi] on the given copy, plus the
/// infinite intervals whose finite support boundary lies inside the window.
std::vector<Interval> enumerate_window(const CoveringQuiver& ctx, int copy,
                                       long long lo, long long hi);

/// Independent Hom oracle: dimension of the solution space of the commutation
/// equations over a finite window with `slack` extra vertices per side
/// (infinite supports truncated at the window edge).
int window_oracle_hom(const CoveringQuiver& ctx, const Interval& m,
                      const Interval& n, int slack);

} // namespace gentle

#endif
