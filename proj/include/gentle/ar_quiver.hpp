#ifndef GENTLE_AR_QUIVER_HPP
#define GENTLE_AR_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/orbit.hpp"

namespace gentle {

struct ComponentEntry {
  std::string family;
  std::string shape;
  std::optional<int> count;  // nullopt = a Z-indexed family of components
  std::string index_range;
};

struct TauRelationEntry {
  std::string family;
  int tau_exponent = 0;
  int sigma_exponent = 0;
  std::string scope;  // which category carries the relation ("Dfd", "per")
};

struct ARQuiverSummary {
  std::string category;
  std::vector<ComponentEntry> components;
  std::optional<int> total_components;  // nullopt when some family is Z-indexed
  int suspension_order = 0;             // 0 = Z-action (no finite cyclic order)
  std::string suspension;
  std::vector<TauRelationEntry> tau_relations;
  std::vector<std::string> notes;

  std::string to_json_text() const;
  std::string render_text() const;
};

ARQuiverSummary summary_gamma(int p, int q, int r);
ARQuiverSummary summary_gamma_prime(int q, int r);
ARQuiverSummary summary_lambda(int r, int n, int m, int d);

/// Middle terms of the Auslander-Reiten triangle ending at x, as orbit-level
/// interval modules. For non-projective x these are the two endpoint
/// crossovers of (x, tau x); for a projective P_v they are the radical pieces
/// together with the degree-shifted socle-quotient pieces of I_v.
std::vector<Interval> ar_middle_terms(const CoveringQuiver& ctx, const Interval& x);

struct MeshNode {
  OrbitObject object;
  ComponentTag tag;
};

struct MeshEdge {
  int src = 0;
  int dst = 0;
  enum class Kind { Mesh, Tau } kind = Kind::Mesh;
};

struct MeshTriangle {
  int x = 0;                 // node index of the end term
  int tau_x = 0;             // node index of tau x
  std::vector<int> middles;  // node indices, multiplicity one each
};

struct MeshGraph {
  CoveringParams params;
  std::vector<MeshNode> nodes;
  std::vector<MeshEdge> edges;
  std::vector<MeshTriangle> triangles;

  int index_of(const OrbitObject& o) const;  // -1 if absent
  std::string to_dot() const;
  std::string to_json_text() const;
};

/// Mesh window of the AR quiver around `center`: nodes within `radius`
/// tau/mesh steps, mesh edges from the AR triangles, dashed tau edges.
/// Families of type X/X1/X2/P only (errc::unsupported_family otherwise).
MeshGraph ar_window(const CoveringQuiver& ctx, const OrbitObject& center, int radius);

} // namespace gentle

#endif
