#ifndef GENTLE_QUIVER_HPP
#define GENTLE_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

struct Arrow {
  int id = 0;
  int src = 0;
  int dst = 0;
  int deg = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver with integer vertex/arrow ids and an integer degree on each
/// arrow. Parallel arrows and loops are allowed at this layer.
struct GradedQuiver {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Arrow> arrows;  // sorted by id, ids unique

  bool has_vertex(int v) const;
  const Arrow* arrow(int id) const;  // nullptr if absent
  const Arrow& arrow_or_throw(int id) const;

  friend bool operator==(const GradedQuiver&, const GradedQuiver&) = default;
};

/// Length-2 relations. A stored pair (f, g) means the composite "g then f"
/// vanishes; the conventional display "fg" composes right-to-left.
struct RelationSet {
  std::vector<std::pair<int, int>> pairs;  // sorted, unique

  bool contains(int f, int g) const;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

struct GradedAlgebraPresentation {
  GradedQuiver quiver;
  RelationSet relations;
  std::map<int, std::string> arrow_names;  // display names, defaulted when absent

  std::string arrow_name(int id) const;

  friend bool operator==(const GradedAlgebraPresentation&,
                         const GradedAlgebraPresentation&) = default;
};

/// Throws errc::bad_argument if ids clash, endpoints are missing, or a
/// relation pair is not composable / duplicated.
void validate(const GradedAlgebraPresentation& p);

/// A path in diagrammatic (left-to-right) order: arrows[0] is applied first.
/// Empty arrow list = identity path at `source` (== `target`).
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

Path identity_path(int vertex);
Path arrow_path(const GradedQuiver& q, int arrow_id);

/// Concatenation when target(p1) == source(p2); errc::not_composable otherwise.
Path compose_paths(const GradedQuiver& q, const Path& p1, const Path& p2);

struct AnnotatedPath {
  Path path;
  int degree = 0;

  friend bool operator==(const AnnotatedPath&, const AnnotatedPath&) = default;
};

/// All paths of length <= max_len that contain no length-2 subpath from the
/// relation set, annotated with total degree. Deterministic order: by length,
/// then by source vertex, then lexicographically by arrow ids.
std::vector<AnnotatedPath> enumerate_paths(const GradedAlgebraPresentation& p,
                                           int max_len);

/// One arrow of the (unique) cycle together with its traversal sign:
/// +1 if the arrow points along the canonical traversal, -1 otherwise.
struct CycleArrow {
  int arrow_id = 0;
  int sign = 0;
};

struct CycleCensus {
  bool connected = false;
  int cycle_count = 0;                  // #arrows - #vertices + 1 when connected
  std::vector<CycleArrow> cycle;        // in traversal order; empty unless count == 1
  std::vector<int> cycle_vertices;      // traversal order, cycle_vertices[k] = source of step k
  bool fully_oriented = false;          // all traversal signs equal +1
};

/// Cycle census of the underlying undirected multigraph. Requires a connected
/// quiver (errc::disconnected otherwise). When exactly one independent cycle
/// exists, returns its arrows with traversal signs. Canonical traversal:
/// fully oriented cycles are walked along their orientation; otherwise start
/// at the smallest vertex id on the cycle and proceed toward the incident
/// cycle edge with the smallest arrow id.
CycleCensus underlying_graph_cycles(const GradedAlgebraPresentation& p);

} // namespace gentle

#endif
