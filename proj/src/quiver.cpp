#include "gentle/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gentle {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_composable: return "NotComposable";
    case errc::disconnected: return "Disconnected";
    case errc::not_one_cycle: return "NotOneCycle";
    case errc::not_gentle: return "NotGentle";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::not_finite_dimensional: return "NotFiniteDimensional";
    case errc::mixed_quiver: return "MixedQuiver";
    case errc::infinite_dimensional: return "InfiniteDimensional";
    case errc::projective_input: return "ProjectiveInput";
    case errc::r_zero: return "RZero";
    case errc::unsupported_shape: return "UnsupportedShape";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::degenerate_boundary: return "DegenerateBoundary";
    case errc::bad_interval: return "BadInterval";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

bool GradedQuiver::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

const Arrow* GradedQuiver::arrow(int id) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), id,
                             [](const Arrow& a, int x) { return a.id < x; });
  if (it == arrows.end() || it->id != id) return nullptr;
  return &*it;
}

const Arrow& GradedQuiver::arrow_or_throw(int id) const {
  const Arrow* a = arrow(id);
  if (!a) throw error(errc::bad_argument, "no arrow with id " + std::to_string(id));
  return *a;
}

bool RelationSet::contains(int f, int g) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(f, g));
}

std::string GradedAlgebraPresentation::arrow_name(int id) const {
  auto it = arrow_names.find(id);
  if (it != arrow_names.end()) return it->second;
  return "a" + std::to_string(id);
}

void validate(const GradedAlgebraPresentation& p) {
  const auto& q = p.quiver;
  for (size_t i = 1; i < q.vertices.size(); ++i)
    if (q.vertices[i - 1] >= q.vertices[i])
      throw error(errc::bad_argument, "vertex list not sorted/unique");
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (i > 0 && q.arrows[i - 1].id >= a.id)
      throw error(errc::bad_argument, "arrow ids not sorted/unique");
    if (!q.has_vertex(a.src) || !q.has_vertex(a.dst))
      throw error(errc::bad_argument,
                  "arrow " + std::to_string(a.id) + " references missing vertex");
  }
  for (size_t i = 0; i < p.relations.pairs.size(); ++i) {
    auto [f, g] = p.relations.pairs[i];
    if (i > 0 && !(p.relations.pairs[i - 1] < p.relations.pairs[i]))
      throw error(errc::bad_argument, "relation pairs not sorted/unique");
    const Arrow* fa = q.arrow(f);
    const Arrow* ga = q.arrow(g);
    if (!fa || !ga)
      throw error(errc::bad_argument, "relation references missing arrow");
    if (ga->dst != fa->src)
      throw error(errc::not_composable,
                  "relation (" + p.arrow_name(f) + "," + p.arrow_name(g) +
                      ") is not a length-2 path");
  }
}

Path identity_path(int vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const GradedQuiver& q, int arrow_id) {
  const Arrow& a = q.arrow_or_throw(arrow_id);
  return Path{a.src, a.dst, {arrow_id}};
}

Path compose_paths(const GradedQuiver& q, const Path& p1, const Path& p2) {
  (void)q;
  if (p1.target != p2.source)
    throw error(errc::not_composable,
                "target " + std::to_string(p1.target) + " != source " +
                    std::to_string(p2.source));
  Path out;
  out.source = p1.source;
  out.target = p2.target;
  out.arrows = p1.arrows;
  out.arrows.insert(out.arrows.end(), p2.arrows.begin(), p2.arrows.end());
  return out;
}

std::vector<AnnotatedPath> enumerate_paths(const GradedAlgebraPresentation& p,
                                           int max_len) {
  if (max_len < 0) throw error(errc::bad_argument, "max_len must be >= 0");
  const auto& q = p.quiver;

  // arrows grouped by source, sorted by id for deterministic output
  std::map<int, std::vector<const Arrow*>> out_of;
  for (const Arrow& a : q.arrows) out_of[a.src].push_back(&a);

  std::vector<AnnotatedPath> result;
  for (int v : q.vertices) result.push_back({identity_path(v), 0});

  // breadth-first by length; a path is nonzero iff no adjacent pair lies in I
  std::vector<AnnotatedPath> frontier = result;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AnnotatedPath> next;
    for (const AnnotatedPath& ap : frontier) {
      auto it = out_of.find(ap.path.target);
      if (it == out_of.end()) continue;
      for (const Arrow* a : it->second) {
        if (!ap.path.arrows.empty() &&
            p.relations.contains(a->id, ap.path.arrows.back()))
          continue;  // appending a kills the path: (a, last) in I
        AnnotatedPath ext = ap;
        ext.path.arrows.push_back(a->id);
        ext.path.target = a->dst;
        ext.degree += a->deg;
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end(), [](const AnnotatedPath& x, const AnnotatedPath& y) {
      if (x.path.source != y.path.source) return x.path.source < y.path.source;
      return x.path.arrows < y.path.arrows;
    });
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return result;
}

namespace {

// Undirected incidence, loops listed once.
struct Incidence {
  // vertex -> list of (arrow id, other endpoint)
  std::map<int, std::vector<std::pair<int, int>>> adj;
};

Incidence build_incidence(const GradedQuiver& q) {
  Incidence inc;
  for (int v : q.vertices) inc.adj[v];
  for (const Arrow& a : q.arrows) {
    inc.adj[a.src].push_back({a.id, a.dst});
    if (a.src != a.dst) inc.adj[a.dst].push_back({a.id, a.src});
  }
  for (auto& [v, lst] : inc.adj) std::sort(lst.begin(), lst.end());
  return inc;
}

bool is_connected(const GradedQuiver& q, const Incidence& inc) {
  if (q.vertices.empty()) return true;
  std::set<int> seen;
  std::queue<int> bfs;
  bfs.push(q.vertices.front());
  seen.insert(q.vertices.front());
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (auto [aid, w] : inc.adj.at(v))
      if (seen.insert(w).second) bfs.push(w);
  }
  return seen.size() == q.vertices.size();
}

} // namespace

CycleCensus underlying_graph_cycles(const GradedAlgebraPresentation& p) {
  const auto& q = p.quiver;
  Incidence inc = build_incidence(q);
  if (!is_connected(q, inc)) throw error(errc::disconnected, "quiver is not connected");

  CycleCensus census;
  census.connected = true;
  census.cycle_count =
      static_cast<int>(q.arrows.size()) - static_cast<int>(q.vertices.size()) + 1;
  if (census.cycle_count != 1) return census;

  // 2-core: iteratively strip degree-1 vertices; what remains is the cycle.
  std::map<int, int> degree;  // undirected degree, loop counts 2
  for (int v : q.vertices) degree[v] = 0;
  for (const Arrow& a : q.arrows) {
    degree[a.src]++;
    degree[a.dst]++;
  }
  std::set<int> removed_vertices;
  std::set<int> removed_arrows;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : q.vertices) {
      if (removed_vertices.count(v) || degree[v] != 1) continue;
      for (auto [aid, w] : inc.adj.at(v)) {
        if (removed_arrows.count(aid)) continue;
        removed_arrows.insert(aid);
        degree[v]--;
        degree[w]--;
        break;
      }
      removed_vertices.insert(v);
      changed = true;
    }
  }

  std::vector<const Arrow*> cyc;
  for (const Arrow& a : q.arrows)
    if (!removed_arrows.count(a.id)) cyc.push_back(&a);

  // loop cycle
  if (cyc.size() == 1 && cyc[0]->src == cyc[0]->dst) {
    census.cycle = {{cyc[0]->id, +1}};
    census.cycle_vertices = {cyc[0]->src};
    census.fully_oriented = true;
    return census;
  }

  std::set<int> cyc_vertices;
  std::map<int, std::vector<const Arrow*>> cyc_at;  // vertex -> incident cycle arrows
  for (const Arrow* a : cyc) {
    cyc_vertices.insert(a->src);
    cyc_vertices.insert(a->dst);
    cyc_at[a->src].push_back(a);
    if (a->src != a->dst) cyc_at[a->dst].push_back(a);
  }
  for (auto& [v, lst] : cyc_at)
    std::sort(lst.begin(), lst.end(),
              [](const Arrow* x, const Arrow* y) { return x->id < y->id; });

  // walk from the smallest cycle vertex toward the smallest-id incident arrow
  int start = *cyc_vertices.begin();
  int cur = start;
  const Arrow* edge = cyc_at[start].front();
  std::vector<CycleArrow> walk;
  std::vector<int> walk_vertices;
  std::set<int> used;
  for (size_t step = 0; step < cyc.size(); ++step) {
    walk_vertices.push_back(cur);
    int sign = (edge->src == cur) ? +1 : -1;
    walk.push_back({edge->id, sign});
    used.insert(edge->id);
    int nxt = (edge->src == cur) ? edge->dst : edge->src;
    if (step + 1 < cyc.size()) {
      const Arrow* next_edge = nullptr;
      for (const Arrow* cand : cyc_at[nxt])
        if (!used.count(cand->id)) {
          next_edge = cand;
          break;
        }
      if (!next_edge)
        throw error(errc::bad_argument, "cycle walk failed (malformed 2-core)");
      cur = nxt;
      edge = next_edge;
    }
  }

  bool all_minus = std::all_of(walk.begin(), walk.end(),
                               [](const CycleArrow& c) { return c.sign == -1; });
  if (all_minus) {
    // fully oriented against the walk: follow the orientation instead, so that
    // oriented cycles always come out with sign +1 regardless of labeling
    std::reverse(walk.begin(), walk.end());
    std::reverse(walk_vertices.begin(), walk_vertices.end());
    for (CycleArrow& c : walk) c.sign = +1;
    // after reversal, vertex k should be the tail of step k: rotate so that
    // walk_vertices[k] = vertex where step k starts
    std::vector<int> verts(walk.size());
    for (size_t k = 0; k < walk.size(); ++k)
      verts[k] = q.arrow_or_throw(walk[k].arrow_id).src;
    walk_vertices = std::move(verts);
  }
  census.cycle = std::move(walk);
  census.cycle_vertices = std::move(walk_vertices);
  census.fully_oriented =
      std::all_of(census.cycle.begin(), census.cycle.end(),
                  [](const CycleArrow& c) { return c.sign == +1; });
  return census;
}

} // namespace gentle
