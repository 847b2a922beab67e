#ifndef GENTLE_TESTS_FIXTURES_HPP
#define GENTLE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "gentle/analysis.hpp"
#include "gentle/dsl.hpp"

namespace gentle::testing {

/// 1 <--> 2 --> 3 with the composites 2->1->2 and 1->2->3 vanishing.
inline GradedAlgebraPresentation example71() {
  ParseResult r = parse(SourceDocument{
      "vertices: 1 2 3\n"
      "arrow a: 1 -> 2\n"
      "arrow b: 2 -> 1\n"
      "arrow g: 2 -> 3\n"
      "rel b a\n"
      "rel a g\n"});
  if (!r.ok()) throw error(errc::bad_argument, "example71 fixture failed to parse");
  return *r.presentation;
}

/// Graded 2-cycle with one vanishing composite; graded equivalent to
/// Lambda(1,2,0,1).
inline GradedAlgebraPresentation graded_two_cycle() {
  ParseResult r = parse(SourceDocument{
      "vertices: 1 2\n"
      "arrow a: 1 -> 2 deg 1\n"
      "arrow b: 2 -> 1\n"
      "rel b a\n"});
  if (!r.ok()) throw error(errc::bad_argument, "two-cycle fixture failed to parse");
  return *r.presentation;
}

inline GradedAlgebraPresentation relabel(const GradedAlgebraPresentation& p,
                                         std::mt19937_64& rng) {
  std::vector<int> verts = p.quiver.vertices;
  std::vector<int> new_vids(verts.size());
  std::uniform_int_distribution<int> dist(-50, 200);
  std::map<int, int> vmap;
  for (size_t i = 0; i < verts.size(); ++i) {
    int v;
    do {
      v = dist(rng);
    } while (std::any_of(vmap.begin(), vmap.end(),
                         [&](auto& kv) { return kv.second == v; }));
    vmap[verts[i]] = v;
  }
  std::map<int, int> amap;
  for (const Arrow& a : p.quiver.arrows) {
    int id;
    do {
      id = dist(rng);
    } while (std::any_of(amap.begin(), amap.end(),
                         [&](auto& kv) { return kv.second == id; }));
    amap[a.id] = id;
  }
  GradedAlgebraPresentation out;
  for (int v : verts) out.quiver.vertices.push_back(vmap[v]);
  std::sort(out.quiver.vertices.begin(), out.quiver.vertices.end());
  for (const Arrow& a : p.quiver.arrows)
    out.quiver.arrows.push_back({amap[a.id], vmap[a.src], vmap[a.dst], a.deg});
  std::sort(out.quiver.arrows.begin(), out.quiver.arrows.end(),
            [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  for (auto [f, g] : p.relations.pairs) out.relations.pairs.push_back({amap[f], amap[g]});
  std::sort(out.relations.pairs.begin(), out.relations.pairs.end());
  validate(out);
  return out;
}

inline GradedAlgebraPresentation random_regrade(const GradedAlgebraPresentation& p,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::map<int, int> weights;
  for (int v : p.quiver.vertices) weights[v] = dist(rng);
  return regrade(p, weights);
}

} // namespace gentle::testing

#endif
