#include <doctest.h>

#include "fixtures.hpp"
#include "gentle/dsl.hpp"

using namespace gentle;
using gentle::testing::example71;

TEST_CASE("parse the documented fixture") {
  GradedAlgebraPresentation p = example71();
  CHECK(p.quiver.vertices == std::vector<int>{1, 2, 3});
  REQUIRE(p.quiver.arrows.size() == 3);
  CHECK(p.quiver.arrows[0] == Arrow{0, 1, 2, 0});
  CHECK(p.quiver.arrows[1] == Arrow{1, 2, 1, 0});
  CHECK(p.quiver.arrows[2] == Arrow{2, 2, 3, 0});
  // "rel b a" stores (a, b): b applied first; "rel a g" stores (g, a)
  CHECK(p.relations.pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}});
}

TEST_CASE("relation composability is checked diagrammatically") {
  // a then g: 1 -> 2 -> 3 composes; g then a does not
  ParseResult good = parse(SourceDocument{
      "vertices: 1 2 3\narrow a: 1 -> 2\narrow g: 2 -> 3\nrel a g\n"});
  CHECK(good.ok());
  ParseResult bad = parse(SourceDocument{
      "vertices: 1 2 3\narrow a: 1 -> 2\narrow g: 2 -> 3\nrel g a\n"});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.diagnostics[0].code == "NonComposableRelation");
}

TEST_CASE("diagnostics: missing and malformed sections") {
  ParseResult empty_vertices = parse(SourceDocument{"vertices:\n"});
  REQUIRE_FALSE(empty_vertices.ok());
  CHECK(empty_vertices.diagnostics[0].code == "MissingSection");

  ParseResult no_vertices = parse(SourceDocument{"arrow a: 1 -> 2\n"});
  REQUIRE_FALSE(no_vertices.ok());
  CHECK(no_vertices.diagnostics[0].code == "MissingSection");

  ParseResult unknown = parse(SourceDocument{"vertices: 1\narrow a: 1 -> 9\n"});
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.diagnostics[0].code == "UnknownVertex");

  ParseResult dup = parse(SourceDocument{"vertices: 1 1\n"});
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.diagnostics[0].code == "DuplicateId");

  ParseResult bad_deg =
      parse(SourceDocument{"vertices: 1 2\narrow a: 1 -> 2 deg x\n"});
  REQUIRE_FALSE(bad_deg.ok());
  CHECK(bad_deg.diagnostics[0].code == "DegreeNotInteger");

  ParseResult unknown_arrow =
      parse(SourceDocument{"vertices: 1 2\narrow a: 1 -> 2\nrel a z\n"});
  REQUIRE_FALSE(unknown_arrow.ok());
  CHECK(unknown_arrow.diagnostics[0].code == "UnknownArrow");

  ParseResult dup_rel = parse(SourceDocument{
      "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a b\nrel a b\n"});
  REQUIRE_FALSE(dup_rel.ok());
  CHECK(dup_rel.diagnostics[0].code == "DuplicateId");
}

TEST_CASE("diagnostics carry line and column") {
  ParseResult r = parse(SourceDocument{"vertices: 1 2\narrow a: 1 -> 9\n"});
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics[0].line == 2);
  CHECK(r.diagnostics[0].column > 1);
}

TEST_CASE("serialize: canonical form with deg 0 elided") {
  GradedAlgebraPresentation p = example71();
  std::string text = serialize(p).text;
  CHECK(text ==
        "vertices: 1 2 3\n"
        "arrow a: 1 -> 2\n"
        "arrow b: 2 -> 1\n"
        "arrow g: 2 -> 3\n"
        "rel a g\n"
        "rel b a\n");
}

TEST_CASE("parse(serialize(p)) is the identity on fixtures") {
  std::vector<GradedAlgebraPresentation> fixtures = {
      example71(),
      gentle::testing::graded_two_cycle(),
      builtin_gamma(2, 3, -1),
      builtin_gamma_prime(3, 1),
      builtin_lambda(2, 3, 1, 2),
      builtin_lambda(1, 1, 2, -1),
  };
  for (const auto& p : fixtures) {
    ParseResult round = parse(serialize(p));
    REQUIRE(round.ok());
    CHECK(*round.presentation == p);
  }
}

TEST_CASE("relabeled-isomorphic inputs serialize differently") {
  GradedAlgebraPresentation p = example71();
  std::mt19937_64 rng(3);
  GradedAlgebraPresentation q = gentle::testing::relabel(p, rng);
  CHECK(serialize(p).text != serialize(q).text);  // no canonical graph form
}

TEST_CASE("builtin Lambda(1,2,0,1): the graded 2-cycle") {
  GradedAlgebraPresentation p = builtin_lambda(1, 2, 0, 1);
  CHECK(p.quiver.vertices == std::vector<int>{0, 1});
  REQUIRE(p.quiver.arrows.size() == 2);
  CHECK(p.quiver.arrows[0] == Arrow{0, 0, 1, 0});
  CHECK(p.quiver.arrows[1] == Arrow{1, 1, 0, 1});
  // the composite "a1 then a0" vanishes: stored (0, 1)
  CHECK(p.relations.pairs == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("builtin Gamma(1,1,0): the Kronecker quiver") {
  GradedAlgebraPresentation p = builtin_gamma(1, 1, 0);
  CHECK(p.quiver.vertices == std::vector<int>{1, 2});
  REQUIRE(p.quiver.arrows.size() == 2);
  CHECK(p.quiver.arrows[0].src == 2);
  CHECK(p.quiver.arrows[0].dst == 1);
  CHECK(p.quiver.arrows[1].src == 2);
  CHECK(p.quiver.arrows[1].dst == 1);
  CHECK(p.quiver.arrows[0].deg == 0);
  CHECK(p.quiver.arrows[1].deg == 0);
  CHECK(p.relations.pairs.empty());
}

TEST_CASE("builtin parameter domains") {
  CHECK_THROWS_AS(builtin_lambda(0, 2, 0, 0), error);   // r >= 1 required
  CHECK_THROWS_AS(builtin_lambda(3, 2, 0, 0), error);   // n >= r required
  CHECK_THROWS_AS(builtin_lambda(1, 2, -1, 0), error);  // m >= 0 required
  CHECK_THROWS_AS(builtin_gamma(0, 1, 0), error);
  CHECK_THROWS_AS(builtin_gamma_prime(0, 0), error);
}

TEST_CASE("builtin counts across a small grid") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (int m = 0; m <= 3; ++m) {
        GradedAlgebraPresentation p = builtin_lambda(r, n, m, 1);
        CHECK(p.quiver.arrows.size() == static_cast<size_t>(n + m));
        CHECK(p.quiver.vertices.size() == static_cast<size_t>(n + m));
        CHECK(p.relations.pairs.size() == static_cast<size_t>(r));
      }
  for (int qq = 1; qq <= 5; ++qq) {
    GradedAlgebraPresentation p = builtin_gamma_prime(qq, 2);
    CHECK(p.relations.pairs.size() == static_cast<size_t>(qq));
    CHECK(p.quiver.arrows.size() == static_cast<size_t>(qq));
  }
  for (int pp = 1; pp <= 4; ++pp)
    for (int qq = 1; qq <= 4; ++qq) {
      GradedAlgebraPresentation g = builtin_gamma(pp, qq, -2);
      CHECK(g.quiver.arrows.size() == static_cast<size_t>(pp + qq));
      CHECK(g.quiver.vertices.size() == static_cast<size_t>(pp + qq));
      int graded = 0;
      for (const Arrow& a : g.quiver.arrows)
        if (a.deg != 0) {
          ++graded;
          CHECK(a.deg == -2);
        }
      CHECK(graded == 1);
    }
}

TEST_CASE("comments and blank lines are ignored") {
  ParseResult r = parse(SourceDocument{
      "# header comment\n"
      "\n"
      "vertices: 1 2   # trailing comment\n"
      "arrow a: 1 -> 2 # another\n"});
  CHECK(r.ok());
}
