#ifndef GENTLE_DSL_HPP
#define GENTLE_DSL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

/// Text format for graded quivers with relations (".gq"). One declaration per
/// line, `#` starts a comment:
///
///   vertices: 1 2 3
///   arrow a: 1 -> 2 deg 0
///   arrow b: 2 -> 1 deg 1
///   arrow g: 2 -> 3          # deg defaults to 0
///   rel b a                  # diagrammatic: b then a; stored as (a, b)
///   rel a g
struct SourceDocument {
  std::string text;
};

struct Diagnostic {
  std::string code;   // UnknownVertex, DuplicateId, NonComposableRelation, ...
  std::string message;
  int line = 0;       // 1-based
  int column = 0;     // 1-based

  std::string render() const;
};

struct ParseResult {
  std::optional<GradedAlgebraPresentation> presentation;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return presentation.has_value() && diagnostics.empty(); }
};

ParseResult parse(const SourceDocument& doc);

/// Canonical text: vertices ascending, arrows by id, relations sorted by
/// (first-applied, then-applied) id pair; `deg 0` elided. parse(serialize(p))
/// structurally equals p.
SourceDocument serialize(const GradedAlgebraPresentation& p);

/// Builtin families.
GradedAlgebraPresentation builtin_gamma(int p, int q, int r);
GradedAlgebraPresentation builtin_gamma_prime(int q, int r);
GradedAlgebraPresentation builtin_lambda(int r, int n, int m, int d = 0);

} // namespace gentle

#endif
