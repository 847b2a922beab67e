#include "gentle/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gentle {

std::string Diagnostic::render() const {
  std::ostringstream os;
  os << line << ":" << column << ": " << code << ": " << message;
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return toks;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  size_t k = 0;
  if (s[0] == '+' || s[0] == '-') k = 1;
  if (k == s.size()) return false;
  for (size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  try {
    out = std::stoi(s);
  } catch (...) {
    return false;
  }
  return true;
}

} // namespace

ParseResult parse(const SourceDocument& doc) {
  ParseResult res;
  GradedAlgebraPresentation p;
  std::set<int> vertex_set;
  std::map<std::string, int> arrow_id_of;  // name -> id (declaration order)
  std::set<std::pair<int, int>> rel_set;
  bool saw_vertices = false;
  int next_arrow_id = 0;

  auto diag = [&](std::string code, std::string msg, int line, int col) {
    res.diagnostics.push_back({std::move(code), std::move(msg), line, col});
  };

  std::istringstream in(doc.text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "vertices:" || (head == "vertices" && toks.size() > 1 && toks[1].text == ":")) {
      size_t first = (head == "vertices:") ? 1 : 2;
      if (toks.size() <= first) {
        diag("MissingSection", "empty vertex list", lineno, toks[0].column);
        continue;
      }
      saw_vertices = true;
      for (size_t k = first; k < toks.size(); ++k) {
        int v;
        if (!parse_int(toks[k].text, v)) {
          diag("DegreeNotInteger", "vertex id '" + toks[k].text + "' is not an integer",
               lineno, toks[k].column);
          continue;
        }
        if (!vertex_set.insert(v).second)
          diag("DuplicateId", "duplicate vertex " + toks[k].text, lineno, toks[k].column);
      }
    } else if (head == "arrow") {
      // arrow NAME: SRC -> DST [deg N]
      if (toks.size() < 5) {
        diag("MissingSection", "malformed arrow line", lineno, toks[0].column);
        continue;
      }
      std::string name = toks[1].text;
      if (!name.empty() && name.back() == ':') name.pop_back();
      size_t k = 2;
      if (k < toks.size() && toks[k].text == ":") ++k;
      if (name.empty() || k + 2 >= toks.size() || toks[k + 1].text != "->") {
        diag("MissingSection", "expected 'arrow NAME: SRC -> DST'", lineno, toks[0].column);
        continue;
      }
      int src, dst;
      bool src_ok = parse_int(toks[k].text, src);
      bool dst_ok = parse_int(toks[k + 2].text, dst);
      if (!src_ok || !dst_ok) {
        diag("DegreeNotInteger", "arrow endpoints must be integers", lineno, toks[k].column);
        continue;
      }
      int deg = 0;
      if (toks.size() > k + 3) {
        if (toks[k + 3].text == "deg" && toks.size() > k + 4) {
          if (!parse_int(toks[k + 4].text, deg)) {
            diag("DegreeNotInteger", "'" + toks[k + 4].text + "' is not an integer",
                 lineno, toks[k + 4].column);
            continue;
          }
        } else {
          diag("MissingSection", "trailing tokens after arrow declaration", lineno,
               toks[k + 3].column);
          continue;
        }
      }
      if (!saw_vertices) {
        diag("MissingSection", "arrow before vertices: line", lineno, toks[0].column);
        continue;
      }
      bool ok = true;
      if (!vertex_set.count(src)) {
        diag("UnknownVertex", "unknown vertex " + std::to_string(src), lineno, toks[k].column);
        ok = false;
      }
      if (!vertex_set.count(dst)) {
        diag("UnknownVertex", "unknown vertex " + std::to_string(dst), lineno,
             toks[k + 2].column);
        ok = false;
      }
      if (arrow_id_of.count(name)) {
        diag("DuplicateId", "duplicate arrow name '" + name + "'", lineno, toks[1].column);
        ok = false;
      }
      if (!ok) continue;
      int id = next_arrow_id++;
      arrow_id_of[name] = id;
      p.quiver.arrows.push_back({id, src, dst, deg});
      p.arrow_names[id] = name;
    } else if (head == "rel") {
      // rel FIRST SECOND  (diagrammatic: FIRST then SECOND; stored (second, first))
      if (toks.size() != 3) {
        diag("MissingSection", "expected 'rel FIRST SECOND'", lineno, toks[0].column);
        continue;
      }
      auto it1 = arrow_id_of.find(toks[1].text);
      auto it2 = arrow_id_of.find(toks[2].text);
      if (it1 == arrow_id_of.end()) {
        diag("UnknownArrow", "unknown arrow '" + toks[1].text + "'", lineno, toks[1].column);
        continue;
      }
      if (it2 == arrow_id_of.end()) {
        diag("UnknownArrow", "unknown arrow '" + toks[2].text + "'", lineno, toks[2].column);
        continue;
      }
      const Arrow* first = nullptr;
      const Arrow* second = nullptr;
      for (const Arrow& a : p.quiver.arrows) {
        if (a.id == it1->second) first = &a;
        if (a.id == it2->second) second = &a;
      }
      if (first->dst != second->src) {
        diag("NonComposableRelation",
             "'" + toks[1].text + "' ends at " + std::to_string(first->dst) +
                 " but '" + toks[2].text + "' starts at " + std::to_string(second->src),
             lineno, toks[1].column);
        continue;
      }
      auto pair = std::make_pair(second->id, first->id);  // (f, g): g applied first
      if (!rel_set.insert(pair).second) {
        diag("DuplicateId", "duplicate relation", lineno, toks[1].column);
        continue;
      }
    } else {
      diag("MissingSection", "unrecognized declaration '" + head + "'", lineno,
           toks[0].column);
    }
  }

  if (!saw_vertices)
    diag("MissingSection", "missing vertices: line", lineno == 0 ? 1 : lineno, 1);

  if (!res.diagnostics.empty()) return res;

  p.quiver.vertices.assign(vertex_set.begin(), vertex_set.end());
  std::sort(p.quiver.arrows.begin(), p.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  p.relations.pairs.assign(rel_set.begin(), rel_set.end());
  std::sort(p.relations.pairs.begin(), p.relations.pairs.end());
  validate(p);
  res.presentation = std::move(p);
  return res;
}

SourceDocument serialize(const GradedAlgebraPresentation& p) {
  std::ostringstream os;
  os << "vertices:";
  for (int v : p.quiver.vertices) os << " " << v;
  os << "\n";
  for (const Arrow& a : p.quiver.arrows) {
    os << "arrow " << p.arrow_name(a.id) << ": " << a.src << " -> " << a.dst;
    if (a.deg != 0) os << " deg " << a.deg;
    os << "\n";
  }
  // relations ordered by (first-applied, then-applied) = (g, f)
  std::vector<std::pair<int, int>> by_application(p.relations.pairs.size());
  std::transform(p.relations.pairs.begin(), p.relations.pairs.end(),
                 by_application.begin(),
                 [](std::pair<int, int> fg) { return std::make_pair(fg.second, fg.first); });
  std::sort(by_application.begin(), by_application.end());
  for (auto [g, f] : by_application)
    os << "rel " << p.arrow_name(g) << " " << p.arrow_name(f) << "\n";
  return SourceDocument{os.str()};
}

GradedAlgebraPresentation builtin_gamma(int p, int q, int r) {
  if (p < 1 || q < 1)
    throw error(errc::parameter_out_of_range,
                "Gamma(p,q,r) requires p >= 1 and q >= 1");
  GradedAlgebraPresentation pres;
  for (int v = 1; v <= p + q; ++v) pres.quiver.vertices.push_back(v);
  // ids are 0-based declaration order so that parse(serialize(.)) is exact
  // lower path: alpha_i : i+1 -> i for 1 <= i <= p
  for (int i = 1; i <= p; ++i) {
    pres.quiver.arrows.push_back({i - 1, i + 1, i, 0});
    pres.arrow_names[i - 1] = "a" + std::to_string(i);
  }
  // upper path: alpha_{p+j} : p+j -> p+j+1 for 1 <= j < q, alpha_{p+q} : p+q -> 1
  for (int j = 1; j < q; ++j) {
    pres.quiver.arrows.push_back({p + j - 1, p + j, p + j + 1, 0});
    pres.arrow_names[p + j - 1] = "a" + std::to_string(p + j);
  }
  pres.quiver.arrows.push_back({p + q - 1, p + q, 1, r});
  pres.arrow_names[p + q - 1] = "a" + std::to_string(p + q);
  std::sort(pres.quiver.arrows.begin(), pres.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  validate(pres);
  return pres;
}

GradedAlgebraPresentation builtin_gamma_prime(int q, int r) {
  if (q < 1) throw error(errc::parameter_out_of_range, "GammaPrime(q,r) requires q >= 1");
  GradedAlgebraPresentation pres;
  for (int v = 1; v <= q; ++v) pres.quiver.vertices.push_back(v);
  // oriented cycle 1 -> 2 -> ... -> q -> 1, degree q - r on the closing arrow
  for (int i = 1; i < q; ++i) {
    pres.quiver.arrows.push_back({i - 1, i, i + 1, 0});
    pres.arrow_names[i - 1] = "a" + std::to_string(i);
  }
  pres.quiver.arrows.push_back({q - 1, q, 1, q - r});  // a loop when q == 1
  pres.arrow_names[q - 1] = "a" + std::to_string(q);
  std::sort(pres.quiver.arrows.begin(), pres.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  // all length-2 composites vanish: composite a_i then a_{i+1} stored (a_{i+1}, a_i)
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < q; ++i) {
    int nxt = (i + 1) % q;
    rels.push_back({nxt, i});
  }
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  pres.relations.pairs = std::move(rels);
  validate(pres);
  return pres;
}

GradedAlgebraPresentation builtin_lambda(int r, int n, int m, int d) {
  if (!(n >= r && r >= 1 && m >= 0))
    throw error(errc::parameter_out_of_range,
                "Lambda(r,n,m,d) requires n >= r >= 1, m >= 0");
  GradedAlgebraPresentation pres;
  for (int v = -m; v <= n - 1; ++v) pres.quiver.vertices.push_back(v);
  // cycle: alpha_i : i -> i+1 (0 <= i <= n-2), alpha_{n-1} : n-1 -> 0 with degree d
  for (int i = 0; i <= n - 2; ++i) {
    pres.quiver.arrows.push_back({i, i, i + 1, 0});
    pres.arrow_names[i] = "a" + std::to_string(i);
  }
  pres.quiver.arrows.push_back({n - 1, n - 1, 0, d});  // a loop when n == 1
  pres.arrow_names[n - 1] = "a" + std::to_string(n - 1);
  // tail: alpha_{-j} : -j -> -j+1 for 1 <= j <= m, ids after the cycle
  for (int j = 1; j <= m; ++j) {
    pres.quiver.arrows.push_back({n - 1 + j, -j, -j + 1, 0});
    pres.arrow_names[n - 1 + j] = "t" + std::to_string(j);
  }
  std::sort(pres.quiver.arrows.begin(), pres.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  // relations a_0 a_{n-1}, a_{n-1} a_{n-2}, ..., a_{n-r+1} a_{n-r}: composite
  // through vertices 0, n-1, ..., n-r+1; pair (f, g) = (out-arrow, in-arrow)
  std::vector<std::pair<int, int>> rels;
  auto cyc_id = [&](int i) {
    int v = ((i % n) + n) % n;
    return (n == 1) ? 0 : v;
  };
  for (int k = 0; k < r; ++k) rels.push_back({cyc_id(n - k), cyc_id(n - 1 - k)});
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  pres.relations.pairs = std::move(rels);
  validate(pres);
  return pres;
}

} // namespace gentle
