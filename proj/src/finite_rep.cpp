#include "gentle/finite_rep.hpp"

#include <algorithm>

namespace gentle {

int FiniteRep::total_dim() const {
  int t = 0;
  for (auto& [v, d] : dim) t += d;
  return t;
}

bool algebra_is_infinite_dimensional(const GradedAlgebraPresentation& p) {
  // directed graph on arrows: b -> c iff "b then c" is a nonzero composite;
  // arbitrarily long nonzero paths exist iff this graph has a cycle
  const auto& arrows = p.quiver.arrows;
  int n = static_cast<int>(arrows.size());
  std::vector<std::vector<int>> next(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (arrows[i].dst == arrows[j].src &&
          !p.relations.contains(arrows[j].id, arrows[i].id))
        next[i].push_back(j);
  std::vector<int> state(n, 0);  // 0 new, 1 active, 2 done
  bool cycle = false;
  auto dfs = [&](auto&& self, int u) -> void {
    state[u] = 1;
    for (int w : next[u]) {
      if (cycle) return;
      if (state[w] == 1) {
        cycle = true;
        return;
      }
      if (state[w] == 0) self(self, w);
    }
    state[u] = 2;
  };
  for (int s = 0; s < n && !cycle; ++s)
    if (state[s] == 0) dfs(dfs, s);
  return cycle;
}

namespace {

struct PathBasis {
  // per vertex v: list of nonzero paths starting at the chosen source
  std::map<int, std::vector<Path>> at;
};

PathBasis paths_from(const GradedAlgebraPresentation& p, int v) {
  PathBasis basis;
  int max_len = static_cast<int>(p.quiver.arrows.size());
  for (const AnnotatedPath& ap : enumerate_paths(p, max_len))
    if (ap.path.source == v) basis.at[ap.path.target].push_back(ap.path);
  return basis;
}

int index_of_path(const std::vector<Path>& list, const Path& path) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == path) return static_cast<int>(i);
  return -1;
}

} // namespace

FiniteRep projective_rep(const GradedAlgebraPresentation& p, int v) {
  FiniteRep rep;
  for (int w : p.quiver.vertices) rep.dim[w] = 0;
  PathBasis basis = paths_from(p, v);
  for (auto& [w, list] : basis.at) rep.dim[w] = static_cast<int>(list.size());
  for (const Arrow& a : p.quiver.arrows) {
    Mat m = zero_matrix(rep.dim[a.dst], rep.dim[a.src]);
    auto it = basis.at.find(a.src);
    if (it != basis.at.end()) {
      for (size_t col = 0; col < it->second.size(); ++col) {
        const Path& rho = it->second[col];
        if (!rho.arrows.empty() && p.relations.contains(a.id, rho.arrows.back()))
          continue;  // extension dies in I
        Path ext = rho;
        ext.arrows.push_back(a.id);
        ext.target = a.dst;
        int row = index_of_path(basis.at[a.dst], ext);
        if (row < 0)
          throw error(errc::bad_argument, "projective_rep: path bookkeeping failed");
        m[row][col] = Rat(1);
      }
    }
    rep.act[a.id] = std::move(m);
  }
  return rep;
}

FiniteRep simple_rep(const GradedAlgebraPresentation& p, int v) {
  FiniteRep rep;
  for (int w : p.quiver.vertices) rep.dim[w] = (w == v) ? 1 : 0;
  for (const Arrow& a : p.quiver.arrows)
    rep.act[a.id] = zero_matrix(rep.dim[a.dst], rep.dim[a.src]);
  return rep;
}

namespace {

// evaluate M(path): M(target) x ... applied to a vector at the source
Vec apply_path(const GradedAlgebraPresentation& p, const FiniteRep& m,
               const Path& path, Vec x) {
  for (int aid : path.arrows) {
    const Mat& mat = m.act.at(aid);
    Vec y(mat.size(), Rat(0));
    for (size_t r = 0; r < mat.size(); ++r)
      for (size_t c = 0; c < x.size(); ++c)
        if (!mat[r][c].is_zero()) y[r] = y[r] + mat[r][c] * x[c];
    x = std::move(y);
  }
  (void)p;
  return x;
}

} // namespace

FiniteRep syzygy(const GradedAlgebraPresentation& p, const FiniteRep& m) {
  // top of m: complement of rad m(v) = sum of images of incoming arrows
  std::map<int, std::vector<Vec>> top_lifts;  // v -> chosen generators in M(v)
  for (int v : p.quiver.vertices) {
    int d = m.dim.at(v);
    if (d == 0) continue;
    ColumnSpace rad(d);
    for (const Arrow& a : p.quiver.arrows) {
      if (a.dst != v) continue;
      const Mat& mat = m.act.at(a.id);
      for (size_t c = 0; c < (mat.empty() ? 0 : mat[0].size()); ++c) {
        Vec col(d);
        for (int r = 0; r < d; ++r) col[r] = mat[r][c];
        rad.add(std::move(col));
      }
    }
    // extend rad to all of M(v) by standard vectors; the added ones lift top
    ColumnSpace full = rad;
    for (int i = 0; i < d && full.dim() < d; ++i) {
      Vec e(d, Rat(0));
      e[i] = Rat(1);
      if (!full.contains(e)) {
        top_lifts[v].push_back(e);
        full.add(e);
      }
    }
  }

  // projective cover P0 = sum over v of P_v^{#top_lifts[v]} and its map to m;
  // basis of the P_v-copy is indexed by nonzero paths from v
  struct Block {
    int source_vertex;
    Vec generator_image;             // in M(source_vertex)
    PathBasis paths;
    std::map<int, int> offset;       // vertex -> column offset of this block
  };
  std::vector<Block> blocks;
  std::map<int, int> p0_dim;
  for (int v : p.quiver.vertices) p0_dim[v] = 0;
  for (int v : p.quiver.vertices) {
    auto it = top_lifts.find(v);
    if (it == top_lifts.end()) continue;
    for (const Vec& gen : it->second) {
      Block b;
      b.source_vertex = v;
      b.generator_image = gen;
      b.paths = paths_from(p, v);
      for (auto& [w, list] : b.paths.at) {
        b.offset[w] = p0_dim[w];
        p0_dim[w] += static_cast<int>(list.size());
      }
      blocks.push_back(std::move(b));
    }
  }

  // phi_v : P0(v) -> M(v), column per (block, path v0 ~> v)
  std::map<int, Mat> phi;
  for (int v : p.quiver.vertices) phi[v] = zero_matrix(m.dim.at(v), p0_dim[v]);
  for (const Block& b : blocks) {
    for (auto& [w, list] : b.paths.at) {
      for (size_t i = 0; i < list.size(); ++i) {
        Vec img = apply_path(p, m, list[i], b.generator_image);
        int col = b.offset.at(w) + static_cast<int>(i);
        for (size_t r = 0; r < img.size(); ++r) phi[w][r][col] = img[r];
      }
    }
  }

  // P0's arrow action
  std::map<int, Mat> p0_act;
  for (const Arrow& a : p.quiver.arrows) {
    Mat mat = zero_matrix(p0_dim[a.dst], p0_dim[a.src]);
    for (const Block& b : blocks) {
      auto it = b.paths.at.find(a.src);
      if (it == b.paths.at.end()) continue;
      for (size_t i = 0; i < it->second.size(); ++i) {
        const Path& rho = it->second[i];
        if (!rho.arrows.empty() && p.relations.contains(a.id, rho.arrows.back()))
          continue;
        Path ext = rho;
        ext.arrows.push_back(a.id);
        ext.target = a.dst;
        int row_in_block = index_of_path(b.paths.at.at(a.dst), ext);
        if (row_in_block < 0)
          throw error(errc::bad_argument, "syzygy: path bookkeeping failed");
        mat[b.offset.at(a.dst) + row_in_block][b.offset.at(a.src) + static_cast<int>(i)] =
            Rat(1);
      }
    }
    p0_act[a.id] = std::move(mat);
  }

  // kernel per vertex, plus induced arrow maps
  FiniteRep ker;
  std::map<int, Mat> ker_basis;  // vertex -> columns = basis vectors in P0(v)
  for (int v : p.quiver.vertices) {
    std::vector<Vec> basis = kernel_basis(phi[v], p0_dim[v]);
    ker.dim[v] = static_cast<int>(basis.size());
    Mat bm = zero_matrix(p0_dim[v], static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
      for (int r = 0; r < p0_dim[v]; ++r) bm[r][c] = basis[c][r];
    ker_basis[v] = std::move(bm);
  }
  for (const Arrow& a : p.quiver.arrows) {
    const Mat& big = p0_act.at(a.id);
    Mat moved = mat_mul(big, ker_basis[a.src]);
    if (moved.empty()) moved = zero_matrix(p0_dim[a.dst], ker.dim[a.src]);
    ker.act[a.id] = solve_columns(ker_basis[a.dst], ker.dim[a.dst], moved, ker.dim[a.src]);
  }
  return ker;
}

GldimResult gldim_oracle(const GradedAlgebraPresentation& p, int bound) {
  if (bound < 1) throw error(errc::bad_argument, "bound must be >= 1");
  if (algebra_is_infinite_dimensional(p))
    throw error(errc::not_finite_dimensional, "algebra has arbitrarily long nonzero paths");
  int gldim = 0;
  for (int v : p.quiver.vertices) {
    FiniteRep cur = simple_rep(p, v);
    int pd = -1;
    for (int t = 0; t <= bound; ++t) {
      cur = syzygy(p, cur);
      if (cur.is_zero()) {
        pd = t;
        break;
      }
    }
    if (pd < 0) return {false, bound};  // AtLeast(bound)
    gldim = std::max(gldim, pd);
  }
  return {true, gldim};
}

} // namespace gentle
