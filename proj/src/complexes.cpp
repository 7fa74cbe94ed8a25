#include "mrect/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mrect/errors.hpp"
#include "mrect/symmetry.hpp"

namespace mrect {

namespace {

template <typename T, typename LowerFn, typename DimFn>
FacePoset<T> close_downward(const std::vector<T>& tops, LowerFn lower, DimFn dim) {
  std::set<T> seen(tops.begin(), tops.end());
  std::vector<T> frontier(tops.begin(), tops.end());
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const auto& x : frontier) {
      for (auto& y : lower(x)) {
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  FacePoset<T> poset;
  poset.elements.assign(seen.begin(), seen.end());
  for (std::size_t u = 0; u < poset.elements.size(); ++u) {
    const auto& x = poset.elements[u];
    poset.dims.push_back(dim(x));
    for (const auto& y : lower(x)) poset.covers.emplace_back(*poset.index_of(y), u);
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

std::vector<RectComposition> rect_lower(const RectComposition& a) {
  std::vector<RectComposition> out;
  for (auto& c : lower_covers_rect(a)) out.push_back(std::move(c.result));
  return out;
}

EdgeLabel tetra_label(std::size_t from, std::size_t to) {
  // Quadrant indices: 0 = a (upper-left), 1 = b, 2 = c, 3 = d.
  const auto lo = std::min(from, to);
  const auto hi = std::max(from, to);
  if (lo == 0 && hi == 1) return {Side::row, 1, EdgeColor::red};
  if (lo == 2 && hi == 3) return {Side::row, 2, EdgeColor::orange};
  if (lo == 0 && hi == 2) return {Side::col, 1, EdgeColor::cyan};
  if (lo == 1 && hi == 3) return {Side::col, 2, EdgeColor::blue};
  throw std::logic_error("tetra_label: quadrants do not share a row or column");
}

EdgeLabel label_for_color(EdgeColor c) {
  switch (c) {
    case EdgeColor::red: return {Side::row, 1, c};
    case EdgeColor::orange: return {Side::row, 2, c};
    case EdgeColor::cyan: return {Side::col, 1, c};
    case EdgeColor::blue: return {Side::col, 2, c};
    default: return {Side::row, 0, c};
  }
}

}  // namespace

FacePoset<RectComposition> face_poset_rect(int n) {
  if (n < 1) throw InputError("face_poset_rect: n must be >= 1");
  if (n > kMaxFacePosetN) {
    throw ResourceLimitError("face_poset_rect: n = " + std::to_string(n) + " exceeds the supported bound n <= " +
                             std::to_string(kMaxFacePosetN) + " (the poset grows factorially)");
  }
  std::vector<RectComposition> tops;
  for (auto& m : maximal_elements(n)) tops.push_back(std::move(m.matrix));
  return close_downward(tops, rect_lower, dimension_rect);
}

FacePoset<LinearComposition> face_poset_linear(int n) {
  if (n < 1) throw InputError("face_poset_linear: n must be >= 1");
  if (n > 16) throw ResourceLimitError("face_poset_linear: n > 16 is beyond the supported range");
  std::vector<int> top(static_cast<std::size_t>(n) + 2, 1);
  top.front() = 0;
  top.back() = 0;
  return close_downward(std::vector{LinearComposition::validate(top)}, lower_covers_linear, dimension_linear);
}

FacePoset<RectComposition> lower_set(const RectComposition& a) {
  if (a.rows() + a.cols() > 24) throw ResourceLimitError("lower_set: composition too large");
  return close_downward(std::vector{a}, rect_lower, dimension_rect);
}

LabeledMultigraph dual_graph(int n) {
  struct Parent {
    std::string key;
    MergeKind kind;
    int position;
  };
  std::map<RectComposition, std::vector<Parent>> faces;
  std::vector<std::string> vertices;
  for (const auto& top : maximal_elements(n)) {
    vertices.push_back(top.perm.key());
    for (const auto& c : lower_covers_rect(top.matrix)) faces[c.result].push_back({top.perm.key(), c.kind, c.position});
  }

  std::vector<GraphEdge> edges;
  for (const auto& [face, parents] : faces) {
    if (parents.size() == 1) continue;
    if (parents.size() != 2) throw std::logic_error("dual_graph: codimension-1 face with more than two top cells");
    const auto& p = parents[0];
    const auto& q = parents[1];
    if (p.kind != q.kind || p.position != q.position) {
      throw std::logic_error("dual_graph: shared face reached by different merges");
    }
    // Position p merges matrix rows p-1 and p, i.e. internal rows p-1 and p.
    edges.push_back({p.key, q.key, {p.kind == MergeKind::row ? Side::row : Side::col, p.position - 1}});
  }
  return LabeledMultigraph(std::move(vertices), std::move(edges));
}

DualGraphReport verify_dual_graph(int n) {
  if (n < 1) throw InputError("verify_dual_graph: n must be >= 1");
  if (n > kMaxDualGraphN) {
    throw ResourceLimitError("verify_dual_graph: n = " + std::to_string(n) + " exceeds the supported bound n <= " +
                             std::to_string(kMaxDualGraphN));
  }
  const auto dual = dual_graph(n);
  const auto lr = overlay_lr(n);

  std::vector<GraphEdge> mapped;
  for (auto e : dual.edges()) {
    e.label.side = e.label.side == Side::row ? Side::left : Side::right;
    mapped.push_back(std::move(e));
  }
  const LabeledMultigraph relabeled(dual.vertices(), std::move(mapped));

  DualGraphReport r;
  r.n = n;
  r.dual_vertices = dual.vertex_count();
  r.dual_edges = dual.edge_count();
  r.overlay_vertices = lr.vertex_count();
  r.overlay_edges = lr.edge_count();
  r.equal = relabeled == lr;
  if (r.equal) return r;

  if (relabeled.vertices() != lr.vertices()) {
    r.discrepancy = "vertex sets differ";
    return r;
  }
  const auto& a = relabeled.edges();
  const auto& b = lr.edges();
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  auto describe = [](const GraphEdge& e) { return "{" + e.u + "} -- {" + e.v + "} " + label_text(e.label); };
  if (ia != a.end() && (ib == b.end() || *ia < *ib)) {
    r.discrepancy = "dual graph has extra edge " + describe(*ia);
  } else if (ib != b.end()) {
    r.discrepancy = "dual graph is missing edge " + describe(*ib);
  }
  return r;
}

TetraGraph tetra_graph(int n) {
  if (n > 64) throw ResourceLimitError("tetra_graph: n > 64 is beyond the supported range");
  static constexpr std::array<std::array<int, 3>, 4> kCorners{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  static constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kMoves{{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};

  TetraGraph g;
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
  for (const auto& m : minimal_elements(n)) {
    const Block2x2 blk{{m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)}};
    const auto key = blk.key();
    std::array<int, 3> xyz{};
    for (std::size_t q = 0; q < 4; ++q) {
      for (std::size_t t = 0; t < 3; ++t) xyz[t] += blk.e[q] * kCorners[q][t];
    }
    vertices.push_back(key);
    g.coordinates.emplace(key, xyz);
    g.blocks.emplace(key, blk);
    // Each undirected edge is emitted from the end that gives up the unit
    // from the lower-indexed quadrant.
    for (const auto& [from, to] : kMoves) {
      if (blk.e[from] == 0) continue;
      Block2x2 other = blk;
      --other.e[from];
      ++other.e[to];
      edges.push_back({key, other.key(), tetra_label(from, to)});
    }
  }
  g.graph = LabeledMultigraph(std::move(vertices), std::move(edges));
  return g;
}

std::vector<std::string> tetra_boundary(const TetraGraph& g) {
  std::vector<std::string> out;
  for (const auto& [key, b] : g.blocks) {
    const bool zero_row = (b.a() == 0 && b.b() == 0) || (b.c() == 0 && b.d() == 0);
    const bool zero_col = (b.a() == 0 && b.c() == 0) || (b.b() == 0 && b.d() == 0);
    if (zero_row || zero_col) out.push_back(key);
  }
  return out;
}

LabeledMultigraph spine_skeleton(const SpineComplex& s) {
  std::vector<std::string> vertices;
  for (const auto& b : s.grid) vertices.push_back(b.key());
  std::vector<GraphEdge> edges;
  for (const auto& e : s.edges) edges.push_back({s.at(e.from).key(), s.at(e.to).key(), label_for_color(e.color)});
  return LabeledMultigraph(std::move(vertices), std::move(edges));
}

double GeometricRealization::distance_squared(std::size_t u, std::size_t v) const {
  double d2 = 0.0;
  for (std::size_t t = 0; t < coords[u].size(); ++t) {
    const double diff = coords[u][t] - coords[v][t];
    d2 += diff * diff;
  }
  return d2;
}

double GeometricRealization::max_relative_error() const {
  double worst = 0.0;
  for (const auto& e : edges) {
    const double declared = to_double(e.squared_length);
    const double err = std::abs(distance_squared(e.u, e.v) - declared) / std::max(declared, 1.0);
    worst = std::max(worst, err);
  }
  return worst;
}

LabeledMultigraph GeometricRealization::skeleton() const {
  std::vector<GraphEdge> out;
  for (const auto& e : edges) out.push_back({keys[e.u], keys[e.v], e.label.value_or(EdgeLabel{Side::row, 0})});
  return LabeledMultigraph(keys, std::move(out));
}

GeometricRealization permutahedron(int n, const Rational& lo, const Rational& hi,
                                   const std::vector<Rational>& basepoint) {
  if (n < 1) throw InputError("permutahedron: n must be >= 1");
  if (n > 8) throw ResourceLimitError("permutahedron: n > 8 is beyond the supported range");
  if (static_cast<int>(basepoint.size()) != n) throw InputError("permutahedron: basepoint must have n coordinates");
  if (!(lo < hi)) throw InputError("permutahedron: interval needs lo < hi");
  for (std::size_t t = 0; t < basepoint.size(); ++t) {
    if (basepoint[t] < lo || basepoint[t] > hi) throw InputError("permutahedron: basepoint outside the cube");
    if (t > 0 && !(basepoint[t - 1] < basepoint[t])) {
      throw InputError("permutahedron: basepoint must be strictly increasing (generic)");
    }
  }

  GeometricRealization g;
  std::map<std::vector<Rational>, std::size_t> where;
  std::vector<std::vector<Rational>> exact;
  for (const auto& p : Permutation::all(n)) {
    std::vector<Rational> x;
    for (int t = 1; t <= n; ++t) x.push_back(basepoint[static_cast<std::size_t>(p.image_of(t) - 1)]);
    std::vector<double> xf;
    for (const auto& v : x) xf.push_back(to_double(v));
    where.emplace(x, g.keys.size());
    g.keys.push_back(p.key());
    g.coords.push_back(std::move(xf));
    exact.push_back(std::move(x));
  }

  for (std::size_t u = 0; u < exact.size(); ++u) {
    for (int r = 1; r < n; ++r) {
      const auto& lo_val = basepoint[static_cast<std::size_t>(r - 1)];
      const auto& hi_val = basepoint[static_cast<std::size_t>(r)];
      auto y = exact[u];
      for (auto& v : y) {
        if (v == lo_val) v = hi_val;
        else if (v == hi_val) v = lo_val;
      }
      const std::size_t v = where.at(y);
      if (u < v) {
        const Rational gap = hi_val - lo_val;
        g.edges.push_back({u, v, 2 * gap * gap, EdgeLabel{Side::right, r}});
      }
    }
  }
  return g;
}

GeometricRealization realize_biorthoscheme(const RectComposition& a, const Rational& length_i,
                                           const Rational& length_j) {
  const auto spine = spine_rect(a, length_i, length_j);
  const int h = a.internal_rows();
  const int k = a.internal_cols();
  const auto rs = a.row_sums();
  const auto cs = a.col_sums();
  const double li = to_double(length_i);
  const double lj = to_double(length_j);

  GeometricRealization g;
  for (int i = 1; i <= spine.row_cuts; ++i) {
    for (int j = 1; j <= spine.col_cuts; ++j) {
      std::vector<double> x(static_cast<std::size_t>(h + k), 0.0);
      for (int t = 1; t < i; ++t) x[static_cast<std::size_t>(t - 1)] = std::sqrt(static_cast<double>(rs[static_cast<std::size_t>(t)])) * li;
      for (int t = 1; t < j; ++t) x[static_cast<std::size_t>(h + t - 1)] = std::sqrt(static_cast<double>(cs[static_cast<std::size_t>(t)])) * lj;
      g.keys.push_back(std::to_string(i) + "," + std::to_string(j));
      g.coords.push_back(std::move(x));
    }
  }
  auto index = [&](GridPos p) {
    return static_cast<std::size_t>((p.row_cut - 1) * spine.col_cuts + (p.col_cut - 1));
  };
  for (const auto& e : spine.edges) {
    g.edges.push_back({index(e.from), index(e.to), spine.squared_length(e), label_for_color(e.color)});
  }
  return g;
}

}  // namespace mrect
