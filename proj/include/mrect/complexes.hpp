#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrect/graph.hpp"
#include "mrect/linear.hpp"
#include "mrect/rational.hpp"
#include "mrect/rectangular.hpp"

namespace mrect {

inline constexpr int kMaxFacePosetN = 4;
inline constexpr int kMaxDualGraphN = 5;

/// Face poset as explicit data: canonically ordered elements, the cover
/// relation as (lower, upper) index pairs, and each element's dimension.
template <typename T>
struct FacePoset {
  std::vector<T> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<int> dims;

  // Number of cells in each dimension 0..max.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (int d : dims) {
      if (static_cast<std::size_t>(d) >= f.size()) f.resize(static_cast<std::size_t>(d) + 1, 0);
      ++f[static_cast<std::size_t>(d)];
    }
    return f;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    const auto f = f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    return chi;
  }

  std::optional<std::size_t> index_of(const T& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

// Downward closure of the n! padded permutation matrices under single merges.
// Throws ResourceLimitError for n > kMaxFacePosetN.
FacePoset<RectComposition> face_poset_rect(int n);
// All faces of the single orthoscheme Mult_n(I).
FacePoset<LinearComposition> face_poset_linear(int n);
// Everything below a (including a): the face poset of one closed cell.
FacePoset<RectComposition> lower_set(const RectComposition& a);

// One vertex per top cell (keyed by its permutation), one edge per
// codimension-1 face shared by two top cells, labeled Row i / Col i after the
// pair of internal rows / columns that were merged. Built by matching merged
// matrices.
LabeledMultigraph dual_graph(int n);

struct DualGraphReport {
  int n = 0;
  bool equal = false;
  std::size_t dual_vertices = 0;
  std::size_t dual_edges = 0;
  std::size_t overlay_vertices = 0;
  std::size_t overlay_edges = 0;
  std::string discrepancy;  // empty when equal
};

// Compares dual_graph(n) with overlay_lr(n) under Row <-> Left, Col <-> Right.
DualGraphReport verify_dual_graph(int n);

/// The 2x2 minimal elements as lattice points of the simplex a+b+c+d = n,
/// joined when one unit moves within a row or a column. Coordinates embed
/// [a b; c d] as a*(1,1,1) + b*(1,-1,-1) + c*(-1,1,-1) + d*(-1,-1,1), so every
/// edge has length 2*sqrt(2).
///
/// Edge labels: Row 1 / Row 2 for a move within the top / bottom row (red /
/// orange), Col 1 / Col 2 within the left / right column (cyan / blue).
struct TetraGraph {
  LabeledMultigraph graph;
  std::map<std::string, std::array<int, 3>> coordinates;
  std::map<std::string, Block2x2> blocks;
};

TetraGraph tetra_graph(int n);

inline constexpr const char* kTetraEmbedding =
    "[a b; c d] -> a*(1,1,1) + b*(1,-1,-1) + c*(-1,1,-1) + d*(-1,-1,1)";

// Vertices with a zero row or a zero column (the boundary cycle).
std::vector<std::string> tetra_boundary(const TetraGraph& g);

// Spine 1-skeleton as a graph on 2x2 keys, edges labeled like tetra_graph.
LabeledMultigraph spine_skeleton(const SpineComplex& s);

/// Float coordinates for a combinatorial object, with the exact squared edge
/// lengths it is supposed to realize.
struct GeometricRealization {
  struct Edge {
    std::size_t u;
    std::size_t v;
    Rational squared_length;
    std::optional<EdgeLabel> label;
  };

  std::vector<std::string> keys;
  std::vector<std::vector<double>> coords;
  std::vector<Edge> edges;

  double distance_squared(std::size_t u, std::size_t v) const;
  // Largest |d^2 - declared| / max(declared, 1) over all edges.
  double max_relative_error() const;
  bool consistent(double tol = 1e-9) const { return max_relative_error() <= tol; }
  // Edge graph with labels (edges without labels become Row 0).
  LabeledMultigraph skeleton() const;
};

// Orbit of a strictly increasing basepoint under coordinate permutation.
// The vertex keyed by pi has coordinate t equal to basepoint[t.pi]; edges join
// orbit points that differ by exchanging the basepoint values x_i and x_{i+1},
// labeled (Right, i).
GeometricRealization permutahedron(int n, const Rational& lo, const Rational& hi,
                                   const std::vector<Rational>& basepoint);

// Blue factor in R^h with orthogonal steps sqrt(c_i)*L_I, red factor in R^k
// with steps sqrt(d_j)*L_J; spine vertex (i,j) sits at (p_{i-1}, q_{j-1}).
// Keys are "i,j" cut pairs; edges are the spine edges.
GeometricRealization realize_biorthoscheme(const RectComposition& a, const Rational& length_i = 1,
                                           const Rational& length_j = 1);

}  // namespace mrect
