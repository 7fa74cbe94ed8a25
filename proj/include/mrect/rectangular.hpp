#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mrect/graph.hpp"
#include "mrect/linear.hpp"
#include "mrect/rational.hpp"
#include "mrect/symmetry.hpp"

namespace mrect {

/// Nonnegative (h+2) x (k+2) integer matrix with positive internal row sums
/// c_1..c_h and positive internal column sums d_1..d_k. Rows are indexed by
/// the x-interval I (blue), columns by the y-interval J (red), in matrix
/// orientation: row 0 is x_l, the last row x_r, column 0 is y_b, the last
/// column y_t.
///
/// Ordering is canonical: by shape (rows, then columns), then row-major
/// lexicographic.
class RectComposition {
 public:
  static RectComposition validate(const std::vector<std::vector<int>>& rows,
                                  std::optional<int> expected_n = std::nullopt);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int internal_rows() const { return rows_ - 2; }
  int internal_cols() const { return cols_ - 2; }
  int at(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  int total() const { return total_; }
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  std::vector<std::vector<int>> to_rows() const;
  // "[[0,1],[1,0]]"
  std::string key() const;

  friend bool operator==(const RectComposition&, const RectComposition&) = default;
  friend std::strong_ordering operator<=>(const RectComposition& a, const RectComposition& b);

 private:
  RectComposition(int rows, int cols, std::vector<int> data, int total)
      : rows_(rows), cols_(cols), data_(std::move(data)), total_(total) {}

  int rows_;
  int cols_;
  std::vector<int> data_;
  int total_;

  friend struct std::hash<RectComposition>;
};

enum class MergeKind { row, col };

// Replaces rows i-1 and i by their sum (i in 1..h+1). Needs >= 3 rows.
RectComposition row_merge(const RectComposition& a, int i);
// Replaces columns j-1 and j by their sum (j in 1..k+1). Needs >= 3 columns.
RectComposition col_merge(const RectComposition& a, int j);

// Row sums [c_l c_1 ... c_h c_r] and column sums [d_b d_1 ... d_k d_t].
LinearComposition pi_re(const RectComposition& a);
LinearComposition pi_im(const RectComposition& a);

// Sums of b over consecutive row blocks and column blocks. Block boundaries
// are given as start indices; the first start must be 0.
RectComposition block_sum(const RectComposition& b, const std::vector<int>& row_starts,
                          const std::vector<int>& col_starts);

// a <= b iff some partition of b's rows and of b's columns into consecutive
// blocks, matching a's shape, has block-sum matrix a.
bool leq_rect(const RectComposition& a, const RectComposition& b);

struct Cover {
  MergeKind kind;
  int position;
  RectComposition result;
};

// All single row and column merges, deduplicated, canonically ordered by result.
std::vector<Cover> lower_covers_rect(const RectComposition& a);

// pi's n x n permutation matrix padded with a zero border.
RectComposition padded_permutation_matrix(const Permutation& pi);

struct MaximalElement {
  Permutation perm;
  RectComposition matrix;
};

// The n! padded permutation matrices, in lexicographic permutation order.
std::vector<MaximalElement> maximal_elements(int n);
// The C(n+3,3) 2x2 matrices with entry sum n, canonically ordered.
std::vector<RectComposition> minimal_elements(int n);

struct WeightedPoint2D {
  Rational x;
  Rational y;
  int multiplicity;

  friend bool operator==(const WeightedPoint2D&, const WeightedPoint2D&) = default;
};

/// Multiset in the closed rectangle [xl, xr] x [yb, yt]; points sorted by
/// (x, y) with repeated locations merged.
class Multiset2D {
 public:
  static Multiset2D make(Rational xl, Rational xr, Rational yb, Rational yt, std::vector<WeightedPoint2D> points);

  const Rational& xl() const { return xl_; }
  const Rational& xr() const { return xr_; }
  const Rational& yb() const { return yb_; }
  const Rational& yt() const { return yt_; }
  const std::vector<WeightedPoint2D>& points() const { return points_; }
  int size() const { return n_; }

  friend bool operator==(const Multiset2D&, const Multiset2D&) = default;

 private:
  Multiset2D(Rational xl, Rational xr, Rational yb, Rational yt, std::vector<WeightedPoint2D> points, int n)
      : xl_(std::move(xl)), xr_(std::move(xr)), yb_(std::move(yb)), yt_(std::move(yt)),
        points_(std::move(points)), n_(n) {}

  Rational xl_, xr_, yb_, yt_;
  std::vector<WeightedPoint2D> points_;
  int n_;
};

Multiset1D real_part(const Multiset2D& z);
Multiset1D imag_part(const Multiset2D& z);

// Multiplicity matrix: rows x_l, distinct interior x values, x_r; columns
// likewise in y.
RectComposition comp2d(const Multiset2D& z);

// Calls visit for every nonnegative matrix with the given row and column sums.
void for_each_table(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                    const std::function<void(const std::vector<int>&)>& visit);

// Number of rectangular compositions projecting to (xc, yc).
std::uint64_t count_preimages(const LinearComposition& xc, const LinearComposition& yc);

/// 2x2 spine label [a b; c d]: a points upper-left, b upper-right, c
/// lower-left, d lower-right of the cut point (matrix orientation).
struct Block2x2 {
  std::array<int, 4> e{};

  int a() const { return e[0]; }
  int b() const { return e[1]; }
  int c() const { return e[2]; }
  int d() const { return e[3]; }
  int total() const { return e[0] + e[1] + e[2] + e[3]; }
  RectComposition to_composition() const;
  // "[[a,b],[c,d]]"
  std::string key() const;

  friend auto operator<=>(const Block2x2&, const Block2x2&) = default;
};

// Upper-left block is rows < row_cut and columns < col_cut.
Block2x2 collapse(const RectComposition& a, int row_cut, int col_cut);

// Color of the step from `from` to `to` when they differ by moving mass
// within columns (row step) or within rows (column step). Blue: only the
// right column changes. Cyan: only the left column. Red: only the top row.
// Orange: only the bottom row. Anything else is mixed.
EdgeColor step_color(const Block2x2& from, const Block2x2& to);

struct GridPos {
  int row_cut;  // 1..h+1
  int col_cut;  // 1..k+1

  friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

struct SpineEdge {
  GridPos from;
  GridPos to;
  MergeKind direction;  // row: row_cut advances; col: col_cut advances
  EdgeColor color;
  int weight;           // c_i or d_j; squared length is weight * L^2
};

/// Product of the blue and red factor spines: an (h+1) x (k+1) grid of 2x2
/// labels, its h(k+1) + k(h+1) edges and hk unit squares.
struct SpineComplex {
  int row_cuts = 0;  // h+1
  int col_cuts = 0;  // k+1
  std::vector<Block2x2> grid;  // row-major over (row_cut, col_cut)
  std::vector<SpineEdge> edges;
  std::vector<GridPos> faces;  // lower-left corner of each unit square
  Rational length_i = 1;
  Rational length_j = 1;

  const Block2x2& at(GridPos p) const {
    return grid[static_cast<std::size_t>((p.row_cut - 1) * col_cuts + (p.col_cut - 1))];
  }
  Rational squared_length(const SpineEdge& e) const;
  // Colors of the four sides of the unit square with lower-left corner p.
  std::array<EdgeColor, 4> face_colors(GridPos p) const;
};

SpineComplex spine_rect(const RectComposition& a, const Rational& length_i = 1, const Rational& length_j = 1);

int dimension_rect(const RectComposition& a);

}  // namespace mrect

template <>
struct std::hash<mrect::RectComposition> {
  std::size_t operator()(const mrect::RectComposition& a) const noexcept;
};
