#include "mrect/rectangular.hpp"

#include <algorithm>
#include <sstream>

#include "mrect/errors.hpp"

namespace mrect {

namespace {

// All ways to pick `blocks` consecutive blocks covering 0..count-1, as start
// indices (the first is always 0).
void for_each_partition(int count, int blocks, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> starts{0};
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(starts.size()) == blocks) {
      visit(starts);
      return;
    }
    const int remaining = blocks - static_cast<int>(starts.size());
    for (int s = next; s <= count - remaining; ++s) {
      starts.push_back(s);
      rec(s + 1);
      starts.pop_back();
    }
  };
  if (blocks >= 1 && blocks <= count) rec(1);
}

std::vector<int> block_totals(const std::vector<int>& sums, const std::vector<int>& starts) {
  std::vector<int> out(starts.size(), 0);
  std::size_t b = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (b + 1 < starts.size() && static_cast<int>(i) == starts[b + 1]) ++b;
    out[b] += sums[i];
  }
  return out;
}

}  // namespace

RectComposition RectComposition::validate(const std::vector<std::vector<int>>& rows, std::optional<int> expected_n) {
  if (rows.size() < 2) throw CompositionError(Violation::too_short, "rectangular composition needs at least 2 rows");
  const std::size_t ncols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw CompositionError(Violation::ragged, "matrix rows have unequal lengths");
  }
  if (ncols < 2) throw CompositionError(Violation::too_short, "rectangular composition needs at least 2 columns");

  std::vector<int> data;
  data.reserve(rows.size() * ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (rows[i][j] < 0) {
        throw CompositionError(Violation::negative_entry,
                               "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      data.push_back(rows[i][j]);
    }
  }
  RectComposition a(static_cast<int>(rows.size()), static_cast<int>(ncols), std::move(data), 0);
  const auto rs = a.row_sums();
  const auto cs = a.col_sums();
  for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
    if (rs[i] == 0) throw CompositionError(Violation::zero_internal, "internal row " + std::to_string(i) + " sums to 0");
  }
  for (std::size_t j = 1; j + 1 < cs.size(); ++j) {
    if (cs[j] == 0) {
      throw CompositionError(Violation::zero_internal, "internal column " + std::to_string(j) + " sums to 0");
    }
  }
  long long total = 0;
  for (int v : rs) total += v;
  if (total == 0) throw CompositionError(Violation::zero_total, "entries sum to 0; need n >= 1");
  if (expected_n && total != *expected_n) {
    throw CompositionError(Violation::wrong_sum,
                           "entries sum to " + std::to_string(total) + ", expected " + std::to_string(*expected_n));
  }
  a.total_ = static_cast<int>(total);
  return a;
}

std::vector<int> RectComposition::row_sums() const {
  std::vector<int> s(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(i)] += at(i, j);
  }
  return s;
}

std::vector<int> RectComposition::col_sums() const {
  std::vector<int> s(static_cast<std::size_t>(cols_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(j)] += at(i, j);
  }
  return s;
}

std::vector<std::vector<int>> RectComposition::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    out[static_cast<std::size_t>(i)].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  return out;
}

std::string RectComposition::key() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const RectComposition& a, const RectComposition& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.data_ <=> b.data_;
}

RectComposition row_merge(const RectComposition& a, int i) {
  if (a.rows() < 3) throw InputError("cannot row-merge a matrix with 2 rows");
  if (i < 1 || i >= a.rows()) throw InputError("row merge position " + std::to_string(i) + " out of range");
  auto rows = a.to_rows();
  const auto p = static_cast<std::size_t>(i);
  for (std::size_t j = 0; j < rows[p].size(); ++j) rows[p - 1][j] += rows[p][j];
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p));
  return RectComposition::validate(rows);
}

RectComposition col_merge(const RectComposition& a, int j) {
  if (a.cols() < 3) throw InputError("cannot column-merge a matrix with 2 columns");
  if (j < 1 || j >= a.cols()) throw InputError("column merge position " + std::to_string(j) + " out of range");
  auto rows = a.to_rows();
  const auto p = static_cast<std::size_t>(j);
  for (auto& r : rows) {
    r[p - 1] += r[p];
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return RectComposition::validate(rows);
}

LinearComposition pi_re(const RectComposition& a) { return LinearComposition::validate(a.row_sums()); }

LinearComposition pi_im(const RectComposition& a) { return LinearComposition::validate(a.col_sums()); }

RectComposition block_sum(const RectComposition& b, const std::vector<int>& row_starts,
                          const std::vector<int>& col_starts) {
  auto block_of = [](const std::vector<int>& starts, int idx) {
    return static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), idx) - starts.begin() - 1);
  };
  if (row_starts.empty() || row_starts.front() != 0 || col_starts.empty() || col_starts.front() != 0) {
    throw InputError("block partitions must start at index 0");
  }
  std::vector<std::vector<int>> out(row_starts.size(), std::vector<int>(col_starts.size(), 0));
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out[block_of(row_starts, i)][block_of(col_starts, j)] += b.at(i, j);
  }
  return RectComposition::validate(out);
}

bool leq_rect(const RectComposition& a, const RectComposition& b) {
  if (a.total() != b.total()) throw InputError("leq_rect: compositions of different n");
  if (a.rows() > b.rows() || a.cols() > b.cols()) return false;

  // Only partitions whose block margins agree with a's margins can work.
  const auto brs = b.row_sums();
  const auto bcs = b.col_sums();
  const auto ars = a.row_sums();
  const auto acs = a.col_sums();
  std::vector<std::vector<int>> row_parts, col_parts;
  for_each_partition(b.rows(), a.rows(), [&](const std::vector<int>& s) {
    if (block_totals(brs, s) == ars) row_parts.push_back(s);
  });
  if (row_parts.empty()) return false;
  for_each_partition(b.cols(), a.cols(), [&](const std::vector<int>& s) {
    if (block_totals(bcs, s) == acs) col_parts.push_back(s);
  });
  for (const auto& rp : row_parts) {
    for (const auto& cp : col_parts) {
      if (block_sum(b, rp, cp) == a) return true;
    }
  }
  return false;
}

std::vector<Cover> lower_covers_rect(const RectComposition& a) {
  std::vector<Cover> out;
  if (a.rows() >= 3) {
    for (int i = 1; i < a.rows(); ++i) out.push_back({MergeKind::row, i, row_merge(a, i)});
  }
  if (a.cols() >= 3) {
    for (int j = 1; j < a.cols(); ++j) out.push_back({MergeKind::col, j, col_merge(a, j)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Cover& x, const Cover& y) { return x.result < y.result; });
  out.erase(std::unique(out.begin(), out.end(), [](const Cover& x, const Cover& y) { return x.result == y.result; }),
            out.end());
  return out;
}

RectComposition padded_permutation_matrix(const Permutation& pi) {
  const int n = pi.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n + 2), std::vector<int>(static_cast<std::size_t>(n + 2), 0));
  for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pi.image_of(i))] = 1;
  return RectComposition::validate(rows);
}

std::vector<MaximalElement> maximal_elements(int n) {
  if (n < 1) throw InputError("maximal_elements: n must be >= 1");
  if (n > 8) throw ResourceLimitError("maximal_elements: n > 8 (n! padded matrices) is beyond the supported range");
  std::vector<MaximalElement> out;
  for (auto& p : Permutation::all(n)) {
    auto m = padded_permutation_matrix(p);
    out.push_back({std::move(p), std::move(m)});
  }
  return out;
}

std::vector<RectComposition> minimal_elements(int n) {
  if (n < 1) throw InputError("minimal_elements: n must be >= 1");
  std::vector<RectComposition> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (int c = 0; a + b + c <= n; ++c) out.push_back(RectComposition::validate({{a, b}, {c, n - a - b - c}}));
    }
  }
  return out;
}

Multiset2D Multiset2D::make(Rational xl, Rational xr, Rational yb, Rational yt, std::vector<WeightedPoint2D> points) {
  if (!(xl < xr) || !(yb < yt)) throw InputError("rectangle needs xl < xr and yb < yt");
  std::sort(points.begin(), points.end(), [](const auto& p, const auto& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  std::vector<WeightedPoint2D> merged;
  long long n = 0;
  for (auto& p : points) {
    if (p.multiplicity <= 0) throw InputError("multiplicity must be positive");
    if (p.x < xl || p.x > xr || p.y < yb || p.y > yt) {
      throw InputError("point (" + format_rational(p.x) + ", " + format_rational(p.y) + ") outside the rectangle");
    }
    n += p.multiplicity;
    if (!merged.empty() && merged.back().x == p.x && merged.back().y == p.y) {
      merged.back().multiplicity += p.multiplicity;
    } else {
      merged.push_back(std::move(p));
    }
  }
  if (n == 0) throw InputError("multiset is empty; need n >= 1");
  return Multiset2D(std::move(xl), std::move(xr), std::move(yb), std::move(yt), std::move(merged), static_cast<int>(n));
}

Multiset1D real_part(const Multiset2D& z) {
  std::vector<WeightedPoint> pts;
  for (const auto& p : z.points()) pts.push_back({p.x, p.multiplicity});
  return Multiset1D::make(z.xl(), z.xr(), std::move(pts));
}

Multiset1D imag_part(const Multiset2D& z) {
  std::vector<WeightedPoint> pts;
  for (const auto& p : z.points()) pts.push_back({p.y, p.multiplicity});
  return Multiset1D::make(z.yb(), z.yt(), std::move(pts));
}

RectComposition comp2d(const Multiset2D& z) {
  // Grid lines: the two endpoints plus every distinct interior coordinate.
  auto grid = [](const Rational& lo, const Rational& hi, std::vector<Rational> values) {
    values.push_back(lo);
    values.push_back(hi);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  };
  std::vector<Rational> xs, ys;
  for (const auto& p : z.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  xs = grid(z.xl(), z.xr(), std::move(xs));
  ys = grid(z.yb(), z.yt(), std::move(ys));

  std::vector<std::vector<int>> m(xs.size(), std::vector<int>(ys.size(), 0));
  for (const auto& p : z.points()) {
    const auto i = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), p.x) - xs.begin());
    const auto j = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin());
    m[i][j] += p.multiplicity;
  }
  return RectComposition::validate(m);
}

void for_each_table(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                    const std::function<void(const std::vector<int>&)>& visit) {
  long long rt = 0, ct = 0;
  for (int v : row_sums) rt += v;
  for (int v : col_sums) ct += v;
  if (rt != ct || row_sums.empty() || col_sums.empty()) return;

  const std::size_t R = row_sums.size();
  const std::size_t C = col_sums.size();
  std::vector<int> table(R * C, 0);
  std::vector<int> cap = col_sums;

  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t i, std::size_t j, int left_in_row) {
    if (i + 1 == R) {
      // Last row is forced by the remaining column capacities.
      for (std::size_t c = 0; c < C; ++c) table[i * C + c] = cap[c];
      visit(table);
      return;
    }
    if (j + 1 == C) {
      if (left_in_row > cap[j]) return;
      table[i * C + j] = left_in_row;
      cap[j] -= left_in_row;
      fill(i + 1, 0, row_sums[i + 1]);
      cap[j] += left_in_row;
      return;
    }
    const int hi = std::min(left_in_row, cap[j]);
    for (int v = 0; v <= hi; ++v) {
      table[i * C + j] = v;
      cap[j] -= v;
      fill(i, j + 1, left_in_row - v);
      cap[j] += v;
    }
  };
  fill(0, 0, row_sums[0]);
}

std::uint64_t count_preimages(const LinearComposition& xc, const LinearComposition& yc) {
  if (xc.total() != yc.total()) throw InputError("count_preimages: compositions of different n");
  std::uint64_t count = 0;
  const std::vector<int> rs(xc.entries().begin(), xc.entries().end());
  const std::vector<int> cs(yc.entries().begin(), yc.entries().end());
  for_each_table(rs, cs, [&](const std::vector<int>&) { ++count; });
  return count;
}

RectComposition Block2x2::to_composition() const { return RectComposition::validate({{a(), b()}, {c(), d()}}); }

std::string Block2x2::key() const {
  std::ostringstream os;
  os << "[[" << a() << ',' << b() << "],[" << c() << ',' << d() << "]]";
  return os.str();
}

Block2x2 collapse(const RectComposition& a, int row_cut, int col_cut) {
  if (row_cut < 1 || row_cut >= a.rows() || col_cut < 1 || col_cut >= a.cols()) {
    throw InputError("collapse: cut outside the matrix");
  }
  Block2x2 blk;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const int q = (i < row_cut ? 0 : 2) + (j < col_cut ? 0 : 1);
      blk.e[static_cast<std::size_t>(q)] += a.at(i, j);
    }
  }
  return blk;
}

EdgeColor step_color(const Block2x2& from, const Block2x2& to) {
  std::array<int, 4> d{};
  for (std::size_t q = 0; q < 4; ++q) d[q] = to.e[q] - from.e[q];
  const bool left = d[0] != 0 || d[2] != 0;
  const bool right = d[1] != 0 || d[3] != 0;
  const bool top = d[0] != 0 || d[1] != 0;
  const bool bottom = d[2] != 0 || d[3] != 0;
  const bool columns_kept = d[0] + d[2] == 0 && d[1] + d[3] == 0;
  const bool rows_kept = d[0] + d[1] == 0 && d[2] + d[3] == 0;
  if (columns_kept && left != right) return right ? EdgeColor::blue : EdgeColor::cyan;
  if (rows_kept && top != bottom) return top ? EdgeColor::red : EdgeColor::orange;
  return EdgeColor::mixed;
}

Rational SpineComplex::squared_length(const SpineEdge& e) const {
  const Rational& L = e.direction == MergeKind::row ? length_i : length_j;
  return e.weight * L * L;
}

std::array<EdgeColor, 4> SpineComplex::face_colors(GridPos p) const {
  const GridPos down{p.row_cut + 1, p.col_cut};
  const GridPos right{p.row_cut, p.col_cut + 1};
  const GridPos diag{p.row_cut + 1, p.col_cut + 1};
  return {step_color(at(p), at(down)), step_color(at(right), at(diag)), step_color(at(p), at(right)),
          step_color(at(down), at(diag))};
}

SpineComplex spine_rect(const RectComposition& a, const Rational& length_i, const Rational& length_j) {
  if (length_i <= 0 || length_j <= 0) throw InputError("rectangle side lengths must be positive");
  SpineComplex s;
  s.row_cuts = a.rows() - 1;
  s.col_cuts = a.cols() - 1;
  s.length_i = length_i;
  s.length_j = length_j;
  for (int i = 1; i <= s.row_cuts; ++i) {
    for (int j = 1; j <= s.col_cuts; ++j) s.grid.push_back(collapse(a, i, j));
  }
  const auto rs = a.row_sums();
  const auto cs = a.col_sums();
  for (int i = 1; i <= s.row_cuts; ++i) {
    for (int j = 1; j <= s.col_cuts; ++j) {
      const GridPos p{i, j};
      if (i < s.row_cuts) {
        const GridPos q{i + 1, j};
        s.edges.push_back({p, q, MergeKind::row, step_color(s.at(p), s.at(q)), rs[static_cast<std::size_t>(i)]});
      }
      if (j < s.col_cuts) {
        const GridPos q{i, j + 1};
        s.edges.push_back({p, q, MergeKind::col, step_color(s.at(p), s.at(q)), cs[static_cast<std::size_t>(j)]});
      }
      if (i < s.row_cuts && j < s.col_cuts) s.faces.push_back(p);
    }
  }
  return s;
}

int dimension_rect(const RectComposition& a) { return a.internal_rows() + a.internal_cols(); }

}  // namespace mrect

std::size_t std::hash<mrect::RectComposition>::operator()(const mrect::RectComposition& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.rows_) * 1315423911u + static_cast<std::size_t>(a.cols_);
  for (int v : a.data_) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}
