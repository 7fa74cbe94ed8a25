#include "mrect/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mrect {

namespace {

void check_point(int n, int i) {
  if (i < 1 || i > n) {
    throw InputError("point " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) throw InputError("permutation must have n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("one-line form is not a bijection of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InputError("permutation must have n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) {
    throw InputError("sigma_" + std::to_string(i) + " undefined for n = " + std::to_string(n));
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, std::string_view cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw InputError("cycle notation: expected '('");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos >= cycles.size()) throw InputError("cycle notation: unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos]))) throw InputError("cycle notation: expected integer");
      int v = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos]))) {
        v = v * 10 + (cycles[pos] - '0');
        ++pos;
      }
      check_point(n, v);
      if (used[static_cast<std::size_t>(v)]) throw InputError("cycle notation: cycles are not disjoint");
      used[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img = identity(n).image_;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int Permutation::image_of(int i) const {
  check_point(size(), i);
  return image_[static_cast<std::size_t>(i - 1)];
}

int Permutation::preimage_of(int i) const {
  check_point(size(), i);
  auto it = std::find(image_.begin(), image_.end(), i);
  return static_cast<int>(it - image_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

PermutationMatrix Permutation::matrix() const {
  const int n = size();
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>((i - 1) * n + image_of(i) - 1)] = 1;
  return PermutationMatrix(n, std::move(e));
}

std::string Permutation::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? " " : "") << image_[i];
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("compose: permutation sizes differ");
  std::vector<int> img(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) img[static_cast<std::size_t>(i - 1)] = q.image_of(p.image_of(i));
  return Permutation(std::move(img));
}

int act_left(const Permutation& p, int i) { return p.preimage_of(i); }

int act_right(int i, const Permutation& p) { return p.image_of(i); }

PermutationMatrix::PermutationMatrix(int n, std::vector<std::uint8_t> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("permutation matrix must be n x n with n >= 1");
  }
  std::vector<int> row(static_cast<std::size_t>(n), 0), col(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto v = entries_[static_cast<std::size_t>(i * n + j)];
      if (v > 1) throw InputError("permutation matrix entries must be 0 or 1");
      row[static_cast<std::size_t>(i)] += v;
      col[static_cast<std::size_t>(j)] += v;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (row[static_cast<std::size_t>(i)] != 1 || col[static_cast<std::size_t>(i)] != 1) {
      throw InputError("permutation matrix needs exactly one 1 per row and column");
    }
  }
}

Permutation PermutationMatrix::permutation() const {
  std::vector<int> img(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (at(i, j)) img[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> PermutationMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(i, j);
  }
  return out;
}

PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix product: sizes differ");
  const int n = a.n_;
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      int s = 0;
      for (int j = 1; j <= n; ++j) s += a.at(i, j) * b.at(j, k);
      e[static_cast<std::size_t>((i - 1) * n + (k - 1))] = static_cast<std::uint8_t>(s);
    }
  }
  return PermutationMatrix(n, std::move(e));
}

PermutationMatrix swap_rows(const PermutationMatrix& m, int i) {
  const int n = m.size();
  if (i < 1 || i >= n) throw InputError("swap_rows: index out of range");
  auto rows = m.rows();
  std::swap(rows[static_cast<std::size_t>(i - 1)], rows[static_cast<std::size_t>(i)]);
  std::vector<std::uint8_t> e;
  for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return PermutationMatrix(n, std::move(e));
}

PermutationMatrix swap_cols(const PermutationMatrix& m, int i) {
  const int n = m.size();
  if (i < 1 || i >= n) throw InputError("swap_cols: index out of range");
  auto rows = m.rows();
  for (auto& r : rows) std::swap(r[static_cast<std::size_t>(i - 1)], r[static_cast<std::size_t>(i)]);
  std::vector<std::uint8_t> e;
  for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return PermutationMatrix(n, std::move(e));
}

LabeledMultigraph cayley_graph(int n, Side side) {
  if (n < 1) throw InputError("cayley_graph: n must be >= 1");
  if (side != Side::left && side != Side::right) throw InputError("cayley_graph: side must be Left or Right");
  const auto perms = Permutation::all(n);
  std::vector<std::string> vertices;
  vertices.reserve(perms.size());
  std::vector<GraphEdge> edges;
  for (const auto& p : perms) {
    vertices.push_back(p.key());
    for (int i = 1; i < n; ++i) {
      const auto s = Permutation::transposition(n, i);
      const auto q = side == Side::left ? compose(s, p) : compose(p, s);
      // sigma_i is an involution, so each edge is seen from both ends; keep one.
      if (p < q) edges.push_back({p.key(), q.key(), {side, i}});
    }
  }
  return LabeledMultigraph(std::move(vertices), std::move(edges));
}

LabeledMultigraph overlay_lr(int n) {
  const auto left = cayley_graph(n, Side::left);
  const auto right = cayley_graph(n, Side::right);
  std::vector<GraphEdge> edges = left.edges();
  edges.insert(edges.end(), right.edges().begin(), right.edges().end());
  return LabeledMultigraph(left.vertices(), std::move(edges));
}

}  // namespace mrect
