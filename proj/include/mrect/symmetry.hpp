#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrect/errors.hpp"
#include "mrect/graph.hpp"

namespace mrect {

class PermutationMatrix;

/// A permutation of [n] in one-line form: image()[i-1] is i.pi, the image of
/// i under the right action. The left action pi.i is the preimage.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // The adjacent transposition sigma_i = (i i+1), 1 <= i <= n-1.
  static Permutation transposition(int n, int i);
  // Parses disjoint cycles such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation from_cycles(int n, std::string_view cycles);
  // All n! permutations in lexicographic one-line order.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(image_.size()); }
  std::span<const int> image() const { return image_; }
  int image_of(int i) const;
  int preimage_of(int i) const;
  Permutation inverse() const;
  PermutationMatrix matrix() const;

  // "3 1 2": canonical vertex key in graphs.
  std::string key() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// Product alpha.beta, represented by M_alpha * M_beta: i.(alpha beta) = (i.alpha).beta.
Permutation compose(const Permutation& p, const Permutation& q);

// pi.i: the element sent to i (left action, right copy as domain).
int act_left(const Permutation& p, int i);
// i.pi: where i is sent (right action, left copy as domain).
int act_right(int i, const Permutation& p);

/// n x n 0/1 matrix with one 1 per row and column; entry (i,j) = 1 iff i.pi = j.
class PermutationMatrix {
 public:
  PermutationMatrix(int n, std::vector<std::uint8_t> entries);

  int size() const { return n_; }
  // 1-indexed.
  int at(int i, int j) const { return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  Permutation permutation() const;
  std::vector<std::vector<int>> rows() const;

  friend PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b);
  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> entries_;
};

// Rows i and i+1 exchanged: the matrix of sigma_i . pi.
PermutationMatrix swap_rows(const PermutationMatrix& m, int i);
// Columns i and i+1 exchanged: the matrix of pi . sigma_i.
PermutationMatrix swap_cols(const PermutationMatrix& m, int i);

// Coordinate-permuting tuple actions, written exactly as the defining
// formulas: sigma.x = (x_{sigma.1}, ..., x_{sigma.n}) and
// x.sigma = (x_{n.sigma}, ..., x_{1.sigma}). Display only; nothing algebraic
// depends on them.
template <typename T>
std::vector<T> act_left_tuple(const Permutation& s, std::span<const T> x) {
  if (static_cast<int>(x.size()) != s.size()) throw InputError("tuple length differs from permutation size");
  std::vector<T> out;
  out.reserve(x.size());
  for (int t = 1; t <= s.size(); ++t) out.push_back(x[static_cast<std::size_t>(act_left(s, t) - 1)]);
  return out;
}

template <typename T>
std::vector<T> act_right_tuple(std::span<const T> x, const Permutation& s) {
  if (static_cast<int>(x.size()) != s.size()) throw InputError("tuple length differs from permutation size");
  std::vector<T> out;
  out.reserve(x.size());
  for (int t = s.size(); t >= 1; --t) out.push_back(x[static_cast<std::size_t>(act_right(t, s) - 1)]);
  return out;
}

// Left (sigma_i . pi) or right (pi . sigma_i) Cayley graph of Sym_n over the
// adjacent transpositions. Each undirected edge appears once.
LabeledMultigraph cayley_graph(int n, Side side);
// Union of both Cayley graphs on the common vertex set, parallel edges kept.
LabeledMultigraph overlay_lr(int n);

}  // namespace mrect
