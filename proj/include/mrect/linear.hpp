#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrect/rational.hpp"

namespace mrect {

/// Integer row vector [a_l a_1 ... a_k a_r] summing to n >= 1: the ends may be
/// zero, the k internal entries are positive. Labels a face of the
/// orthoscheme Mult_n(I); the face has dimension k.
///
/// Ordering is canonical: shorter first, then lexicographic.
class LinearComposition {
 public:
  // Throws CompositionError naming the first violated rule.
  static LinearComposition validate(std::vector<int> entries, std::optional<int> expected_n = std::nullopt);

  std::span<const int> entries() const { return entries_; }
  int entry(std::size_t i) const { return entries_[i]; }
  std::size_t length() const { return entries_.size(); }
  int internal_count() const { return static_cast<int>(entries_.size()) - 2; }
  int total() const { return total_; }
  // "[3 4 1 2 1]"
  std::string to_string() const;

  friend bool operator==(const LinearComposition& a, const LinearComposition& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const LinearComposition& a, const LinearComposition& b);

 private:
  explicit LinearComposition(std::vector<int> entries, int total) : entries_(std::move(entries)), total_(total) {}

  std::vector<int> entries_;
  int total_;
};

/// Nonempty subset of {0, ..., n}: the proper-prefix partial sums of a linear
/// composition. Linear compositions of n under merging are isomorphic to
/// these sets under inclusion.
class CutSet {
 public:
  static CutSet make(int n, std::vector<int> cuts);

  int total() const { return n_; }
  const std::vector<int>& cuts() const { return cuts_; }
  bool subset_of(const CutSet& other) const;

  friend bool operator==(const CutSet&, const CutSet&) = default;

 private:
  CutSet(int n, std::vector<int> cuts) : n_(n), cuts_(std::move(cuts)) {}

  int n_;
  std::vector<int> cuts_;  // strictly increasing
};

// Replaces entries position-1 and position (0-based) by their sum;
// position ranges over 1..k+1. Merging a length-2 composition is an error.
LinearComposition merge_at(const LinearComposition& a, int position);

CutSet to_cutset(const LinearComposition& a);
LinearComposition from_cutset(const CutSet& c);

// a <= b iff a is obtained from b by merges, i.e. cuts(a) is a subset of cuts(b).
bool leq_linear(const LinearComposition& a, const LinearComposition& b);

// All single merges of a, canonically ordered.
std::vector<LinearComposition> lower_covers_linear(const LinearComposition& a);

// All 2^{n+1} - 1 linear compositions of n, canonically ordered.
std::vector<LinearComposition> enumerate_linear(int n);

int dimension_linear(const LinearComposition& a);

struct WeightedPoint {
  Rational x;
  int multiplicity;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// A multiset of points in the closed interval [lo, hi], stored as its sorted
/// support with positive multiplicities.
class Multiset1D {
 public:
  // Sorts the points and merges repeated values. Rejects an empty or reversed
  // interval, points outside it, nonpositive multiplicities and n = 0.
  static Multiset1D make(Rational lo, Rational hi, std::vector<WeightedPoint> points);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::vector<WeightedPoint>& support() const { return support_; }
  int size() const { return n_; }

  friend bool operator==(const Multiset1D&, const Multiset1D&) = default;

 private:
  Multiset1D(Rational lo, Rational hi, std::vector<WeightedPoint> support, int n)
      : lo_(std::move(lo)), hi_(std::move(hi)), support_(std::move(support)), n_(n) {}

  Rational lo_;
  Rational hi_;
  std::vector<WeightedPoint> support_;
  int n_;
};

// Multiplicity vector [m_l m_1 ... m_k m_r]; endpoint slots are always present.
LinearComposition comp1d(const Multiset1D& x);

/// Spine of the orthoscheme labeled by a composition of length k+2: the k+1
/// length-2 compositions obtained by keeping one gap, joined by k edges. Edge
/// i has squared length a_i * L^2 where a_i is the i-th internal entry.
struct LinearSpine {
  std::vector<LinearComposition> vertices;
  std::vector<int> weights;
  Rational scale = 1;

  Rational squared_length(std::size_t edge) const { return weights.at(edge) * scale * scale; }
  double length(std::size_t edge) const;
};

LinearSpine spine_linear(const LinearComposition& a, const Rational& scale = 1);

}  // namespace mrect
