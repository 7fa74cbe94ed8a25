#include "mrect/linear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mrect/errors.hpp"

namespace mrect {

LinearComposition LinearComposition::validate(std::vector<int> entries, std::optional<int> expected_n) {
  if (entries.size() < 2) {
    throw CompositionError(Violation::too_short, "linear composition needs at least 2 entries");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) {
      throw CompositionError(Violation::negative_entry, "negative entry at position " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i + 1 < entries.size(); ++i) {
    if (entries[i] == 0) {
      throw CompositionError(Violation::zero_internal, "zero internal entry at position " + std::to_string(i));
    }
  }
  long long sum = 0;
  for (int v : entries) sum += v;
  if (sum == 0) throw CompositionError(Violation::zero_total, "entries sum to 0; need n >= 1");
  if (expected_n && sum != *expected_n) {
    throw CompositionError(Violation::wrong_sum,
                           "entries sum to " + std::to_string(sum) + ", expected " + std::to_string(*expected_n));
  }
  return LinearComposition(std::move(entries), static_cast<int>(sum));
}

std::string LinearComposition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? " " : "") << entries_[i];
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const LinearComposition& a, const LinearComposition& b) {
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

CutSet CutSet::make(int n, std::vector<int> cuts) {
  if (n < 1) throw InputError("cut set needs n >= 1");
  if (cuts.empty()) throw InputError("cut set must be nonempty");
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.front() < 0 || cuts.back() > n) throw InputError("cut outside {0, ..., n}");
  return CutSet(n, std::move(cuts));
}

bool CutSet::subset_of(const CutSet& other) const {
  return n_ == other.n_ && std::includes(other.cuts_.begin(), other.cuts_.end(), cuts_.begin(), cuts_.end());
}

LinearComposition merge_at(const LinearComposition& a, int position) {
  if (a.length() < 3) throw InputError("cannot merge a length-2 composition");
  if (position < 1 || position > static_cast<int>(a.length()) - 1) {
    throw InputError("merge position " + std::to_string(position) + " outside [1, " +
                     std::to_string(a.length() - 1) + "]");
  }
  std::vector<int> e(a.entries().begin(), a.entries().end());
  const auto p = static_cast<std::size_t>(position);
  e[p - 1] += e[p];
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(p));
  return LinearComposition::validate(std::move(e));
}

CutSet to_cutset(const LinearComposition& a) {
  std::vector<int> cuts;
  int prefix = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    prefix += a.entry(i);
    cuts.push_back(prefix);
  }
  return CutSet::make(a.total(), std::move(cuts));
}

LinearComposition from_cutset(const CutSet& c) {
  std::vector<int> e;
  int prev = 0;
  for (int cut : c.cuts()) {
    e.push_back(cut - prev);
    prev = cut;
  }
  e.push_back(c.total() - prev);
  return LinearComposition::validate(std::move(e));
}

bool leq_linear(const LinearComposition& a, const LinearComposition& b) {
  if (a.total() != b.total()) throw InputError("leq_linear: compositions of different n");
  return to_cutset(a).subset_of(to_cutset(b));
}

std::vector<LinearComposition> lower_covers_linear(const LinearComposition& a) {
  std::vector<LinearComposition> out;
  if (a.length() < 3) return out;
  for (int p = 1; p < static_cast<int>(a.length()); ++p) out.push_back(merge_at(a, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LinearComposition> enumerate_linear(int n) {
  if (n < 1) throw InputError("enumerate_linear: n must be >= 1");
  if (n > 24) throw ResourceLimitError("enumerate_linear: n > 24 would list more than 2^25 compositions");
  std::vector<LinearComposition> out;
  const unsigned long long subsets = 1ULL << (n + 1);
  out.reserve(subsets - 1);
  for (unsigned long long mask = 1; mask < subsets; ++mask) {
    std::vector<int> cuts;
    for (int c = 0; c <= n; ++c) {
      if (mask & (1ULL << c)) cuts.push_back(c);
    }
    out.push_back(from_cutset(CutSet::make(n, std::move(cuts))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dimension_linear(const LinearComposition& a) { return a.internal_count(); }

Multiset1D Multiset1D::make(Rational lo, Rational hi, std::vector<WeightedPoint> points) {
  if (!(lo < hi)) throw InputError("interval needs lo < hi");
  std::sort(points.begin(), points.end(), [](const auto& p, const auto& q) { return p.x < q.x; });
  std::vector<WeightedPoint> support;
  long long n = 0;
  for (auto& p : points) {
    if (p.multiplicity <= 0) throw InputError("multiplicity must be positive");
    if (p.x < lo || p.x > hi) throw InputError("point " + format_rational(p.x) + " outside the interval");
    n += p.multiplicity;
    if (!support.empty() && support.back().x == p.x) {
      support.back().multiplicity += p.multiplicity;
    } else {
      support.push_back(std::move(p));
    }
  }
  if (n == 0) throw InputError("multiset is empty; need n >= 1");
  return Multiset1D(std::move(lo), std::move(hi), std::move(support), static_cast<int>(n));
}

LinearComposition comp1d(const Multiset1D& x) {
  int left = 0;
  int right = 0;
  std::vector<int> e{0};
  for (const auto& p : x.support()) {
    if (p.x == x.lo()) left = p.multiplicity;
    else if (p.x == x.hi()) right = p.multiplicity;
    else e.push_back(p.multiplicity);
  }
  e.front() = left;
  e.push_back(right);
  return LinearComposition::validate(std::move(e));
}

double LinearSpine::length(std::size_t edge) const { return std::sqrt(to_double(squared_length(edge))); }

LinearSpine spine_linear(const LinearComposition& a, const Rational& scale) {
  if (scale <= 0) throw InputError("interval length must be positive");
  LinearSpine s;
  s.scale = scale;
  const int n = a.total();
  int before = 0;
  for (std::size_t gap = 1; gap < a.length(); ++gap) {
    before += a.entry(gap - 1);
    s.vertices.push_back(LinearComposition::validate({before, n - before}));
  }
  for (std::size_t i = 1; i + 1 < a.length(); ++i) s.weights.push_back(a.entry(i));
  return s;
}

}  // namespace mrect
