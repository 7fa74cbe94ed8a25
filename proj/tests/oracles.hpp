// Brute-force oracles that share no code with the library.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every vector of length >= 2 with entries in 0..n summing to n whose interior
// entries are positive.
inline std::vector<Vec> linear_compositions(int n) {
  std::vector<Vec> out;
  for (int len = 2; len <= n + 2; ++len) {
    Vec v(static_cast<std::size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == len - 1) {
        v[static_cast<std::size_t>(pos)] = left;
        out.push_back(v);
        return;
      }
      const int lo = (pos == 0) ? 0 : 1;
      for (int x = lo; x <= left; ++x) {
        v[static_cast<std::size_t>(pos)] = x;
        rec(pos + 1, left - x);
      }
    };
    rec(0, n);
  }
  return out;
}

inline std::vector<Vec> merges(const Vec& a) {
  std::vector<Vec> out;
  for (std::size_t p = 0; p + 1 < a.size(); ++p) {
    Vec b;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == p + 1) continue;
      b.push_back(i == p ? a[p] + a[p + 1] : a[i]);
    }
    if (b.size() >= 2) out.push_back(b);
  }
  return out;
}

// b reachable from a by zero or more merges means b <= a.
inline std::set<Vec> merge_closure(const Vec& a) {
  std::set<Vec> seen{a};
  std::queue<Vec> todo;
  todo.push(a);
  while (!todo.empty()) {
    const Vec cur = todo.front();
    todo.pop();
    for (auto& m : merges(cur)) {
      if (seen.insert(m).second) todo.push(m);
    }
  }
  return seen;
}

inline bool valid_matrix(const Mat& m) {
  const std::size_t h = m.size(), k = m[0].size();
  if (h < 2 || k < 2) return false;
  for (std::size_t i = 1; i + 1 < h; ++i) {
    if (std::accumulate(m[i].begin(), m[i].end(), 0) == 0) return false;
  }
  for (std::size_t j = 1; j + 1 < k; ++j) {
    int s = 0;
    for (std::size_t i = 0; i < h; ++i) s += m[i][j];
    if (s == 0) return false;
  }
  return true;
}

// Number of valid h x k matrices with entry sum n, keyed by (h-2)+(k-2).
inline std::map<int, long long> rect_census(int n) {
  std::map<int, long long> out;
  for (int h = 2; h <= n + 2; ++h) {
    for (int k = 2; k <= n + 2; ++k) {
      const int cells = h * k;
      std::vector<int> flat(static_cast<std::size_t>(cells), 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == cells - 1) {
          flat[static_cast<std::size_t>(pos)] = left;
          Mat m(static_cast<std::size_t>(h), Vec(static_cast<std::size_t>(k)));
          for (int i = 0; i < cells; ++i) m[static_cast<std::size_t>(i / k)][static_cast<std::size_t>(i % k)] = flat[static_cast<std::size_t>(i)];
          if (valid_matrix(m)) ++out[(h - 2) + (k - 2)];
          return;
        }
        for (int x = 0; x <= left; ++x) {
          flat[static_cast<std::size_t>(pos)] = x;
          rec(pos + 1, left - x);
        }
      };
      rec(0, n);
    }
  }
  return out;
}

// Nonnegative integer tables with the given margins, by filling cells one at a time.
inline long long count_tables(const Vec& rows, const Vec& cols) {
  const std::size_t h = rows.size(), k = cols.size();
  Vec rleft = rows, cleft = cols;
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == h * k) {
      if (std::all_of(rleft.begin(), rleft.end(), [](int v) { return v == 0; }) &&
          std::all_of(cleft.begin(), cleft.end(), [](int v) { return v == 0; })) {
        ++count;
      }
      return;
    }
    const std::size_t i = cell / k, j = cell % k;
    for (int x = 0; x <= std::min(rleft[i], cleft[j]); ++x) {
      rleft[i] -= x;
      cleft[j] -= x;
      rec(cell + 1);
      rleft[i] += x;
      cleft[j] += x;
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
