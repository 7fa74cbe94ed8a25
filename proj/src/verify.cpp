#include "mrect/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mrect/complexes.hpp"
#include "mrect/errors.hpp"
#include "mrect/symmetry.hpp"

namespace mrect {

namespace {

const std::vector<std::string> kFamilies{"linear-poset", "spine-example", "face-poset", "dual-graph", "counting",
                                         "preimages",    "prism",         "permutahedron", "tetra", "determinism"};

std::string tag(int n) { return "[n=" + std::to_string(n) + "]"; }

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

LinearComposition full_composition(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) + 2, 1);
  e.front() = 0;
  e.back() = 0;
  return LinearComposition::validate(e);
}

class Suite {
 public:
  explicit Suite(RunReport& report) : report_(report) {}

  template <typename T>
  void expect(const std::string& claim, const T& expected, const T& actual) {
    report_.checks.push_back({claim, str(expected), str(actual), expected == actual});
  }
  void expect_true(const std::string& claim, bool ok, const std::string& detail = "true") {
    report_.checks.push_back({claim, "true", ok ? "true" : detail, ok});
  }

  io::Json& results() { return report_.results; }

 private:
  RunReport& report_;
};

// ---------------------------------------------------------------------------
// AC1: linear compositions form Bool*_{n+1}.

void linear_poset(Suite& s, int lo, int hi) {
  for (int n = std::max(lo, 1); n <= std::min(hi, 16); ++n) {
    const auto all = enumerate_linear(n);
    s.expect("AC1.count" + tag(n), (std::uint64_t{1} << (n + 1)) - 1, static_cast<std::uint64_t>(all.size()));
    if (n > 6) continue;

    // Cut sets as plain prefix-sum sets, and downsets by repeated merging.
    std::map<LinearComposition, std::set<int>> cuts;
    for (const auto& a : all) {
      std::set<int> c;
      int prefix = 0;
      for (std::size_t i = 0; i + 1 < a.length(); ++i) c.insert(prefix += a.entry(i));
      cuts.emplace(a, std::move(c));
    }
    std::size_t mismatches = 0;
    for (const auto& b : all) {
      std::set<LinearComposition> down{b};
      std::vector<LinearComposition> stack{b};
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto& y : lower_covers_linear(x)) {
          if (down.insert(y).second) stack.push_back(y);
        }
      }
      const auto& cb = cuts.at(b);
      for (const auto& a : all) {
        const auto& ca = cuts.at(a);
        const bool inclusion = std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
        const bool leq = leq_linear(a, b);
        if (leq != inclusion || leq != down.contains(a)) ++mismatches;
      }
    }
    s.expect("AC1.order-agreement" + tag(n), std::size_t{0}, mismatches);
  }
}

// ---------------------------------------------------------------------------
// AC2: x_l^3 x_1^4 x_2^1 x_3^2 x_r^1.

void spine_example(Suite& s) {
  const auto x = Multiset1D::make(0, 4, {{0, 3}, {1, 4}, {2, 1}, {3, 2}, {4, 1}});
  const auto a = comp1d(x);
  s.expect("AC2.composition", std::string("[3 4 1 2 1]"), a.to_string());
  const auto sp = spine_linear(a);
  std::string verts;
  for (const auto& v : sp.vertices) verts += v.to_string();
  s.expect("AC2.spine-vertices", std::string("[3 8][7 4][8 3][10 1]"), verts);
  std::string lens;
  for (std::size_t i = 0; i < sp.weights.size(); ++i) lens += (i ? " " : "") + format_rational(sp.squared_length(i));
  s.expect("AC2.squared-lengths", std::string("4/1 1/1 2/1"), lens);
}

// ---------------------------------------------------------------------------
// AC3: face poset against a brute-force census of valid matrices.

std::vector<std::size_t> census_by_dimension(int n) {
  std::vector<std::size_t> f;
  for (int r = 2; r <= n + 2; ++r) {
    for (int c = 2; c <= n + 2; ++c) {
      std::vector<int> cells(static_cast<std::size_t>(r * c), 0);
      std::function<void(std::size_t, int)> place = [&](std::size_t idx, int left) {
        if (idx + 1 == cells.size()) {
          cells[idx] = left;
          for (int i = 1; i + 1 < r; ++i) {
            int sum = 0;
            for (int j = 0; j < c; ++j) sum += cells[static_cast<std::size_t>(i * c + j)];
            if (sum == 0) return;
          }
          for (int j = 1; j + 1 < c; ++j) {
            int sum = 0;
            for (int i = 0; i < r; ++i) sum += cells[static_cast<std::size_t>(i * c + j)];
            if (sum == 0) return;
          }
          const auto d = static_cast<std::size_t>(r + c - 4);
          if (d >= f.size()) f.resize(d + 1, 0);
          ++f[d];
          return;
        }
        for (int v = 0; v <= left; ++v) {
          cells[idx] = v;
          place(idx + 1, left - v);
        }
      };
      place(0, n);
    }
  }
  return f;
}

void face_poset(Suite& s, int lo, int hi) {
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    const auto p = face_poset_rect(n);
    const auto f = p.f_vector();
    s.results()["face_poset"][std::to_string(n)] = {{"f_vector", f}, {"elements", p.elements.size()}};
    if (n == 1) s.expect("AC3.f-vector" + tag(n), str(std::vector<std::size_t>{4, 4, 1}), str(f));
    s.expect("AC3.euler" + tag(n), 1LL, p.euler_characteristic());
    s.expect("AC3.census" + tag(n), str(census_by_dimension(n)), str(f));
    bool graded = true;
    for (const auto& [lower, upper] : p.covers) graded = graded && p.dims[upper] == p.dims[lower] + 1;
    s.expect_true("AC3.graded" + tag(n), graded, "false");
    s.expect("AC3.top-cells" + tag(n), factorial(n), static_cast<std::uint64_t>(f.back()));
  }
}

// ---------------------------------------------------------------------------
// AC4: dual graph equals the overlaid Cayley graph.

void dual(Suite& s, int lo, int hi) {
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    const auto r = verify_dual_graph(n);
    s.expect_true("AC4.equal" + tag(n), r.equal, r.discrepancy);
    s.expect("AC4.edges" + tag(n), factorial(n) * static_cast<std::uint64_t>(n - 1),
             static_cast<std::uint64_t>(r.dual_edges));
  }
}

// ---------------------------------------------------------------------------
// AC5

void counting(Suite& s, int lo, int hi) {
  for (int n = std::max(lo, 1); n <= std::min(hi, 8); ++n) {
    s.expect("AC5.maximal" + tag(n), factorial(n), static_cast<std::uint64_t>(maximal_elements(n).size()));
    s.expect("AC5.minimal" + tag(n), binomial(n + 3, 3), static_cast<std::uint64_t>(minimal_elements(n).size()));
  }
}

// ---------------------------------------------------------------------------
// AC6: preimage counts, cross-checked by placing points on a grid.

std::map<std::pair<LinearComposition, LinearComposition>, std::uint64_t> placement_counts(int n) {
  const int side = n + 2;
  const int cells = side * side;
  std::map<RectComposition, std::pair<LinearComposition, LinearComposition>> labels;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int start) {
    if (pos == idx.size()) {
      std::vector<WeightedPoint2D> pts;
      for (int c : idx) pts.push_back({Rational(c / side), Rational(c % side), 1});
      const auto z = Multiset2D::make(0, side - 1, 0, side - 1, std::move(pts));
      labels.emplace(comp2d(z), std::pair{comp1d(real_part(z)), comp1d(imag_part(z))});
      return;
    }
    for (int c = start; c < cells; ++c) {
      idx[pos] = c;
      rec(pos + 1, c);
    }
  };
  rec(0, 0);
  std::map<std::pair<LinearComposition, LinearComposition>, std::uint64_t> out;
  for (const auto& [label, margins] : labels) ++out[margins];
  return out;
}

void preimages(Suite& s, int lo, int hi) {
  for (int n = std::max(lo, 1); n <= std::min(hi, 8); ++n) {
    const auto full = full_composition(n);
    s.expect("AC6.generic" + tag(n), factorial(n), count_preimages(full, full));
    if (n > 4) continue;
    const auto oracle = placement_counts(n);
    const auto all = enumerate_linear(n);
    std::size_t mismatches = 0;
    for (const auto& xc : all) {
      for (const auto& yc : all) {
        auto it = oracle.find({xc, yc});
        const std::uint64_t expected = it == oracle.end() ? 0 : it->second;
        if (count_preimages(xc, yc) != expected) ++mismatches;
      }
    }
    s.expect("AC6.margins" + tag(n), std::size_t{0}, mismatches);
  }
}

// ---------------------------------------------------------------------------
// AC7: the triangular prism cell.

void prism(Suite& s) {
  const auto a = RectComposition::validate({{0, 1, 2, 0}, {0, 2, 3, 1}, {0, 2, 3, 2}});
  s.expect("AC7.projections", std::string("[3 6 7] [0 5 8 3]"), pi_re(a).to_string() + " " + pi_im(a).to_string());
  const auto sp = spine_rect(a);
  s.expect("AC7.spine", std::string("6/7/2"),
           str(sp.grid.size()) + "/" + str(sp.edges.size()) + "/" + str(sp.faces.size()));
  const auto g = realize_biorthoscheme(a);
  s.expect_true("AC7.realization", g.consistent(1e-9), "error " + str(g.max_relative_error()));
  // Red triangle q0 q1 q2 (keys 1,1 1,2 1,3) and blue segment p0 p1 (1,1 2,1).
  auto idx = [&](const std::string& k) {
    return static_cast<std::size_t>(std::find(g.keys.begin(), g.keys.end(), k) - g.keys.begin());
  };
  const double leg1 = g.distance_squared(idx("1,1"), idx("1,2"));
  const double leg2 = g.distance_squared(idx("1,2"), idx("1,3"));
  const double hyp = g.distance_squared(idx("1,1"), idx("1,3"));
  const double seg = g.distance_squared(idx("1,1"), idx("2,1"));
  const bool ok = std::abs(leg1 - 5) < 1e-9 && std::abs(leg2 - 8) < 1e-9 && std::abs(hyp - 13) < 1e-9 &&
                  std::abs(seg - 6) < 1e-9;
  s.expect_true("AC7.triangle-times-segment", ok, "legs^2 " + str(leg1) + "," + str(leg2) + " seg^2 " + str(seg));
  s.expect("AC7.lower-set", str(std::vector<std::size_t>{6, 9, 5, 1}), str(lower_set(a).f_vector()));
}

// ---------------------------------------------------------------------------
// AC8

void permutahedron_check(Suite& s) {
  const auto g = permutahedron(3, 0, 4, {1, 2, 3});
  bool plane = true;
  for (const auto& x : g.coords) plane = plane && std::abs(x[0] + x[1] + x[2] - 6.0) < 1e-9;
  s.expect_true("AC8.coplanar", plane, "false");
  bool sides = g.edges.size() == 6;
  for (const auto& e : g.edges) sides = sides && std::abs(std::sqrt(g.distance_squared(e.u, e.v)) - std::sqrt(2.0)) < 1e-9;
  s.expect_true("AC8.hexagon-sides", sides, "false");
  s.expect_true("AC8.cayley-right", g.skeleton() == cayley_graph(3, Side::right), "false");
}

// ---------------------------------------------------------------------------
// AC9

void tetra(Suite& s, int lo, int hi) {
  auto boundary_ok = [](const TetraGraph& t, int n) {
    const auto ring = t.graph.induced(tetra_boundary(t));
    bool ok = ring.vertex_count() == static_cast<std::size_t>(4 * n) &&
              ring.edge_count() == static_cast<std::size_t>(4 * n);
    for (const auto& v : ring.vertices()) ok = ok && ring.degree(v) == 2;
    return ok;
  };
  for (int n = std::max(lo, 1); n <= std::min(hi, 8); ++n) {
    const auto t = tetra_graph(n);
    s.expect("AC9.vertices" + tag(n), binomial(n + 3, 3), static_cast<std::uint64_t>(t.graph.vertex_count()));
    s.expect_true("AC9.boundary-cycle" + tag(n), boundary_ok(t, n), "false");
  }
  const auto t = tetra_graph(4);
  s.expect("AC9.vertices[n=4]", std::uint64_t{35}, static_cast<std::uint64_t>(t.graph.vertex_count()));
  s.expect_true("AC9.boundary-cycle[n=4]", boundary_ok(t, 4), "false");
  const auto a = RectComposition::validate({{0, 0, 0, 0, 0, 0},
                                            {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, 1, 0, 0},
                                            {0, 1, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 0, 0}});
  const auto skel = spine_skeleton(spine_rect(a));
  bool sub = true;
  for (const auto& v : skel.vertices()) sub = sub && t.graph.has_vertex(v);
  for (const auto& e : skel.edges()) {
    sub = sub && std::binary_search(t.graph.edges().begin(), t.graph.edges().end(), e);
  }
  s.expect_true("AC9.spine-subgraph", sub, "false");
}

// ---------------------------------------------------------------------------
// AC10: exports are byte-identical across repeated construction.

void determinism(Suite& s, int lo, int hi) {
  const int n = std::clamp(hi, std::max(lo, 1), 3);
  auto exports = [n] {
    std::string out;
    out += io::dump(io::to_json(face_poset_rect(n)));
    out += io::to_dot(dual_graph(n));
    out += io::dump(io::to_json(overlay_lr(n)));
    out += io::dump(io::to_json(tetra_graph(n)));
    out += io::dump(io::to_json(permutahedron(3, 0, 4, {1, 2, 3})));
    return out;
  };
  s.expect_true("AC10.exports" + tag(n), exports() == exports(), "bytes differ");
}

bool selected(const SuiteOptions& o, const std::string& family) {
  return o.only.empty() || std::find(o.only.begin(), o.only.end(), family) != o.only.end();
}

}  // namespace

const std::vector<std::string>& claim_families() { return kFamilies; }

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

io::Json RunReport::to_json() const {
  io::Json cs = io::Json::array();
  for (const auto& c : checks) {
    cs.push_back({{"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return io::Json{{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", cs},
                  {"passed", all_passed()}};
}

RunReport run_verification(const SuiteOptions& o) {
  if (o.n_min < 1 || o.n_max < o.n_min) throw InputError("verify: need 1 <= n_min <= n_max");
  for (const auto& f : o.only) {
    if (std::find(kFamilies.begin(), kFamilies.end(), f) == kFamilies.end()) {
      throw InputError("verify: unknown claim family '" + f + "'");
    }
  }
  if (selected(o, "face-poset") && o.n_max > kMaxFacePosetN) {
    throw ResourceLimitError("verify: face poset requested up to n = " + std::to_string(o.n_max) +
                             "; the supported bound is n <= " + std::to_string(kMaxFacePosetN));
  }
  if (selected(o, "dual-graph") && o.n_max > kMaxDualGraphN) {
    throw ResourceLimitError("verify: dual graph requested up to n = " + std::to_string(o.n_max) +
                             "; the supported bound is n <= " + std::to_string(kMaxDualGraphN));
  }

  RunReport report;
  report.command = "verify";
  report.inputs = {{"n_min", o.n_min}, {"n_max", o.n_max}, {"only", o.only}};
  Suite s(report);
  if (selected(o, "linear-poset")) linear_poset(s, o.n_min, o.n_max);
  if (selected(o, "spine-example")) spine_example(s);
  if (selected(o, "face-poset")) face_poset(s, o.n_min, o.n_max);
  if (selected(o, "dual-graph")) dual(s, o.n_min, o.n_max);
  if (selected(o, "counting")) counting(s, o.n_min, o.n_max);
  if (selected(o, "preimages")) preimages(s, o.n_min, o.n_max);
  if (selected(o, "prism")) prism(s);
  if (selected(o, "permutahedron")) permutahedron_check(s);
  if (selected(o, "tetra")) tetra(s, o.n_min, o.n_max);
  if (selected(o, "determinism")) determinism(s, o.n_min, o.n_max);
  return report;
}

}  // namespace mrect
