// Acceptance gate: one [PASS]/[FAIL] line per criterion AC1..AC10.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mrect/complexes.hpp"
#include "mrect/io.hpp"
#include "oracles.hpp"

using namespace mrect;

namespace {

constexpr double kDistanceTol = 1e-9;
constexpr double kInstantSeconds = 1.0;
constexpr double kAc1Seconds = 5.0;
constexpr double kAc3Seconds = 60.0;
constexpr double kAc4Seconds = 30.0;
constexpr double kAc6Seconds = 30.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << secs << "s";
  out.require(secs < limit, "took " + time.str());
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << time.str() << ")";
  if (!out.ok) std::cout << ": " << out.detail;
  std::cout << std::endl;
}

std::vector<int> vec(const LinearComposition& a) { return {a.entries().begin(), a.entries().end()}; }

RectComposition prism_matrix() { return RectComposition::validate({{0, 1, 2, 0}, {0, 2, 3, 1}, {0, 2, 3, 2}}); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion("AC1", "linear poset law", kAc1Seconds, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      const auto all = enumerate_linear(n);
      o.require(all.size() == (std::size_t{1} << (n + 1)) - 1, "count at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
      const auto all = enumerate_linear(n);
      for (const auto& b : all) {
        const auto below = oracle::merge_closure(vec(b));
        for (const auto& a : all) {
          const bool leq = leq_linear(a, b);
          o.require(leq == to_cutset(a).subset_of(to_cutset(b)), "cut-set disagreement " + a.to_string() + " " + b.to_string());
          o.require(leq == (below.count(vec(a)) == 1), "merge disagreement " + a.to_string() + " " + b.to_string());
        }
      }
    }
  });

  criterion("AC2", "spine worked example", kInstantSeconds, [](Outcome& o) {
    const auto x = Multiset1D::make(0, 4, {{0, 3}, {1, 4}, {2, 1}, {3, 2}, {4, 1}});
    const auto a = comp1d(x);
    o.require(a.to_string() == "[3 4 1 2 1]", "composition " + a.to_string());
    const auto s = spine_linear(a);
    std::vector<std::string> v;
    for (const auto& c : s.vertices) v.push_back(c.to_string());
    o.require(v == std::vector<std::string>{"[3 8]", "[7 4]", "[8 3]", "[10 1]"}, "spine vertices");
    o.require(s.weights.size() == 3 && s.squared_length(0) == 4 && s.squared_length(1) == 1 && s.squared_length(2) == 2,
              "squared lengths");
  });

  criterion("AC3", "face poset f-vectors and census", kAc3Seconds, [](Outcome& o) {
    const auto p1 = face_poset_rect(1);
    o.require(p1.f_vector() == std::vector<std::size_t>{4, 4, 1}, "f-vector at n=1");
    o.require(p1.euler_characteristic() == 1, "euler at n=1");
    for (int n = 2; n <= 3; ++n) {
      const auto p = face_poset_rect(n);
      o.require(p.euler_characteristic() == 1, "euler at n=" + std::to_string(n));
      const auto f = p.f_vector();
      const auto census = oracle::rect_census(n);
      o.require(f.size() == census.size(), "dimension range at n=" + std::to_string(n));
      for (const auto& [dim, count] : census) {
        o.require(static_cast<std::size_t>(dim) < f.size() && static_cast<long long>(f[static_cast<std::size_t>(dim)]) == count,
                  "census dim " + std::to_string(dim) + " at n=" + std::to_string(n));
      }
    }
  });

  criterion("AC4", "dual graph equals overlaid Cayley graphs", kAc4Seconds, [](Outcome& o) {
    const long long expected[] = {2, 12, 72};
    for (int n = 2; n <= 4; ++n) {
      const auto r = verify_dual_graph(n);
      o.require(r.equal, "n=" + std::to_string(n) + ": " + r.discrepancy);
      o.require(static_cast<long long>(r.dual_edges) == expected[n - 2], "edge total at n=" + std::to_string(n));
      o.require(static_cast<long long>(r.dual_edges) == oracle::factorial(n) * (n - 1), "n!(n-1) at n=" + std::to_string(n));
    }
  });

  criterion("AC5", "maximal and minimal counts", kInstantSeconds, [](Outcome& o) {
    const long long minimal[] = {4, 10, 20, 35, 56};
    for (int n = 1; n <= 5; ++n) {
      o.require(static_cast<long long>(maximal_elements(n).size()) == oracle::factorial(n), "maximal at n=" + std::to_string(n));
      const auto mn = static_cast<long long>(minimal_elements(n).size());
      o.require(mn == minimal[n - 1] && mn == oracle::binomial(n + 3, 3), "minimal at n=" + std::to_string(n));
    }
  });

  criterion("AC6", "preimage counts", kAc6Seconds, [](Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<int> ones(static_cast<std::size_t>(n + 2), 1);
      ones.front() = ones.back() = 0;
      const auto c = LinearComposition::validate(ones);
      o.require(static_cast<long long>(count_preimages(c, c)) == oracle::factorial(n), "generic at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
      const auto all = enumerate_linear(n);
      for (const auto& r : all) {
        for (const auto& c : all) {
          o.require(static_cast<long long>(count_preimages(r, c)) == oracle::count_tables(vec(r), vec(c)),
                    "margins " + r.to_string() + " x " + c.to_string());
        }
      }
    }
  });

  criterion("AC7", "triangular prism cell", kInstantSeconds, [](Outcome& o) {
    const auto a = prism_matrix();
    o.require(pi_re(a).to_string() == "[3 6 7]" && pi_im(a).to_string() == "[0 5 8 3]", "projections");
    const auto s = spine_rect(a);
    o.require(s.grid.size() == 6 && s.edges.size() == 7 && s.faces.size() == 2, "spine 6/7/2");
    const auto g = realize_biorthoscheme(a);
    o.require(g.consistent(kDistanceTol), "declared edge lengths");
    auto at = [&](const std::string& k) {
      return static_cast<std::size_t>(std::find(g.keys.begin(), g.keys.end(), k) - g.keys.begin());
    };
    auto near = [](double x, double y) { return std::abs(x - y) <= kDistanceTol * std::max(1.0, std::abs(y)); };
    o.require(near(std::sqrt(g.distance_squared(at("1,1"), at("1,2"))), std::sqrt(5.0)), "leg sqrt5");
    o.require(near(std::sqrt(g.distance_squared(at("1,2"), at("1,3"))), std::sqrt(8.0)), "leg sqrt8");
    o.require(near(g.distance_squared(at("1,1"), at("1,3")), 13.0), "right angle");
    o.require(near(std::sqrt(g.distance_squared(at("1,1"), at("2,1"))), std::sqrt(6.0)), "segment sqrt6");
    o.require(near(g.distance_squared(at("2,1"), at("2,3")), 13.0), "translated triangle");
    const auto low = lower_set(a);
    o.require(low.elements.size() == 21, "lower set size " + std::to_string(low.elements.size()));
    o.require(low.f_vector() == std::vector<std::size_t>{6, 9, 5, 1}, "prism f-vector");
  });

  criterion("AC8", "permutahedron", kInstantSeconds, [](Outcome& o) {
    const auto g = permutahedron(3, 0, 4, {1, 2, 3});
    o.require(g.keys.size() == 6, "six vertices");
    for (const auto& c : g.coords) o.require(std::abs(c[0] + c[1] + c[2] - 6.0) <= kDistanceTol, "coplanar");
    o.require(g.edges.size() == 6, "six edges");
    for (const auto& e : g.edges) {
      o.require(std::abs(std::sqrt(g.distance_squared(e.u, e.v)) - std::sqrt(2.0)) <= kDistanceTol, "side sqrt2");
    }
    o.require(g.skeleton() == cayley_graph(3, Side::right), "right Cayley graph");
  });

  criterion("AC9", "tetrahedral graph", kInstantSeconds, [](Outcome& o) {
    const auto t = tetra_graph(4);
    o.require(t.graph.vertex_count() == 35, "35 vertices");
    const auto boundary = tetra_boundary(t);
    const auto cycle = t.graph.induced(boundary);
    o.require(boundary.size() == 16 && cycle.edge_count() == 16, "16-cycle");
    for (const auto& v : cycle.vertices()) o.require(cycle.degree(v) == 2, "cycle degree");
    const auto z = Multiset2D::make(0, 5, 0, 5, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}, {4, 4, 1}});
    const auto skel = spine_skeleton(spine_rect(comp2d(z)));
    std::multiset<GraphEdge> have(t.graph.edges().begin(), t.graph.edges().end());
    for (const auto& v : skel.vertices()) o.require(t.graph.has_vertex(v), "spine vertex " + v);
    for (const auto& e : skel.edges()) o.require(have.count(e) == 1, "spine edge " + e.u + " - " + e.v);
  });

  criterion("AC10", "byte-identical repeated runs", 120.0, [](Outcome& o) {
    namespace fs = std::filesystem;
    const std::string cli = MRECT_CLI_PATH;
    const fs::path root = fs::current_path() / "ac10";
    fs::remove_all(root);
    const fs::path input = root / "z.json";
    fs::create_directories(root);
    {
      std::ofstream(input) << R"({"rect":{"xl":"0","xr":"5","yb":"0","yt":"5"},"points":[)"
                              R"({"x":"1","y":"2","m":1},{"x":"2","y":"3","m":1},)"
                              R"({"x":"3","y":"1","m":1},{"x":"4","y":"4","m":1}]})";
    }
    const std::vector<std::pair<std::string, std::string>> jobs = {
        {"verify.json", "verify --n 3 --output"},
        {"comp.json", "comp --input " + input.string() + " --output"},
        {"random.json", "random --n 5 --seed 42 --output"},
        {"grid.json", "random --n 5 --seed 42 --mode grid --output"},
        {"enum_rect.json", "enumerate --n 2 --kind rect --output"},
        {"enum_max.json", "enumerate --n 3 --kind maximal --output"},
        {"dual.json", "graph --n 3 --which dual --output"},
        {"dual.dot", "graph --n 3 --which dual --format dot --output"},
        {"tetra.dot", "graph --n 4 --which tetra --format dot --output"},
        {"perm.json", "graph --n 3 --which permutahedron --output"},
    };
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / ("run" + std::to_string(run));
      fs::create_directories(dir);
      for (const auto& [file, args] : jobs) {
        const std::string cmd = "\"" + cli + "\" " + args + " \"" + (dir / file).string() + "\" > /dev/null 2>&1";
        o.require(std::system(cmd.c_str()) == 0, "command failed: " + args);
      }
      const std::string comp = (dir / "comp.json").string();
      for (const char* fmt : {"json", "dot"}) {
        const std::string cmd = "\"" + cli + "\" spine --input \"" + comp + "\" --format " + fmt + " --output \"" +
                                (dir / (std::string("spine.") + fmt)).string() + "\"";
        o.require(std::system(cmd.c_str()) == 0, std::string("spine export ") + fmt);
      }
    }
    for (const auto& entry : fs::directory_iterator(root / "run0")) {
      const auto name = entry.path().filename();
      const auto a = slurp(entry.path());
      o.require(!a.empty(), "empty export " + name.string());
      o.require(a == slurp(root / "run1" / name), "bytes differ: " + name.string());
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
