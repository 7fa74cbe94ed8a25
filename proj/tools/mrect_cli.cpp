// mrect: compositions, spines, face posets and dual graphs of multisets in a
// rectangle.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mrect/complexes.hpp"
#include "mrect/errors.hpp"
#include "mrect/io.hpp"
#include "mrect/verify.hpp"

namespace {

using namespace mrect;
using io::Json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected) {
    throw InputError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated rationals");
  }
  return out;
}

// --- comp -------------------------------------------------------------------

struct CompArgs {
  std::string input;
  std::string output;
};

int run_comp(const CompArgs& args) {
  const auto multiset = io::multiset_from_json(io::parse(read_file(args.input)));
  std::ostream& summary = args.output.empty() ? std::cerr : std::cout;
  if (const auto* x = std::get_if<Multiset1D>(&multiset)) {
    const auto a = comp1d(*x);
    write_output(args.output, io::dump(io::to_json(a)));
    summary << "composition " << a.to_string() << "  n=" << a.total() << "  dimension=" << dimension_linear(a) << "\n";
  } else {
    const auto a = comp2d(std::get<Multiset2D>(multiset));
    write_output(args.output, io::dump(io::to_json(a)));
    summary << "pi_re " << pi_re(a).to_string() << "  pi_im " << pi_im(a).to_string() << "  n=" << a.total()
            << "  dimension=" << dimension_rect(a) << "\n";
  }
  return 0;
}

// --- spine ------------------------------------------------------------------

struct SpineArgs {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string lengths = "1,1";
};

int run_spine(const SpineArgs& args) {
  const auto lengths = parse_rational_list(args.lengths, 2, "--lengths");
  const auto comp = io::composition_from_json(io::parse(read_file(args.input)));
  const bool dot = args.format == "dot";
  if (const auto* a = std::get_if<LinearComposition>(&comp)) {
    const auto s = spine_linear(*a, lengths[0]);
    write_output(args.output, dot ? io::to_dot(s) : io::dump(io::to_json(s)));
  } else {
    const auto s = spine_rect(std::get<RectComposition>(comp), lengths[0], lengths[1]);
    write_output(args.output, dot ? io::to_dot(s) : io::dump(io::to_json(s)));
  }
  return 0;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  int n = 1;
  std::string kind = "linear";
  std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
  Json elements = Json::array();
  if (args.kind == "linear") {
    for (const auto& a : enumerate_linear(args.n)) elements.push_back(io::to_json(a));
  } else if (args.kind == "rect") {
    for (const auto& a : face_poset_rect(args.n).elements) elements.push_back(io::to_json(a));
  } else if (args.kind == "minimal") {
    for (const auto& a : minimal_elements(args.n)) elements.push_back(io::to_json(a));
  } else {
    for (const auto& m : maximal_elements(args.n)) {
      Json j = io::to_json(m.matrix);
      j["permutation"] = m.perm.key();
      elements.push_back(j);
    }
  }
  const Json out{{"kind", args.kind}, {"n", args.n}, {"count", elements.size()}, {"elements", elements}};
  write_output(args.output, io::dump(out));
  std::cerr << args.kind << " n=" << args.n << " count=" << elements.size() << "\n";
  return 0;
}

// --- graph ------------------------------------------------------------------

struct GraphArgs {
  int n = 3;
  std::string which = "dual";
  std::string format = "json";
  std::string output;
};

int run_graph(const GraphArgs& args) {
  const bool dot = args.format == "dot";
  std::string text;
  if (args.which == "tetra") {
    const auto t = tetra_graph(args.n);
    text = dot ? io::to_dot(t) : io::dump(io::to_json(t));
  } else if (args.which == "permutahedron") {
    // Default realization: basepoint (1, ..., n) in [0, n+1]^n.
    std::vector<Rational> base;
    for (int i = 1; i <= args.n; ++i) base.emplace_back(i);
    const auto g = permutahedron(args.n, 0, args.n + 1, base);
    text = dot ? io::to_dot(g.skeleton(), "permutahedron") : io::dump(io::to_json(g));
  } else {
    const auto g = args.which == "dual" ? dual_graph(args.n) : overlay_lr(args.n);
    text = dot ? io::to_dot(g, args.which) : io::dump(io::to_json(g));
  }
  write_output(args.output, text);
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  int n_max = 3;
  int n_min = 1;
  std::vector<std::string> only;
  std::string output;
};

int run_verify(const VerifyArgs& args) {
  const auto report = run_verification({args.n_min, args.n_max, args.only});
  for (const auto& c : report.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.claim;
    if (!c.pass) std::cout << "  expected " << c.expected << ", got " << c.actual;
    std::cout << "\n";
  }
  if (!args.output.empty()) write_output(args.output, io::dump(report.to_json()));
  const bool ok = report.all_passed();
  std::cout << (ok ? "all " : "some ") << "checks " << (ok ? "passed" : "FAILED") << " (" << report.checks.size()
            << ")\n";
  return ok ? 0 : kExitVerifyFailed;
}

// --- random -----------------------------------------------------------------

struct RandomArgs {
  int n = 4;
  std::uint64_t seed = 1;
  std::string rect = "0,1,0,1";
  std::string mode = "generic";
  std::string output;
};

// mt19937_64 output is fully specified, unlike the standard distributions, so
// files are reproducible across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<int> distinct_levels(std::mt19937_64& rng, int count, int levels) {
  std::vector<int> pool;
  for (int v = 1; v < levels; ++v) pool.push_back(v);
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    const auto j = i + draw(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

int run_random(const RandomArgs& args) {
  if (args.n < 1) throw InputError("random: n must be >= 1");
  const auto r = parse_rational_list(args.rect, 4, "--rect");
  std::mt19937_64 rng(args.seed);
  std::vector<WeightedPoint2D> pts;
  if (args.mode == "generic") {
    // Distinct interior levels out of levels-1 choices in each direction.
    const int levels = 4 * args.n + 4;
    const auto xs = distinct_levels(rng, args.n, levels);
    const auto ys = distinct_levels(rng, args.n, levels);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pts.push_back({r[0] + (r[1] - r[0]) * xs[i] / levels, r[2] + (r[3] - r[2]) * ys[i] / levels, 1});
    }
  } else {
    const int levels = args.n + 1;
    for (int i = 0; i < args.n; ++i) {
      const auto ix = static_cast<int>(draw(rng, static_cast<std::uint64_t>(levels) + 1));
      const auto iy = static_cast<int>(draw(rng, static_cast<std::uint64_t>(levels) + 1));
      pts.push_back({r[0] + (r[1] - r[0]) * ix / levels, r[2] + (r[3] - r[2]) * iy / levels, 1});
    }
  }
  const auto z = Multiset2D::make(r[0], r[1], r[2], r[3], std::move(pts));
  write_output(args.output, io::dump(io::to_json(z)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell structure of multisets in a rectangle: compositions, spines, face posets, dual graphs"};
  app.require_subcommand(1);

  CompArgs comp;
  auto* c = app.add_subcommand("comp", "Composition label of a 1D or 2D multiset");
  c->add_option("--input", comp.input, "Multiset JSON")->required();
  c->add_option("--output", comp.output, "Composition JSON (default stdout)");

  SpineArgs spine;
  auto* s = app.add_subcommand("spine", "Spine of the cell labeled by a composition");
  s->add_option("--input", spine.input, "Composition JSON")->required();
  s->add_option("--output", spine.output);
  s->add_option("--format", spine.format)->check(CLI::IsMember({"json", "dot"}));
  s->add_option("--lengths", spine.lengths, "L_I,L_J as rationals (default 1,1)");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List compositions of n");
  e->add_option("--n", en.n)->required()->check(CLI::PositiveNumber);
  e->add_option("--kind", en.kind)->check(CLI::IsMember({"linear", "rect", "minimal", "maximal"}));
  e->add_option("--output", en.output);

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Dual graph, overlaid Cayley graph, tetrahedral graph or permutahedron");
  g->add_option("--n", graph.n)->required()->check(CLI::PositiveNumber);
  g->add_option("--which", graph.which)->check(CLI::IsMember({"dual", "lr", "tetra", "permutahedron"}));
  g->add_option("--format", graph.format)->check(CLI::IsMember({"json", "dot"}));
  g->add_option("--output", graph.output);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the bundled checks for n in [from, n]");
  v->add_option("--n", verify.n_max, "Largest n (default 3)")->check(CLI::PositiveNumber);
  v->add_option("--from", verify.n_min, "Smallest n (default 1)")->check(CLI::PositiveNumber);
  v->add_option("--only", verify.only, "Restrict to claim families")->check(CLI::IsMember(claim_families()));
  v->add_option("--output", verify.output, "Write the run report JSON here");

  RandomArgs rnd;
  auto* r = app.add_subcommand("random", "Deterministic random multiset in a rectangle");
  r->add_option("--n", rnd.n)->required()->check(CLI::PositiveNumber);
  r->add_option("--seed", rnd.seed);
  r->add_option("--rect", rnd.rect, "xl,xr,yb,yt as rationals (default 0,1,0,1)");
  r->add_option("--mode", rnd.mode)->check(CLI::IsMember({"generic", "grid"}));
  r->add_option("--output", rnd.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitInput;
  }

  try {
    if (c->parsed()) return run_comp(comp);
    if (s->parsed()) return run_spine(spine);
    if (e->parsed()) return run_enumerate(en);
    if (g->parsed()) return run_graph(graph);
    if (v->parsed()) return run_verify(verify);
    if (r->parsed()) return run_random(rnd);
  } catch (const ResourceLimitError& err) {
    std::cerr << "refused: " << err.what() << "\n";
    return kExitResource;
  } catch (const InputError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInput;
  }
  return 0;
}
