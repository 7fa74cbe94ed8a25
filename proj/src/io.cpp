#include "mrect/io.hpp"

#include <sstream>

#include "mrect/errors.hpp"

namespace mrect::io {

namespace {

constexpr const char* kOrientation = "rows index x in I (blue), columns index y in J (red); matrix orientation";

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(std::string(what) + " must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

std::optional<int> optional_n(const Json& j) {
  if (!j.contains("n")) return std::nullopt;
  return as_int(j.at("n"), "n");
}

Side side_from_name(const std::string& s) {
  for (Side side : {Side::left, Side::right, Side::row, Side::col}) {
    if (s == side_name(side)) return side;
  }
  throw InputError("unknown edge side '" + s + "'");
}

EdgeColor color_from_name(const std::string& s) {
  for (EdgeColor c : {EdgeColor::none, EdgeColor::blue, EdgeColor::cyan, EdgeColor::red, EdgeColor::orange,
                      EdgeColor::mixed}) {
    if (s == color_name(c)) return c;
  }
  throw InputError("unknown edge color '" + s + "'");
}

Json label_json(const EdgeLabel& l) {
  Json j{{"side", side_name(l.side)}, {"index", l.index}};
  if (l.color != EdgeColor::none) j["color"] = color_name(l.color);
  return j;
}

std::string dq(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_edge_attrs(const EdgeLabel& l) {
  std::string attrs = "label=" + dq(label_text(l));
  if (l.color == EdgeColor::mixed) {
    attrs += ", style=dashed";
  } else if (l.color != EdgeColor::none) {
    attrs += std::string(", color=") + color_name(l.color);
  }
  return attrs;
}

Json block_json(const Block2x2& b) { return Json::array({Json::array({b.a(), b.b()}), Json::array({b.c(), b.d()})}); }

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const LinearComposition& a) {
  return Json{{"n", a.total()}, {"entries", std::vector<int>(a.entries().begin(), a.entries().end())}};
}

Json to_json(const RectComposition& a) { return Json{{"n", a.total()}, {"matrix", a.to_rows()}}; }

Json to_json(const Multiset1D& x) {
  Json pts = Json::array();
  for (const auto& p : x.support()) pts.push_back({{"x", format_rational(p.x)}, {"m", p.multiplicity}});
  return Json{{"interval", {format_rational(x.lo()), format_rational(x.hi())}}, {"points", pts}};
}

Json to_json(const Multiset2D& z) {
  Json pts = Json::array();
  for (const auto& p : z.points()) {
    pts.push_back({{"x", format_rational(p.x)}, {"y", format_rational(p.y)}, {"m", p.multiplicity}});
  }
  return Json{{"rect",
               {{"xl", format_rational(z.xl())},
                {"xr", format_rational(z.xr())},
                {"yb", format_rational(z.yb())},
                {"yt", format_rational(z.yt())}}},
              {"points", pts}};
}

LinearComposition linear_from_json(const Json& j) {
  return LinearComposition::validate(int_array(field(j, "entries"), "entries"), optional_n(j));
}

RectComposition rect_from_json(const Json& j) {
  const auto& m = field(j, "matrix");
  if (!m.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : m) rows.push_back(int_array(r, "matrix row"));
  return RectComposition::validate(rows, optional_n(j));
}

Multiset1D multiset1d_from_json(const Json& j) {
  const auto& iv = field(j, "interval");
  if (!iv.is_array() || iv.size() != 2) throw InputError("interval must be [lo, hi]");
  const auto& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("points must be an array");
  std::vector<WeightedPoint> points;
  for (const auto& p : pts) points.push_back({as_rational(field(p, "x"), "x"), as_int(field(p, "m"), "m")});
  return Multiset1D::make(as_rational(iv[0], "interval"), as_rational(iv[1], "interval"), std::move(points));
}

Multiset2D multiset2d_from_json(const Json& j) {
  const auto& r = field(j, "rect");
  const auto& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("points must be an array");
  std::vector<WeightedPoint2D> points;
  for (const auto& p : pts) {
    points.push_back({as_rational(field(p, "x"), "x"), as_rational(field(p, "y"), "y"), as_int(field(p, "m"), "m")});
  }
  return Multiset2D::make(as_rational(field(r, "xl"), "xl"), as_rational(field(r, "xr"), "xr"),
                          as_rational(field(r, "yb"), "yb"), as_rational(field(r, "yt"), "yt"), std::move(points));
}

AnyComposition composition_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return rect_from_json(j);
  if (j.is_object() && j.contains("entries")) return linear_from_json(j);
  throw InputError("composition JSON needs \"entries\" or \"matrix\"");
}

AnyMultiset multiset_from_json(const Json& j) {
  if (j.is_object() && j.contains("rect")) return multiset2d_from_json(j);
  if (j.is_object() && j.contains("interval")) return multiset1d_from_json(j);
  throw InputError("multiset JSON needs \"interval\" or \"rect\"");
}

Json to_json(const LabeledMultigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, label_json(e.label)}));
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

LabeledMultigraph graph_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  const auto& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("graph needs vertex and edge arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw InputError("vertex keys must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError("edge must be [u, v, label]");
    }
    EdgeLabel l{side_from_name(field(e[2], "side").get<std::string>()), as_int(field(e[2], "index"), "index")};
    if (e[2].contains("color")) l.color = color_from_name(e[2].at("color").get<std::string>());
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), l});
  }
  return LabeledMultigraph(std::move(vertices), std::move(edges));
}

std::string to_dot(const LabeledMultigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << dq(name) << " {\n";
  for (const auto& v : g.vertices()) os << "  " << dq(v) << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << dq(e.u) << " -- " << dq(e.v) << " [" << dot_edge_attrs(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const TetraGraph& g) {
  Json j = to_json(g.graph);
  Json coords = Json::object();
  for (const auto& [key, xyz] : g.coordinates) coords[key] = xyz;
  j["coordinates"] = coords;
  j["embedding"] = kTetraEmbedding;
  return j;
}

std::string to_dot(const TetraGraph& g) {
  std::ostringstream os;
  os << "// embedding: " << kTetraEmbedding << "\n";
  os << "graph \"tetra\" {\n";
  for (const auto& v : g.graph.vertices()) {
    const auto& p = g.coordinates.at(v);
    os << "  " << dq(v) << " [pos=\"" << p[0] << ',' << p[1] << ',' << p[2] << "\"];\n";
  }
  for (const auto& e : g.graph.edges()) {
    os << "  " << dq(e.u) << " -- " << dq(e.v) << " [" << dot_edge_attrs(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const LinearSpine& s) {
  Json vertices = Json::array();
  for (const auto& v : s.vertices) vertices.push_back(std::vector<int>(v.entries().begin(), v.entries().end()));
  Json edges = Json::array();
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    edges.push_back({{"from", i}, {"to", i + 1}, {"weight", s.weights[i]},
                     {"squared_length", format_rational(s.squared_length(i))}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}, {"length", format_rational(s.scale)}};
}

std::string to_dot(const LinearSpine& s) {
  std::ostringstream os;
  os << "graph \"spine\" {\n";
  for (const auto& v : s.vertices) os << "  " << dq(v.to_string()) << ";\n";
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    os << "  " << dq(s.vertices[i].to_string()) << " -- " << dq(s.vertices[i + 1].to_string())
       << " [label=\"" << format_rational(s.squared_length(i)) << "\", color=blue];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const SpineComplex& s) {
  Json grid = Json::array();
  for (int i = 1; i <= s.row_cuts; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= s.col_cuts; ++j) row.push_back(block_json(s.at({i, j})));
    grid.push_back(row);
  }
  Json edges = Json::array();
  for (const auto& e : s.edges) {
    edges.push_back({{"from", {e.from.row_cut, e.from.col_cut}},
                     {"to", {e.to.row_cut, e.to.col_cut}},
                     {"direction", e.direction == MergeKind::row ? "row" : "col"},
                     {"color", color_name(e.color)},
                     {"weight", e.weight},
                     {"squared_length", format_rational(s.squared_length(e))}});
  }
  Json faces = Json::array();
  for (const auto& f : s.faces) faces.push_back({f.row_cut, f.col_cut});
  return Json{{"grid", grid},
              {"edges", edges},
              {"faces", faces},
              {"lengths", {{"L_I", format_rational(s.length_i)}, {"L_J", format_rational(s.length_j)}}},
              {"orientation", kOrientation}};
}

std::string to_dot(const SpineComplex& s) {
  std::ostringstream os;
  os << "// " << kOrientation << "\n";
  os << "graph \"spine\" {\n";
  auto name = [](GridPos p) { return dq(std::to_string(p.row_cut) + "," + std::to_string(p.col_cut)); };
  for (int i = 1; i <= s.row_cuts; ++i) {
    for (int j = 1; j <= s.col_cuts; ++j) {
      os << "  " << name({i, j}) << " [label=" << dq(s.at({i, j}).key()) << "];\n";
    }
  }
  for (const auto& e : s.edges) {
    os << "  " << name(e.from) << " -- " << name(e.to) << " [label=\"" << format_rational(s.squared_length(e)) << '"';
    if (e.color == EdgeColor::mixed) os << ", style=dashed";
    else os << ", color=" << color_name(e.color);
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const GeometricRealization& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, format_rational(e.squared_length)}));
  return Json{{"keys", g.keys}, {"vertices", g.coords}, {"edges", edges}};
}

}  // namespace mrect::io
