#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "mrect/complexes.hpp"
#include "mrect/graph.hpp"
#include "mrect/linear.hpp"
#include "mrect/rectangular.hpp"

namespace mrect::io {

using Json = nlohmann::json;

// Two-space indentation, sorted keys, trailing newline: identical bytes for
// identical values.
std::string dump(const Json& j);
// Parses text, mapping syntax errors to InputError.
Json parse(std::string_view text);

// {"n": int, "entries": [int]}
Json to_json(const LinearComposition& a);
// {"n": int, "matrix": [[int]]}
Json to_json(const RectComposition& a);
// {"interval": ["p/q","p/q"], "points": [{"x": "p/q", "m": int}]}
Json to_json(const Multiset1D& x);
// {"rect": {"xl","xr","yb","yt"}, "points": [{"x","y","m"}]}
Json to_json(const Multiset2D& z);

LinearComposition linear_from_json(const Json& j);
RectComposition rect_from_json(const Json& j);
Multiset1D multiset1d_from_json(const Json& j);
Multiset2D multiset2d_from_json(const Json& j);

using AnyComposition = std::variant<LinearComposition, RectComposition>;
using AnyMultiset = std::variant<Multiset1D, Multiset2D>;
// Dispatches on the presence of "entries" / "matrix".
AnyComposition composition_from_json(const Json& j);
// Dispatches on the presence of "interval" / "rect".
AnyMultiset multiset_from_json(const Json& j);

// {vertices: [string], edges: [[u, v, {side, index[, color]}]]}
Json to_json(const LabeledMultigraph& g);
LabeledMultigraph graph_from_json(const Json& j);
std::string to_dot(const LabeledMultigraph& g, std::string_view name = "G");

Json to_json(const TetraGraph& g);
std::string to_dot(const TetraGraph& g);

Json to_json(const LinearSpine& s);
std::string to_dot(const LinearSpine& s);
Json to_json(const SpineComplex& s);
std::string to_dot(const SpineComplex& s);

// {keys, vertices: [[float]], edges: [[u, v, "p/q"]]}
Json to_json(const GeometricRealization& g);

template <typename T>
Json to_json(const FacePoset<T>& p) {
  Json elements = Json::array();
  for (const auto& e : p.elements) elements.push_back(to_json(e));
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers) covers.push_back({lo, hi});
  return Json{{"elements", elements}, {"covers", covers}, {"dims", p.dims}, {"f_vector", p.f_vector()},
              {"euler_characteristic", p.euler_characteristic()}};
}

}  // namespace mrect::io
