#include "mrect/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mrect/errors.hpp"

namespace mrect {

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "Left";
    case Side::right: return "Right";
    case Side::row: return "Row";
    case Side::col: return "Col";
  }
  return "?";
}

const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::none: return "none";
    case EdgeColor::blue: return "blue";
    case EdgeColor::cyan: return "cyan";
    case EdgeColor::red: return "red";
    case EdgeColor::orange: return "orange";
    case EdgeColor::mixed: return "mixed";
  }
  return "?";
}

std::string label_text(const EdgeLabel& label) {
  const char* prefix = "";
  switch (label.side) {
    case Side::left: prefix = "L"; break;
    case Side::right: prefix = "R"; break;
    case Side::row: prefix = "row"; break;
    case Side::col: prefix = "col"; break;
  }
  return prefix + std::to_string(label.index);
}

LabeledMultigraph::LabeledMultigraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex key in multigraph");
  }
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  for (auto& e : edges_) {
    if (!index_.contains(e.u) || !index_.contains(e.v)) {
      throw InputError("edge endpoint '" + (index_.contains(e.u) ? e.v : e.u) + "' is not a vertex");
    }
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool LabeledMultigraph::has_vertex(std::string_view key) const {
  return index_.contains(std::string(key));
}

std::size_t LabeledMultigraph::index_of(std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) throw InputError("unknown vertex '" + std::string(key) + "'");
  return it->second;
}

std::size_t LabeledMultigraph::degree(std::string_view key) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += static_cast<std::size_t>(e.u == key) + static_cast<std::size_t>(e.v == key);
  return d;
}

std::vector<std::string> LabeledMultigraph::neighbors(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    if (e.u == key) out.push_back(e.v);
    else if (e.v == key) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LabeledMultigraph LabeledMultigraph::induced(const std::vector<std::string>& keep) const {
  std::unordered_set<std::string> kept;
  for (const auto& k : keep) {
    index_of(k);
    kept.insert(k);
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : edges_) {
    if (kept.contains(e.u) && kept.contains(e.v)) edges.push_back(e);
  }
  return LabeledMultigraph(keep, std::move(edges));
}

}  // namespace mrect
