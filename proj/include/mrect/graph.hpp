#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mrect {

// Left/Right label Cayley-graph edges (sigma_i . pi vs pi . sigma_i);
// Row/Col label merges of matrix rows or columns.
enum class Side { left, right, row, col };

// Spine and tetrahedral-graph edge colors. `mixed` marks a step that changes
// both columns (or both rows) of a 2x2 label; `none` is used for uncolored
// graphs such as Cayley graphs.
enum class EdgeColor { none, blue, cyan, red, orange, mixed };

struct EdgeLabel {
  Side side;
  int index;
  EdgeColor color = EdgeColor::none;

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct GraphEdge {
  std::string u;
  std::string v;
  EdgeLabel label;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

const char* side_name(Side s);
const char* color_name(EdgeColor c);
// Short DOT label: "L1", "R2", "row1", "col3".
std::string label_text(const EdgeLabel& label);

/// Undirected multigraph with string vertex keys and labeled parallel edges.
///
/// The constructor canonicalizes: vertices are sorted, each edge stores its
/// endpoints in sorted key order, and the edge list is sorted. Two graphs with
/// the same vertex set and the same edge multiset therefore compare equal and
/// serialize to the same bytes.
class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;
  LabeledMultigraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(std::string_view key) const;
  std::size_t index_of(std::string_view key) const;
  // Counts parallel edges; a loop would count twice.
  std::size_t degree(std::string_view key) const;
  std::vector<std::string> neighbors(std::string_view key) const;

  // Subgraph induced on `keep` (keys not in the graph are an error).
  LabeledMultigraph induced(const std::vector<std::string>& keep) const;

  friend bool operator==(const LabeledMultigraph& a, const LabeledMultigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace mrect
