#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

using EdgeIndex = std::uint32_t;
using VertexIndex = std::uint32_t;

/// One end of an edge-ribbon: (edge k, end 0 or 1).
struct EdgeEnd {
  EdgeIndex edge = 0;
  std::uint8_t end = 0;

  auto operator<=>(const EdgeEnd&) const = default;
};

/// A subset A of E(G) as a bitmask over [0, width). Width is at most 64.
class EdgeSubset {
 public:
  static constexpr std::size_t max_width = 64;

  EdgeSubset() = default;
  EdgeSubset(std::size_t width, std::uint64_t bits);

  static EdgeSubset none(std::size_t width) { return EdgeSubset(width, 0); }
  static EdgeSubset all(std::size_t width);
  static EdgeSubset of(std::size_t width, std::span<const EdgeIndex> edges);
  static EdgeSubset of(std::size_t width, std::initializer_list<EdgeIndex> edges);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(EdgeIndex k) const noexcept { return k < width_ && ((bits_ >> k) & 1U) != 0; }
  EdgeSubset with(EdgeIndex k) const;
  EdgeSubset without(EdgeIndex k) const;
  EdgeSubset complement() const;

  std::vector<EdgeIndex> indices() const;
  /// "{0,2,5}"
  std::string to_string() const;

  bool operator==(const EdgeSubset&) const = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

/// A position between two consecutive ribbon ends in a vertex rotation.
/// Gap i of a degree-d vertex lies between rotation[i] and rotation[(i+1) % d];
/// a degree-0 vertex has the single gap 0.
struct Corner {
  VertexIndex vertex = 0;
  std::size_t gap = 0;

  auto operator<=>(const Corner&) const = default;
};

/// Signed rotation system. Each vertex carries the counterclockwise cyclic
/// order of the edge-ends attached to it; each edge carries a twist bit.
/// Immutable once constructed; all editing operations return new graphs.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  /// Throws PreconditionError unless every end (k,0), (k,1) for k < twisted.size()
  /// occurs exactly once across `rotations`.
  RibbonGraph(std::vector<std::vector<EdgeEnd>> rotations, std::vector<bool> twisted);

  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t edge_count() const noexcept { return twisted_.size(); }
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

  const std::vector<std::vector<EdgeEnd>>& rotations() const noexcept { return rotations_; }
  const std::vector<EdgeEnd>& rotation(VertexIndex v) const { return rotations_.at(v); }
  std::size_t degree(VertexIndex v) const { return rotations_.at(v).size(); }
  bool twisted(EdgeIndex k) const { return twisted_.at(k); }
  const std::vector<bool>& twists() const noexcept { return twisted_; }

  VertexIndex vertex_of(EdgeEnd h) const { return end_vertex_.at(2 * h.edge + h.end); }
  std::size_t position_of(EdgeEnd h) const { return end_position_.at(2 * h.edge + h.end); }
  VertexIndex endpoint(EdgeIndex k, int end) const { return vertex_of(EdgeEnd{k, static_cast<std::uint8_t>(end)}); }
  bool is_loop(EdgeIndex k) const { return endpoint(k, 0) == endpoint(k, 1); }
  /// True iff removing k increases the number of components.
  bool is_bridge(EdgeIndex k) const;

  /// Equality of labeled structure: same edge labels and twists, and the same
  /// multiset of vertex rotations up to cyclic shift. Vertex numbering is ignored.
  bool same_structure(const RibbonGraph& other) const;

  bool operator==(const RibbonGraph&) const = default;

 private:
  std::vector<std::vector<EdgeEnd>> rotations_;
  std::vector<bool> twisted_;
  std::vector<VertexIndex> end_vertex_;
  std::vector<std::size_t> end_position_;
};

/// Parse the line-oriented `ribbongraph 1` text format. Throws ParseError.
RibbonGraph decode(std::string_view text);
/// Vertices in index order, each rotation starting at its smallest end.
std::string encode(const RibbonGraph& g);

RibbonGraph read_ribbon_file(const std::string& path);
void write_ribbon_file(const std::string& path, const RibbonGraph& g);

/// Remove edge k; edges above k shift down by one.
RibbonGraph delete_edge(const RibbonGraph& g, EdgeIndex k);
/// Add a new edge (index e(g)) parallel to k, bounding a digon face with it.
RibbonGraph add_parallel_edge(const RibbonGraph& g, EdgeIndex k);
/// Replace k by a path through a new degree-2 vertex (index v(g)); the second
/// half becomes new edge e(g).
RibbonGraph subdivide_edge(const RibbonGraph& g, EdgeIndex k);
/// Insert a new edge (index e(g)) with end 0 in corner `a` and end 1 in corner `b`.
RibbonGraph insert_edge(const RibbonGraph& g, Corner a, Corner b, bool twisted = false);
/// One-point join: splice g2's rotation at v2 (opened at slot2) into g1's
/// rotation at v1 (at slot1). The merged vertex keeps index v1; g2's other
/// vertices follow g1's, g2's edges follow g1's.
RibbonGraph join(const RibbonGraph& g1, VertexIndex v1, std::size_t slot1,
                 const RibbonGraph& g2, VertexIndex v2, std::size_t slot2);
RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2);
/// Spanning subribbon graph (V, A): all vertices, only the ribbons in A,
/// relabeled densely in increasing order.
RibbonGraph spanning_subgraph(const RibbonGraph& g, const EdgeSubset& a);

/// Number of connected components of the spanning subgraph (V(g), a),
/// isolated vertices included.
std::size_t components_of(const RibbonGraph& g, const EdgeSubset& a);

}  // namespace ribbon
