#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

using Flag = std::uint32_t;

/// Flag of edge k at end `end` on side `side`. Side 0 precedes the end in its
/// vertex rotation, side 1 follows it.
constexpr Flag flag_of(EdgeIndex k, unsigned end, unsigned side) { return 4 * k + 2 * end + side; }
constexpr EdgeIndex edge_of(Flag x) { return x / 4; }

/// Flag (gem) model of a ribbon graph: 4 flags per edge and three
/// fixed-point-free involutions.
///   s0 pairs flags across an edge, s1 pairs flags meeting at a vertex corner,
///   s2 pairs the two sides of one half-edge.
/// Vertices are <s1,s2>-orbits, edges <s0,s2>-orbits, faces <s0,s1>-orbits.
/// Degree-0 vertices carry no flags and are counted separately.
class GemMap {
 public:
  GemMap() = default;
  GemMap(std::vector<Flag> s0, std::vector<Flag> s1, std::vector<Flag> s2, std::size_t isolated_vertices);

  std::size_t flag_count() const noexcept { return s0_.size(); }
  std::size_t edge_count() const noexcept { return s0_.size() / 4; }
  std::size_t isolated_vertices() const noexcept { return isolated_; }

  Flag s0(Flag x) const { return s0_[x]; }
  Flag s1(Flag x) const { return s1_[x]; }
  Flag s2(Flag x) const { return s2_[x]; }

  std::size_t vertex_count() const;
  std::size_t face_count() const;
  std::size_t component_count() const;
  /// True iff the flag graph (adjacency under s0, s1, s2) is bipartite.
  bool orientable() const;
  /// Number of flags in each face, in first-visited order.
  std::vector<std::size_t> face_sizes() const;
  std::vector<std::size_t> vertex_sizes() const;

  /// Swap s0 and s2 on the flags of the edges in `a`.
  GemMap partial_dual(const EdgeSubset& a) const;

  /// Throws VerificationError if an involution has a fixed point, s0 and s2 do
  /// not commute, or some <s0,s2>-orbit does not have size 4.
  void check_invariants() const;

 private:
  std::vector<Flag> s0_;
  std::vector<Flag> s1_;
  std::vector<Flag> s2_;
  std::size_t isolated_ = 0;
};

GemMap to_gem(const RibbonGraph& g);
/// Vertices become <s1,s2>-orbits numbered in order of their smallest flag,
/// isolated vertices last. Orientable maps get a consistent orientation
/// (no twisted edges).
RibbonGraph to_ribbon_graph(const GemMap& m);

/// Same embedded graph with the same edge labels: some bijection of flags
/// keeps every flag on its edge and commutes with s0, s1 and s2. Vertex
/// numbering, end labels and local orientation choices are ignored.
bool equivalent_embedding(const RibbonGraph& g1, const RibbonGraph& g2);

struct SurfaceStats {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t c = 0;
  std::optional<long> genus;  // only for orientable surfaces
  long euler_genus = 0;
  bool orientable = true;

  bool operator==(const SurfaceStats&) const = default;
};

SurfaceStats surface_stats(const GemMap& m);
SurfaceStats surface_stats(const RibbonGraph& g);

struct SpanningStats {
  std::size_t components = 0;  // c(A)
  std::size_t faces = 0;       // f(A)
  std::optional<long> genus;   // γ(A), orientable case only
  long euler_genus = 0;
};

/// Statistics of the spanning subribbon graph (V(G), A) for many subsets of one
/// graph. Holds scratch buffers, so each thread needs its own copy.
class SpanningEvaluator {
 public:
  explicit SpanningEvaluator(const RibbonGraph& g);

  std::size_t components(std::uint64_t bits);
  std::size_t faces(std::uint64_t bits);
  SpanningStats stats(std::uint64_t bits);

  const RibbonGraph& graph() const noexcept { return graph_; }
  bool orientable() const noexcept { return orientable_; }

 private:
  RibbonGraph graph_;
  GemMap gem_;
  bool orientable_;
  std::vector<VertexIndex> flag_vertex_;
  std::vector<std::size_t> parent_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

SpanningStats spanning_stats(const RibbonGraph& g, const EdgeSubset& a);

/// G^A constructed by the s0/s2 swap on the flags of A.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a);

/// γ(G^A) = γ(A) + γ(A^c) + c(G) + v(G) − c(A) − c(A^c).
/// Throws PreconditionError on a non-orientable graph.
long genus_of_partial_dual(const RibbonGraph& g, const EdgeSubset& a);

}  // namespace ribbon
