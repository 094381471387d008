#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// How the genus of each partial dual is obtained during enumeration.
enum class GenusMethod {
  formula,    ///< γ(A)+γ(A^c)+c(G)+v(G)−c(A)−c(A^c) from spanning subgraphs
  construct,  ///< face-trace the constructed partial dual
};

struct EnumerateOptions {
  /// Worker threads for subset ranges; 0 picks the hardware concurrency.
  unsigned threads = 1;
  std::size_t edge_cap = 30;
  bool override_cap = false;
};

/// ∂Γ_G(z) = Σ_{A ⊆ E(G)} z^{γ(G^A)} by exhaustive enumeration.
/// Requires an orientable graph, connected for GenusMethod::formula.
IntPolynomial pdg_polynomial(const RibbonGraph& g, GenusMethod method, const EnumerateOptions& opts = {});

/// ∂Ε_G(z) = Σ_{A ⊆ E(G)} z^{ε(G^A)}; any ribbon graph.
IntPolynomial euler_polynomial(const RibbonGraph& g, const EnumerateOptions& opts = {});

enum class FamilyKind {
  cycle_with_edge,  ///< A ∪ e contains a cycle through e
  cut_in_union,     ///< e is a cut ribbon of A ∪ e
};

struct SubsetFamily {
  FamilyKind kind = FamilyKind::cycle_with_edge;
  EdgeIndex anchor_edge = 0;
  /// Subsets of E(G−e), indexed in G−e's edge numbering.
  std::vector<EdgeSubset> members;
};

/// Partition of the subsets of E(G−e) by whether A joins the ends of e.
/// Loops close a cycle with every A.
SubsetFamily subset_family(const RibbonGraph& g, EdgeIndex e, FamilyKind kind);

/// Σ_{A ∈ family} z^{γ((G−e)^A)} evaluated with the genus formula.
/// `g_minus_e` must be connected and plane.
IntPolynomial correction_sum(const RibbonGraph& g_minus_e, const SubsetFamily& family);

/// All spanning trees (as edge subsets) of a connected graph.
std::vector<EdgeSubset> spanning_trees(const RibbonGraph& g);

/// ξ(G) = min over spanning trees T of c(T^c).
std::size_t min_cotree_components(const RibbonGraph& g);

struct TreeStats {
  std::size_t xi = 0;
  std::size_t mu = 0;        ///< trees attaining ξ
  std::size_t mu_c = 0;      ///< A with c(A) = ξ and A^c a spanning tree
  std::size_t eta = 0;       ///< trees whose complement is also a spanning tree
  long gamma_max = 0;        ///< v(G) − ξ(G)
  BigInt top_coeff = 0;      ///< coefficient of z^{γ_M} in ∂Γ_G
  /// 1, 2 or 3 according to the top-coefficient classification; empty when
  /// the graph is too large for the powerset scan (more than 20 edges).
  std::optional<int> prop_case;
};

/// Requires a connected plane ribbon graph.
TreeStats tree_stats(const RibbonGraph& g, const EnumerateOptions& opts = {});

enum class MaxGenusMethod { brute, xi };

/// Maximum genus over all partial duals. `xi` needs a connected plane graph.
long max_pd_genus(const RibbonGraph& g, MaxGenusMethod method, const EnumerateOptions& opts = {});

/// "i,count" header then one row per exponent 0..degree.
std::string distribution_csv(const IntPolynomial& p);

}  // namespace ribbon
