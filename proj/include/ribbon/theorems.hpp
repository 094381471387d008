#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

enum class DeletionForm { cycle, cut };

/// ∂Γ_G from G−e: the cycle form 2z∂Γ_{G−e} + (2−2z)Σ_{cycle family} or the cut
/// form 2∂Γ_{G−e} + (2z−2)Σ_{cut family}. G connected and plane, G−e connected.
IntPolynomial deletion_recurrence(const RibbonGraph& g, EdgeIndex e, DeletionForm form);

struct ParallelResult {
  IntPolynomial polynomial;
  /// True when some A avoiding e1 and joining its ends leaves e1 on a cycle of
  /// A^c, so the correction sum over those A is needed.
  bool correction_needed = false;
};

/// ∂Γ of G with n−1 ribbons added parallel to e1 (n ≥ 2), from ∂Γ_G, ∂Γ_{G−e1}
/// and, when needed, the correction sum. G connected and plane, G−e1 connected.
ParallelResult parallel_recurrence(const RibbonGraph& g, EdgeIndex e1, unsigned n);

/// ∂Γ of subdivide_edge(g, e): 2∂Γ_G for a bridge, ∂Γ_G + 2z∂Γ_{G−e} otherwise.
IntPolynomial subdivision_recurrence(const RibbonGraph& g, EdgeIndex e);

/// One bead of a ring-like graph with its two root vertices.
struct RingPart {
  RibbonGraph graph;
  VertexIndex first_root = 0;
  VertexIndex second_root = 0;
};

/// Corners at the two roots lying on a common face, chosen canonically (the
/// lowest-numbered such face, first corner of each root on it). Nullopt when
/// the roots share no face.
std::optional<std::pair<Corner, Corner>> root_corners(const RingPart& part);

/// G_i plus an edge first_root → second_root drawn inside the shared face.
RibbonGraph close_part(const RingPart& part);

/// The ring: disjoint union of the parts, then ring edge i joins the second
/// root of part i to the first root of part i+1 (cyclically). Ring edges come
/// after all part edges, in part order.
RibbonGraph assemble_ring(const std::vector<RingPart>& parts);

/// ∂Γ of assemble_ring(parts) from the parts' polynomials and their closures.
/// Throws VerificationError if a closure factor is not divisible by (2−2z).
IntPolynomial ringlike_polynomial(const std::vector<RingPart>& parts);

/// Connected plane ribbon graph with the given vertex and edge counts. Starts
/// from a random tree and inserts each further edge between two corners of one
/// face, so loops and multiple edges occur. Deterministic per seed.
RibbonGraph random_planar(std::uint64_t seed, std::size_t vertices, std::size_t edges);
/// Connected orientable ribbon graph with uniformly shuffled rotations.
RibbonGraph random_orientable(std::uint64_t seed, std::size_t vertices, std::size_t edges);
/// As random_orientable, each edge twisted with probability 1/2.
RibbonGraph random_signed(std::uint64_t seed, std::size_t vertices, std::size_t edges);

enum class TheoremId {
  deletion,     ///< both deletion forms against brute force
  parallel,     ///< parallel-ribbon recurrence, n ∈ {2,3,4}
  subdivision,
  ringlike,
  lemma,        ///< c(A)+c(A^c) ≥ 1+ξ(G) for every A
  maxgenus,     ///< brute maximum genus = v − ξ
  prop12,       ///< partial-dual invariants
  eq11,         ///< genus formula against constructed partial duals
  prop23,       ///< maximum genus unchanged by extra parallel ribbons
  half_sum,     ///< Σ_{F∋e} z^{γ(G^F)} = ½∂Γ_G
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct RecurrenceReport {
  TheoremId theorem = TheoremId::deletion;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  IntPolynomial lhs;  ///< recurrence / formula side
  IntPolynomial rhs;  ///< brute-force side
  bool agree = true;
  /// First failing subset; for a failing recurrence its anchor edge, or the
  /// ring edges for the ring formula.
  std::optional<EdgeSubset> witness;
  std::string note;
};

struct AuditOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_edges = 9;
  unsigned threads = 1;
  /// Test hook applied to every recurrence-side polynomial before comparison.
  std::function<IntPolynomial(const IntPolynomial&)> perturb;
};

/// Check one theorem against brute force on seeded random graphs; one report
/// per trial, in trial order. Disagreements are reported, not thrown.
std::vector<RecurrenceReport> audit(TheoremId theorem, const AuditOptions& opts);

/// "theorem,seed,trial,agree,witness_subset" header plus one row per report.
std::string audit_csv(const std::vector<RecurrenceReport>& reports);

}  // namespace ribbon
