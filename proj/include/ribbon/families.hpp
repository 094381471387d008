#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

enum class Family {
  cycle,            ///< C_n, n ≥ 1 edges around one face
  path,             ///< P_n, n ≥ 1 vertices
  dipole,           ///< D_n, n ≥ 1 parallel ribbons between two vertices
  bouquet_twisted,  ///< B_n, n ≥ 0 interlaced twisted loops on one vertex
  necklace,         ///< N_n, n ≥ 1: C_{2n} with every other edge doubled
  fan_q,            ///< Q_n, n ≥ 1: apex joined to every vertex of P_n
  fan_f2m2,         ///< F_{(2,n,2)}, n ≥ 0: Q_{n+2} with both end spokes doubled
  wheel,            ///< W_n, n ≥ 2: hub joined to every vertex of C_n
  wheel_bar,        ///< W_n, n ≥ 2, with its first spoke doubled
  join_with_bm,     ///< C_n ∨ B_m, n ≥ 1, m ≥ 0
};

struct FamilySpec {
  Family kind = Family::cycle;
  std::size_t n = 1;
  std::size_t m = 0;  ///< second parameter, join_with_bm only
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);
const std::vector<Family>& all_families();

/// Throws PreconditionError when the parameters are out of range.
void validate(const FamilySpec& spec);

/// Canonical embedding: plane for every orientable family; B_n and the join
/// are non-orientable with ε = n resp. m.
RibbonGraph generate(const FamilySpec& spec);

/// ∂Γ from the closed forms (cycle, path, dipole, necklace), the fan
/// recurrence cross-checked against its explicit sum, or the wheel system.
/// Throws PreconditionError for the non-orientable families.
IntPolynomial closed_form_pdg(const FamilySpec& spec);

/// ∂Ε: (2z)^n for B_n, the product ∂Ε_{C_n}·(2z)^m for the join, and ∂Γ(z²) for
/// the orientable families.
IntPolynomial closed_form_euler(const FamilySpec& spec);

/// ∂Γ evaluated through the ribbon-graph recurrences: subdivision for cycles,
/// parallel ribbons for dipoles, the ring formula for necklaces, and the fan
/// and wheel recurrences. Throws PreconditionError for other families.
IntPolynomial recurrence_pdg(const FamilySpec& spec);

/// Q_1..Q_n from Q_{k+1} = (4z+1)Q_k − 4z²Q_{k−1}; element i is Q_{i+1}.
std::vector<IntPolynomial> fan_recurrence(std::size_t n);
/// Q_n = Σ_{k=0}^{n} g(k, n−1−k) − z·g(k, n−2−k).
IntPolynomial fan_closed_form(std::size_t n);
/// g(n,k) = (−1)^k 2^{2k+1} C(n,k) (1+4z)^{n−k} z^{2k} for 0 ≤ k ≤ n, else 0.
IntPolynomial fan_g(long n, long k);

struct WheelSeries {
  std::vector<IntPolynomial> w;  ///< w[i] = W_i for i ≥ 1 (w[0] unused)
  std::vector<IntPolynomial> f;  ///< f[i] for i ≥ 2
};
/// W_1..W_n from the coupled system with W_1 = 4, W_2 = 4z²+10z+2, f_2 = 2z.
WheelSeries wheel_recurrence(std::size_t n);

}  // namespace ribbon
