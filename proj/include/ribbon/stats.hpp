#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/numeric.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

/// Law of the genus of a uniformly random partial dual: p_i = γ_i / 2^m.
struct GenusDistribution {
  std::size_t edge_count = 0;
  std::vector<Rational> probs;
};

/// Throws VerificationError unless every coefficient is nonnegative and they
/// sum to 2^m.
GenusDistribution to_distribution(const IntPolynomial& p, std::size_t m);

/// Exact mean P'(1) and variance P''(1) + P'(1) − P'(1)² of the probability
/// generating polynomial.
std::pair<Rational, Rational> mean_variance(const GenusDistribution& d);

/// Standard normal CDF.
double normal_cdf(double x);

/// sup over jump points i of max(|F(i) − Φ(t_i)|, |F(i⁻) − Φ(t_i)|) with
/// t_i = (i − mean)/sd from the distribution's own moments. Throws
/// PreconditionError for zero variance.
double ks_to_normal(const GenusDistribution& d);

/// (n+2)/2 − 2(3/8)^n
Rational necklace_mean_formula(std::size_t n);
/// n/4 + (2 − 2n/3)(3/8)^n − 4(3/8)^{2n}
Rational necklace_variance_formula(std::size_t n);

enum class SuiteFamily { fan, necklace };

struct SuiteRow {
  std::size_t n = 0;
  Rational mean;
  Rational variance;
  std::optional<double> ks;  ///< empty for a point mass
};

/// Rows n = 1..n_max from the closed forms (fan: Q_n by its recurrence;
/// necklace: N_n by its product formula); no enumeration.
std::vector<SuiteRow> asymptotic_suite(SuiteFamily family, std::size_t n_max);

/// "n,mean_num,mean_den,var_num,var_den,ks" with ks to 10 decimals.
std::string suite_csv(const std::vector<SuiteRow>& rows);

/// Fixed-point rendering with 10 decimals.
std::string format_decimal(double x);

}  // namespace ribbon
