#include "ribbon/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"

namespace ribbon {

GenusDistribution to_distribution(const IntPolynomial& p, std::size_t m) {
  const BigInt total = BigInt(1) << m;
  GenusDistribution d;
  d.edge_count = m;
  BigInt sum = 0;
  for (const BigInt& c : p.coeffs()) {
    if (c < 0) throw VerificationError("genus distribution: negative coefficient");
    sum += c;
    d.probs.emplace_back(c, total);
  }
  if (sum != total)
    throw VerificationError("genus distribution: coefficients sum to " + sum.str() + ", expected 2^" +
                            std::to_string(m));
  return d;
}

std::pair<Rational, Rational> mean_variance(const GenusDistribution& d) {
  Rational first = 0;   // P'(1)
  Rational second = 0;  // P''(1)
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    first += d.probs[i] * i;
    if (i >= 2) second += d.probs[i] * (i * (i - 1));
  }
  return {first, second + first - first * first};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_to_normal(const GenusDistribution& d) {
  const auto [mean, variance] = mean_variance(d);
  if (variance == 0) throw PreconditionError("KS distance needs a positive variance");
  const double mu = static_cast<double>(mean);
  const double sd = std::sqrt(static_cast<double>(variance));
  Rational cumulative = 0;
  double worst = 0;
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    if (d.probs[i] == 0) continue;
    const double before = static_cast<double>(cumulative);
    cumulative += d.probs[i];
    const double after = static_cast<double>(cumulative);
    const double phi = normal_cdf((static_cast<double>(i) - mu) / sd);
    worst = std::max({worst, std::abs(after - phi), std::abs(before - phi)});
  }
  return worst;
}

namespace {

Rational power(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational necklace_mean_formula(std::size_t n) {
  const Rational r = power(Rational(3, 8), n);
  return Rational(n + 2, 2) - 2 * r;
}

Rational necklace_variance_formula(std::size_t n) {
  const Rational r = power(Rational(3, 8), n);
  return Rational(n, 4) + (2 - Rational(2 * n, 3)) * r - 4 * r * r;
}

std::vector<SuiteRow> asymptotic_suite(SuiteFamily family, std::size_t n_max) {
  std::vector<SuiteRow> rows;
  std::vector<IntPolynomial> fans;
  if (family == SuiteFamily::fan) fans = fan_recurrence(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const IntPolynomial p = family == SuiteFamily::fan ? fans[n - 1] : closed_form_pdg({Family::necklace, n, 0});
    const std::size_t edges = family == SuiteFamily::fan ? 2 * n - 1 : 3 * n;
    const GenusDistribution d = to_distribution(p, edges);
    SuiteRow row;
    row.n = n;
    std::tie(row.mean, row.variance) = mean_variance(d);
    if (row.variance > 0) row.ks = ks_to_normal(d);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

std::string suite_csv(const std::vector<SuiteRow>& rows) {
  std::string out = "n,mean_num,mean_den,var_num,var_den,ks\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + numerator(r.mean).str() + "," + denominator(r.mean).str() + "," +
           numerator(r.variance).str() + "," + denominator(r.variance).str() + "," +
           (r.ks ? format_decimal(*r.ks) : "") + "\n";
  }
  return out;
}

}  // namespace ribbon
