#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../oracle.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"
#include "ribbon/gem_map.hpp"

using namespace ribbon;

#ifndef RIBBON_TEST_DATA
#error "RIBBON_TEST_DATA must point at tests/data"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntPolynomial brute(const FamilySpec& s) { return pdg_polynomial(generate(s), GenusMethod::formula); }

// Σ_k C(n,k) x^k y^{n-k} style helper: (a + b z)^n
IntPolynomial linear_pow(long long a, long long b, unsigned n) { return pow(IntPolynomial{a, b}, n); }

}  // namespace

TEST_CASE("generators match the frozen golden files") {
  const std::vector<std::pair<FamilySpec, std::string>> cases = {
      {{Family::cycle, 3, 0}, "cycle_3"},
      {{Family::path, 3, 0}, "path_3"},
      {{Family::dipole, 3, 0}, "dipole_3"},
      {{Family::bouquet_twisted, 2, 0}, "bouquet_twisted_2"},
      {{Family::necklace, 2, 0}, "necklace_2"},
      {{Family::fan_q, 4, 0}, "fan_q_4"},
      {{Family::fan_f2m2, 1, 0}, "fan_f2m2_1"},
      {{Family::wheel, 4, 0}, "wheel_4"},
      {{Family::wheel_bar, 3, 0}, "wheel_bar_3"},
      {{Family::join_with_bm, 2, 1}, "join_with_bm_2_1"},
  };
  for (const auto& [spec, name] : cases) {
    CAPTURE(name);
    CHECK(encode(generate(spec)) == slurp(std::string(RIBBON_TEST_DATA) + "/golden/" + name + ".rg"));
  }
}

TEST_CASE("generated sizes and surfaces") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(generate({Family::cycle, n, 0}).edge_count() == n);
    CHECK(generate({Family::dipole, n, 0}).edge_count() == n);
    CHECK(generate({Family::necklace, n, 0}).edge_count() == 3 * n);
    CHECK(generate({Family::fan_q, n, 0}).edge_count() == 2 * n - 1);
    CHECK(generate({Family::fan_f2m2, n, 0}).edge_count() == 2 * n + 5);
    CHECK(generate({Family::bouquet_twisted, n, 0}).edge_count() == n);
    CHECK(surface_stats(generate({Family::bouquet_twisted, n, 0})).euler_genus == static_cast<long>(n));
    CHECK(surface_stats(generate({Family::join_with_bm, n, 2})).euler_genus == 2);
  }
  for (std::size_t n = 2; n <= 6; ++n) CHECK(generate({Family::wheel, n, 0}).edge_count() == 2 * n);
  for (Family f : {Family::cycle, Family::path, Family::dipole, Family::necklace, Family::fan_q, Family::fan_f2m2,
                   Family::wheel, Family::wheel_bar}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const SurfaceStats s = surface_stats(generate({f, n, 0}));
      CHECK(s.genus == 0);
      CHECK(s.c == 1);
    }
  }
  const SurfaceStats n2 = surface_stats(generate({Family::necklace, 2, 0}));
  CHECK(n2.v == 4);
  CHECK(n2.e == 6);
  CHECK(surface_stats(generate({Family::bouquet_twisted, 0, 0})).v == 1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(generate({Family::cycle, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(generate({Family::wheel, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(generate({Family::cycle, 3, 2}), PreconditionError);
  CHECK_NOTHROW(generate({Family::fan_f2m2, 0, 0}));
  for (Family f : all_families()) CHECK(family_from_string(to_string(f)) == f);
  CHECK_FALSE(family_from_string("torus").has_value());
}

TEST_CASE("closed forms") {
  CHECK(closed_form_pdg({Family::cycle, 6, 0}) == IntPolynomial{2, 62});
  CHECK(closed_form_pdg({Family::fan_q, 2, 0}) == IntPolynomial{2, 6});
  CHECK(closed_form_pdg({Family::fan_q, 3, 0}) == IntPolynomial{2, 14, 16});
  CHECK(closed_form_pdg({Family::necklace, 1, 0}) == IntPolynomial{2, 6});
  CHECK(closed_form_pdg({Family::wheel, 2, 0}) == IntPolynomial{2, 10, 4});
  CHECK(closed_form_euler({Family::bouquet_twisted, 3, 0}) == IntPolynomial{0, 0, 0, 8});
  CHECK(closed_form_euler({Family::bouquet_twisted, 0, 0}) == IntPolynomial{1});
  CHECK(closed_form_euler({Family::join_with_bm, 2, 1}) == IntPolynomial{0, 4, 0, 4});
  CHECK_THROWS_AS(closed_form_pdg({Family::bouquet_twisted, 2, 0}), PreconditionError);
}

TEST_CASE("closed forms agree with brute force on small members") {
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(brute({Family::cycle, n, 0}) == oracle::cycle_pdg(n));
    CHECK(brute({Family::dipole, n, 0}) == oracle::cycle_pdg(n));
    CHECK(closed_form_pdg({Family::cycle, n, 0}) == oracle::cycle_pdg(n));
  }
  for (unsigned n = 1; n <= 4; ++n) {
    // 2^n z (2+2z)^n + (2-2z)(1+2z)^n
    const IntPolynomial expect = IntPolynomial::monomial(BigInt(1) << n, 1) * linear_pow(2, 2, n) +
                                 IntPolynomial{2, -2} * linear_pow(1, 2, n);
    CHECK(brute({Family::necklace, n, 0}) == expect);
    CHECK(closed_form_pdg({Family::necklace, n, 0}) == expect);
    CHECK(recurrence_pdg({Family::necklace, n, 0}) == expect);
  }
  for (unsigned n = 1; n <= 6; ++n) CHECK(brute({Family::fan_q, n, 0}) == closed_form_pdg({Family::fan_q, n, 0}));
  for (unsigned m = 0; m <= 2; ++m)
    CHECK(brute({Family::fan_f2m2, m, 0}) == closed_form_pdg({Family::fan_q, m + 3, 0}));
  for (unsigned m = 0; m <= 6; ++m) {
    CHECK(euler_polynomial(generate({Family::bouquet_twisted, m, 0})) == pow(IntPolynomial{0, 2}, m));
    CHECK(euler_polynomial(generate({Family::join_with_bm, 3, m})) == closed_form_euler({Family::join_with_bm, 3, m}));
  }
}

TEST_CASE("fan recurrence and explicit sum") {
  const auto q = fan_recurrence(5);
  REQUIRE(q.size() == 5);
  CHECK(q[0] == IntPolynomial{2});
  CHECK(q[1] == IntPolynomial{2, 6});
  CHECK(q[2] == IntPolynomial{2, 14, 16});
  for (std::size_t n = 1; n <= 30; ++n) CHECK(fan_recurrence(n).back() == fan_closed_form(n));
  CHECK(fan_g(2, 3).is_zero());
  CHECK(fan_g(2, -1).is_zero());
  CHECK(fan_g(1, 0) == IntPolynomial{2, 8});
  CHECK(fan_g(1, 1) == IntPolynomial{0, 0, -8});
  for (std::size_t n = 1; n <= 20; ++n) CHECK(fan_recurrence(n).back().coefficient_sum() == BigInt(1) << (2 * n - 1));
}

TEST_CASE("wheel system initial values and coefficient sums") {
  const WheelSeries w = wheel_recurrence(6);
  CHECK(w.w[1] == IntPolynomial{4});
  CHECK(w.w[2] == IntPolynomial{2, 10, 4});
  CHECK(w.f[2] == IntPolynomial{0, 2});
  CHECK(brute({Family::wheel, 2, 0}) == w.w[2]);
  CHECK(brute({Family::wheel, 3, 0}) == w.w[3]);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(w.w[n].coefficient_sum() == BigInt(1) << (2 * n));
}

TEST_CASE("wheel enumeration agrees with the reference tracer") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const FamilySpec w{Family::wheel, n, 0};
    CHECK(brute(w) == oracle::pdg(generate(w)));
    CHECK(pdg_polynomial(generate(w), GenusMethod::construct) == brute(w));
  }
}

TEST_CASE("dipole and cycle recurrences") {
  for (unsigned n = 1; n <= 9; ++n) {
    CHECK(recurrence_pdg({Family::cycle, n, 0}) == oracle::cycle_pdg(n));
    CHECK(recurrence_pdg({Family::dipole, n, 0}) == oracle::cycle_pdg(n));
  }
  CHECK_THROWS_AS(recurrence_pdg({Family::path, 3, 0}), PreconditionError);
}
