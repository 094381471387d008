#include <doctest.h>

#include <algorithm>
#include <set>

#include "../oracle.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/theorems.hpp"

using namespace ribbon;

namespace {

RibbonGraph cycle(std::size_t n) { return generate({Family::cycle, n, 0}); }
RibbonGraph dipole(std::size_t n) { return generate({Family::dipole, n, 0}); }
RibbonGraph twisted_loop() { return RibbonGraph({{EdgeEnd{0, 0}, EdgeEnd{0, 1}}}, {true}); }

// Plane 2x3 ladder. Vertices x, y, a, b, c, d; e = x-y, e5 = x-a, e6 = b-y,
// e3 = a-b, and the path a -e2- c -e1- d -e4- b. After deleting e the indices
// are e1..e6 -> 0..5.
RibbonGraph ladder() {
  // edge ids: 0=e1 c-d, 1=e2 a-c, 2=e3 a-b, 3=e4 d-b, 4=e5 x-a, 5=e6 b-y, 6=e x-y
  // vertices: 0=x 1=y 2=a 3=b 4=c 5=d
  return RibbonGraph(
      {
          {EdgeEnd{6, 0}, EdgeEnd{4, 0}},                 // x
          {EdgeEnd{5, 1}, EdgeEnd{6, 1}},                 // y
          {EdgeEnd{4, 1}, EdgeEnd{1, 0}, EdgeEnd{2, 0}},  // a
          {EdgeEnd{2, 1}, EdgeEnd{3, 1}, EdgeEnd{5, 0}},  // b
          {EdgeEnd{1, 1}, EdgeEnd{0, 0}},                 // c
          {EdgeEnd{0, 1}, EdgeEnd{3, 0}},                 // d
      },
      std::vector<bool>(7, false));
}

std::set<std::uint64_t> bits_of(const SubsetFamily& f) {
  std::set<std::uint64_t> s;
  for (const auto& a : f.members) s.insert(a.bits());
  return s;
}

}  // namespace

TEST_CASE("pdG polynomials of small families") {
  CHECK(pdg_polynomial(cycle(3), GenusMethod::formula) == IntPolynomial{2, 6});
  CHECK(pdg_polynomial(dipole(2), GenusMethod::formula) == IntPolynomial{2, 2});
  CHECK(pdg_polynomial(generate({Family::fan_q, 1, 0}), GenusMethod::formula) == IntPolynomial{2});
  CHECK(pdg_polynomial(cycle(3), GenusMethod::construct) == IntPolynomial{2, 6});
}

TEST_CASE("both enumeration methods agree with the reference oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const RibbonGraph g = random_orientable(seed, 1 + seed % 4, 3 + seed % 6);
    const RibbonGraph u = to_ribbon_graph(to_gem(g));  // untwisted presentation for the oracle
    const IntPolynomial expect = oracle::pdg(u);
    CHECK(pdg_polynomial(g, GenusMethod::formula) == expect);
    CHECK(pdg_polynomial(g, GenusMethod::construct) == expect);
    CHECK(euler_polynomial(g) == expect.squared_variable());
  }
}

TEST_CASE("result is independent of the thread count") {
  const RibbonGraph g = random_planar(3, 6, 14);
  EnumerateOptions one, many;
  many.threads = 7;
  CHECK(pdg_polynomial(g, GenusMethod::formula, one) == pdg_polynomial(g, GenusMethod::formula, many));
  CHECK(euler_polynomial(random_signed(4, 4, 13), one) == euler_polynomial(random_signed(4, 4, 13), many));
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS(pdg_polynomial(twisted_loop(), GenusMethod::construct), PreconditionError);
  CHECK_THROWS_AS(pdg_polynomial(disjoint_union(cycle(2), cycle(2)), GenusMethod::formula), PreconditionError);
  CHECK(pdg_polynomial(disjoint_union(cycle(2), cycle(2)), GenusMethod::construct) == IntPolynomial{4, 8, 4});
  EnumerateOptions capped;
  capped.edge_cap = 5;
  CHECK_THROWS_AS(pdg_polynomial(cycle(6), GenusMethod::formula, capped), PreconditionError);
  capped.override_cap = true;
  CHECK(pdg_polynomial(cycle(6), GenusMethod::formula, capped) == oracle::cycle_pdg(6));
}

TEST_CASE("Euler-genus polynomials") {
  CHECK(euler_polynomial(cycle(2)) == IntPolynomial{2, 0, 2});
  CHECK(euler_polynomial(generate({Family::bouquet_twisted, 2, 0})) == IntPolynomial{0, 0, 4});
  CHECK(euler_polynomial(generate({Family::join_with_bm, 2, 1})) == IntPolynomial{0, 4, 0, 4});
}

TEST_CASE("subset families") {
  const SubsetFamily c2 = subset_family(cycle(2), 1, FamilyKind::cycle_with_edge);
  CHECK(bits_of(c2) == std::set<std::uint64_t>{0b1});

  const RibbonGraph loop_on_c2 = insert_edge(cycle(2), Corner{0, 0}, Corner{0, 0});
  CHECK(subset_family(loop_on_c2, 2, FamilyKind::cycle_with_edge).members.size() == 4);
  CHECK(subset_family(loop_on_c2, 2, FamilyKind::cut_in_union).members.empty());

  // The nine sets of the ladder example.
  const std::set<std::uint64_t> expected = [] {
    // e1..e6 are bits 0..5
    auto b = [](std::initializer_list<int> es) {
      std::uint64_t x = 0;
      for (int e : es) x |= std::uint64_t{1} << (e - 1);
      return x;
    };
    return std::set<std::uint64_t>{b({5, 3, 6}),       b({5, 3, 6, 1}),    b({5, 3, 6, 2}),
                                   b({5, 3, 6, 4}),    b({5, 3, 6, 1, 2}), b({5, 3, 6, 1, 4}),
                                   b({5, 3, 6, 2, 4}), b({5, 3, 6, 1, 2, 4}), b({5, 2, 1, 4, 6})};
  }();
  const RibbonGraph g = ladder();
  REQUIRE(surface_stats(g).genus == 0);
  const SubsetFamily cyc = subset_family(g, 6, FamilyKind::cycle_with_edge);
  CHECK(bits_of(cyc) == expected);
  CHECK(subset_family(g, 6, FamilyKind::cut_in_union).members.size() == 64 - 9);
  CHECK_THROWS_AS(subset_family(g, 7, FamilyKind::cycle_with_edge), PreconditionError);
}

TEST_CASE("correction sums") {
  const RibbonGraph c2 = cycle(2);
  CHECK(correction_sum(delete_edge(c2, 1), subset_family(c2, 1, FamilyKind::cycle_with_edge)) == IntPolynomial{1});
  const RibbonGraph c3 = cycle(3);
  const SubsetFamily f = subset_family(c3, 0, FamilyKind::cycle_with_edge);
  CHECK(f.members.size() == 1);
  CHECK(f.members[0].size() == 2);
  CHECK(correction_sum(delete_edge(c3, 0), f) == IntPolynomial{1});
  SubsetFamily empty;
  CHECK(correction_sum(delete_edge(c3, 0), empty).is_zero());
}

TEST_CASE("spanning trees") {
  CHECK(spanning_trees(cycle(4)).size() == 4);
  CHECK(spanning_trees(dipole(3)).size() == 3);
  CHECK(spanning_trees(generate({Family::wheel, 4, 0})).size() == 45);  // wheel W_4: 45 spanning trees
  CHECK(spanning_trees(generate({Family::path, 5, 0})).size() == 1);
  CHECK(min_cotree_components(cycle(4)) == 3);
}

TEST_CASE("tree statistics") {
  const TreeStats c1 = tree_stats(cycle(1));
  CHECK(c1.gamma_max == 0);  // every partial dual of a plane loop is plane
  CHECK(c1.top_coeff == 2);

  const TreeStats c2 = tree_stats(cycle(2));
  CHECK(c2.eta == 2);
  CHECK(c2.top_coeff == 2);
  CHECK(c2.prop_case == 3);

  const TreeStats c4 = tree_stats(cycle(4));
  CHECK(c4.xi == 3);
  CHECK(c4.gamma_max == 1);
  CHECK(c4.top_coeff == 14);
  CHECK(c4.mu == 4);
  CHECK(c4.top_coeff > 2 * c4.mu);
  CHECK(c4.prop_case == 2);
}

TEST_CASE("maximum partial-dual genus") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const long expect = n == 1 ? 0 : 1;
    CHECK(max_pd_genus(cycle(n), MaxGenusMethod::brute) == expect);
    CHECK(max_pd_genus(cycle(n), MaxGenusMethod::xi) == expect);
  }
  for (std::size_t k = 2; k <= 6; ++k) CHECK(max_pd_genus(dipole(k), MaxGenusMethod::xi) == 1);
  CHECK(max_pd_genus(generate({Family::path, 6, 0}), MaxGenusMethod::brute) == 0);
  CHECK(max_pd_genus(generate({Family::path, 6, 0}), MaxGenusMethod::xi) == 0);

  const RibbonGraph torus({{EdgeEnd{0, 0}, EdgeEnd{1, 0}, EdgeEnd{0, 1}, EdgeEnd{1, 1}}}, {false, false});
  CHECK_THROWS_AS(max_pd_genus(torus, MaxGenusMethod::xi), PreconditionError);
}

TEST_CASE("distribution CSV") {
  CHECK(distribution_csv(IntPolynomial{2, 0, 6}) == "i,count\n0,2\n1,0\n2,6\n");
}
