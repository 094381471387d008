#include <doctest.h>

#include <algorithm>

#include "../oracle.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/theorems.hpp"

using namespace ribbon;

namespace {

RibbonGraph untwisted_loop() { return RibbonGraph({{EdgeEnd{0, 0}, EdgeEnd{0, 1}}}, {false}); }
RibbonGraph twisted_loop() { return RibbonGraph({{EdgeEnd{0, 0}, EdgeEnd{0, 1}}}, {true}); }
RibbonGraph cycle(std::size_t n) { return generate({Family::cycle, n, 0}); }

}  // namespace

TEST_CASE("flag model of loops and the dipole") {
  const GemMap plane = to_gem(untwisted_loop());
  plane.check_invariants();
  CHECK(plane.flag_count() == 4);
  CHECK(plane.face_count() == 2);
  CHECK(plane.vertex_count() == 1);

  const GemMap projective = to_gem(twisted_loop());
  projective.check_invariants();
  CHECK(projective.face_count() == 1);
  CHECK_FALSE(projective.orientable());

  CHECK(to_gem(cycle(2)).face_count() == 2);
}

TEST_CASE("surface statistics") {
  const SurfaceStats c4 = surface_stats(cycle(4));
  CHECK(c4 == SurfaceStats{4, 4, 2, 1, 0, 0, true});

  const SurfaceStats b1 = surface_stats(twisted_loop());
  CHECK(b1.euler_genus == 1);
  CHECK_FALSE(b1.orientable);
  CHECK_FALSE(b1.genus.has_value());

  CHECK(surface_stats(generate({Family::bouquet_twisted, 2, 0})).euler_genus == 2);

  // Isolated vertices are counted as sphere components.
  const SurfaceStats iso = surface_stats(RibbonGraph({{}, {}}, {}));
  CHECK(iso.v == 2);
  CHECK(iso.f == 2);
  CHECK(iso.c == 2);
  CHECK(iso.genus == 0);

  // Euler relation on a batch of random signed maps.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SurfaceStats s = surface_stats(random_signed(seed, 4, 7));
    CHECK(static_cast<long>(s.v) - static_cast<long>(s.e) + static_cast<long>(s.f) ==
          2 * static_cast<long>(s.c) - s.euler_genus);
  }
}

TEST_CASE("spanning statistics") {
  const SpanningStats one = spanning_stats(cycle(2), EdgeSubset::of(2, {0}));
  CHECK(one.components == 1);
  CHECK(one.faces == 1);

  const RibbonGraph c5 = cycle(5);
  const SpanningStats none = spanning_stats(c5, EdgeSubset::none(5));
  CHECK(none.components == 5);
  CHECK(none.faces == 5);
  CHECK(none.genus == 0);

  const SpanningStats whole = spanning_stats(cycle(3), EdgeSubset::all(3));
  CHECK(whole.components == 1);
  CHECK(whole.faces == 2);
  CHECK(whole.genus == 0);
}

TEST_CASE("spanning statistics agree with the reference tracer") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RibbonGraph g = random_orientable(seed, 4, 6);
    // The tracer needs an untwisted presentation of the same surface.
    const RibbonGraph u = to_ribbon_graph(to_gem(g));
    REQUIRE(std::none_of(u.twists().begin(), u.twists().end(), [](bool t) { return t; }));
    SpanningEvaluator eval(u);
    for (std::uint64_t a = 0; a < 64; ++a) {
      const SpanningStats s = eval.stats(a);
      CHECK(s.components == oracle::components(u, a));
      CHECK(s.faces == oracle::faces(u, a));
      CHECK(*s.genus == oracle::genus(u, a));
    }
  }
}

TEST_CASE("partial duals of small graphs") {
  const RibbonGraph c2 = cycle(2);
  CHECK(equivalent_embedding(partial_dual(c2, EdgeSubset::none(2)), c2));

  const SurfaceStats dual = surface_stats(partial_dual(c2, EdgeSubset::all(2)));
  CHECK(dual.v == 2);
  CHECK(dual.genus == 0);

  const SurfaceStats half = surface_stats(partial_dual(c2, EdgeSubset::of(2, {0})));
  CHECK(half.v == 1);
  CHECK(half.e == 2);
  CHECK(half.genus == 1);
  CHECK(genus_of_partial_dual(c2, EdgeSubset::of(2, {0})) == 1);
}

TEST_CASE("genus formula matches construction on every subset of C_3") {
  const RibbonGraph c3 = cycle(3);
  for (std::uint64_t a = 0; a < 8; ++a) {
    const EdgeSubset s(3, a);
    CHECK(genus_of_partial_dual(c3, s) == surface_stats(partial_dual(c3, s)).genus);
  }
  CHECK(genus_of_partial_dual(c3, EdgeSubset::none(3)) == 0);
}

TEST_CASE("genus formula requires an orientable graph") {
  CHECK_THROWS_AS(genus_of_partial_dual(twisted_loop(), EdgeSubset::none(1)), PreconditionError);
}

TEST_CASE("partial dual is an involution and keeps e, c, orientability") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const RibbonGraph g = random_signed(seed, 3, 6);
    const SurfaceStats base = surface_stats(g);
    for (std::uint64_t a = 0; a < 64; ++a) {
      const EdgeSubset s(6, a);
      const RibbonGraph d = partial_dual(g, s);
      const SurfaceStats ds = surface_stats(d);
      CHECK(ds.v == spanning_stats(g, s).faces);
      CHECK(ds.e == base.e);
      CHECK(ds.c == base.c);
      CHECK(ds.orientable == base.orientable);
      CHECK(equivalent_embedding(partial_dual(d, s), g));
    }
  }
}

TEST_CASE("equivalent_embedding distinguishes embeddings") {
  // Same abstract graph (two vertices, three parallel edges), different rotations.
  const RibbonGraph plane({{EdgeEnd{0, 0}, EdgeEnd{1, 0}, EdgeEnd{2, 0}}, {EdgeEnd{2, 1}, EdgeEnd{1, 1}, EdgeEnd{0, 1}}},
                          {false, false, false});
  const RibbonGraph torus({{EdgeEnd{0, 0}, EdgeEnd{1, 0}, EdgeEnd{2, 0}}, {EdgeEnd{0, 1}, EdgeEnd{1, 1}, EdgeEnd{2, 1}}},
                          {false, false, false});
  CHECK(surface_stats(plane).genus == 0);
  CHECK(surface_stats(torus).genus == 1);
  CHECK_FALSE(equivalent_embedding(plane, torus));
  // Renumbered vertices, mirrored rotations.
  const RibbonGraph relabeled({{EdgeEnd{0, 1}, EdgeEnd{1, 1}, EdgeEnd{2, 1}}, {EdgeEnd{2, 0}, EdgeEnd{1, 0}, EdgeEnd{0, 0}}},
                              {false, false, false});
  CHECK(equivalent_embedding(plane, relabeled));
}
