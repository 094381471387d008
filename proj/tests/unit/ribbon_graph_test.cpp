#include <doctest.h>

#include <cstdio>

#include "ribbon/errors.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/ribbon_graph.hpp"

using namespace ribbon;

namespace {

const char* const triangle = R"(ribbongraph 1
vertices 3
edges 3
rot 0: 0.0 2.1
rot 1: 0.1 1.0
rot 2: 1.1 2.0
)";

std::size_t parse_error_line(const std::string& text) {
  try {
    decode(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

RibbonGraph single_edge() { return RibbonGraph({{EdgeEnd{0, 0}}, {EdgeEnd{0, 1}}}, {false}); }
RibbonGraph twisted_loop() { return RibbonGraph({{EdgeEnd{0, 0}, EdgeEnd{0, 1}}}, {true}); }

}  // namespace

TEST_CASE("decode reads a plane triangle") {
  const RibbonGraph g = decode(triangle);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.connected());
  CHECK_FALSE(g.is_loop(0));
  CHECK(encode(g) == triangle);
}

TEST_CASE("decode accepts comments, blank lines and a twist line") {
  const RibbonGraph g = decode("# B_1\nribbongraph 1\n\nvertices 1\nedges 1\nrot 0: 0.0 0.1  # loop\ntwist 0\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.twisted(0));
  CHECK(g.is_loop(0));
  const SurfaceStats s = surface_stats(g);
  CHECK_FALSE(s.orientable);
  CHECK(s.euler_genus == 1);
}

TEST_CASE("encode starts each rotation at its smallest end") {
  const RibbonGraph g({{EdgeEnd{1, 0}, EdgeEnd{0, 1}, EdgeEnd{0, 0}}, {EdgeEnd{1, 1}}}, {false, false});
  CHECK(encode(g) == "ribbongraph 1\nvertices 2\nedges 2\nrot 0: 0.0 1.0 0.1\nrot 1: 1.1\n");
  CHECK(decode(encode(g)).same_structure(g));
}

TEST_CASE("decode rejects malformed input with the offending line") {
  CHECK(parse_error_line("ribbongraph 2\n") == 1);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.0\n") == 4);
  CHECK(parse_error_line("ribbongraph 1\nvertices 2\nedges 1\nrot 0: 0.0\nrot 1: 0.0\n") == 5);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 3.0 0.1\n") == 4);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.2\n") == 4);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0\n") == 4);  // 0.1 missing, end of input
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 1: 0.0 0.1\n") == 4);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.1\ntwist 4\n") == 5);
  CHECK(parse_error_line("ribbongraph 1\nvertices 1\nedges 0\nrot 0:\nfoo\n") == 5);
  CHECK(parse_error_line("") == 1);
}

TEST_CASE("constructor rejects missing or repeated ends") {
  CHECK_THROWS_AS(RibbonGraph({{EdgeEnd{0, 0}}}, {false}), PreconditionError);
  CHECK_THROWS_AS(RibbonGraph({{EdgeEnd{0, 0}, EdgeEnd{0, 0}}}, {false}), PreconditionError);
}

TEST_CASE("EdgeSubset basics") {
  const EdgeSubset a = EdgeSubset::of(6, {0, 2, 5});
  CHECK(a.to_string() == "{0,2,5}");
  CHECK(a.size() == 3);
  CHECK(a.complement().to_string() == "{1,3,4}");
  CHECK(a.without(2).with(1).to_string() == "{0,1,5}");
  CHECK(EdgeSubset::all(64).size() == 64);
  CHECK(EdgeSubset::none(3).to_string() == "{}");
  CHECK_THROWS(EdgeSubset::of(3, {3}));
}

TEST_CASE("delete_edge from a triangle gives a path") {
  const RibbonGraph p = delete_edge(decode(triangle), 1);
  CHECK(p.edge_count() == 2);
  const SurfaceStats s = surface_stats(p);
  CHECK(s.f == 1);
  CHECK(s.genus == 0);
  CHECK(p.connected());
}

TEST_CASE("subdivide_edge keeps the surface") {
  const RibbonGraph g = decode(triangle);
  for (EdgeIndex k = 0; k < 3; ++k) {
    const RibbonGraph s = subdivide_edge(g, k);
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 4);
    CHECK(surface_stats(s).genus == 0);
  }
  const RibbonGraph b = subdivide_edge(twisted_loop(), 0);
  CHECK(surface_stats(b).euler_genus == 1);
  CHECK_THROWS_AS(subdivide_edge(g, 3), PreconditionError);
}

TEST_CASE("add_parallel_edge bounds a digon") {
  const RibbonGraph d2 = add_parallel_edge(single_edge(), 0);
  CHECK(d2.vertex_count() == 2);
  CHECK(d2.edge_count() == 2);
  const SurfaceStats s = surface_stats(d2);
  CHECK(s.f == 2);
  CHECK(s.genus == 0);
  // Planarity is preserved on every edge of a plane triangle.
  for (EdgeIndex k = 0; k < 3; ++k) CHECK(surface_stats(add_parallel_edge(decode(triangle), k)).genus == 0);
  // Twisted edges get a twisted copy and the surface is unchanged.
  const RibbonGraph b = add_parallel_edge(twisted_loop(), 0);
  CHECK(b.twisted(1));
  CHECK(surface_stats(b).euler_genus == 1);
}

TEST_CASE("join") {
  const RibbonGraph c2 = add_parallel_edge(single_edge(), 0);
  const RibbonGraph cb = join(c2, 0, 0, twisted_loop(), 0, 0);
  CHECK(cb.vertex_count() == 2);
  CHECK(cb.edge_count() == 3);
  CHECK_FALSE(surface_stats(cb).orientable);

  const RibbonGraph b2 = join(twisted_loop(), 0, 0, twisted_loop(), 0, 0);
  CHECK(surface_stats(b2).euler_genus == 2);

  const RibbonGraph path = join(single_edge(), 1, 0, single_edge(), 0, 0);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(surface_stats(path).genus == 0);

  CHECK_THROWS_AS(join(single_edge(), 2, 0, single_edge(), 0, 0), PreconditionError);
  CHECK_THROWS_AS(join(single_edge(), 0, 1, single_edge(), 0, 0), PreconditionError);
}

TEST_CASE("insert_edge and spanning_subgraph") {
  const RibbonGraph g = decode(triangle);
  const RibbonGraph chord = insert_edge(g, Corner{0, 0}, Corner{0, 1});
  CHECK(chord.edge_count() == 4);
  CHECK(chord.is_loop(3));
  const RibbonGraph sub = spanning_subgraph(g, EdgeSubset::of(3, {0, 2}));
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(components_of(g, EdgeSubset::of(3, {0})) == 2);
  CHECK(components_of(g, EdgeSubset::none(3)) == 3);
  CHECK(disjoint_union(g, g).component_count() == 2);
}

TEST_CASE("bridges") {
  const RibbonGraph g = decode(triangle);
  CHECK_FALSE(g.is_bridge(0));
  const RibbonGraph p = delete_edge(g, 0);
  CHECK(p.is_bridge(0));
  CHECK(p.is_bridge(1));
}

TEST_CASE("file round trip") {
  const std::string path = "ribbon_graph_test_roundtrip.rg";
  const RibbonGraph g = decode(triangle);
  write_ribbon_file(path, g);
  CHECK(read_ribbon_file(path) == g);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_ribbon_file("does/not/exist.rg"), ParseError);
}
