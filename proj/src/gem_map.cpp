#include "ribbon/gem_map.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <initializer_list>
#include <string>

#include "ribbon/detail/union_find.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

using Involution = std::vector<Flag>;

std::size_t count_orbits(std::size_t n, std::initializer_list<const Involution*> gens,
                         std::vector<std::size_t>* sizes = nullptr) {
  std::vector<bool> seen(n, false);
  std::vector<Flag> stack;
  std::size_t orbits = 0;
  for (Flag start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::size_t size = 0;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const Flag x = stack.back();
      stack.pop_back();
      ++size;
      for (const Involution* s : gens) {
        const Flag y = (*s)[x];
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (sizes) sizes->push_back(size);
  }
  return orbits;
}

// 0/1 colouring of the flag graph with every involution changing colour, or
// nullopt when some component is not bipartite. Each component's smallest
// flag gets colour 0.
std::optional<std::vector<std::uint8_t>> two_colouring(const GemMap& m) {
  const std::size_t n = m.flag_count();
  std::vector<std::uint8_t> colour(n, 2);
  std::vector<Flag> stack;
  for (Flag start = 0; start < n; ++start) {
    if (colour[start] != 2) continue;
    colour[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const Flag x = stack.back();
      stack.pop_back();
      for (const Flag y : {m.s0(x), m.s1(x), m.s2(x)}) {
        if (colour[y] == 2) {
          colour[y] = static_cast<std::uint8_t>(1 - colour[x]);
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

// -------------------------------------------------------------------- GemMap

GemMap::GemMap(std::vector<Flag> s0, std::vector<Flag> s1, std::vector<Flag> s2, std::size_t isolated_vertices)
    : s0_(std::move(s0)), s1_(std::move(s1)), s2_(std::move(s2)), isolated_(isolated_vertices) {
  if (s0_.size() % 4 != 0 || s1_.size() != s0_.size() || s2_.size() != s0_.size())
    throw VerificationError("gem map: involutions must act on the same 4e flags");
}

std::size_t GemMap::vertex_count() const { return count_orbits(flag_count(), {&s1_, &s2_}) + isolated_; }
std::size_t GemMap::face_count() const { return count_orbits(flag_count(), {&s0_, &s1_}) + isolated_; }
std::size_t GemMap::component_count() const {
  return count_orbits(flag_count(), {&s0_, &s1_, &s2_}) + isolated_;
}

bool GemMap::orientable() const { return two_colouring(*this).has_value(); }

std::vector<std::size_t> GemMap::face_sizes() const {
  std::vector<std::size_t> sizes;
  count_orbits(flag_count(), {&s0_, &s1_}, &sizes);
  return sizes;
}

std::vector<std::size_t> GemMap::vertex_sizes() const {
  std::vector<std::size_t> sizes;
  count_orbits(flag_count(), {&s1_, &s2_}, &sizes);
  return sizes;
}

GemMap GemMap::partial_dual(const EdgeSubset& a) const {
  if (a.width() != edge_count()) throw PreconditionError("subset width does not match edge count");
  std::vector<Flag> s0 = s0_;
  std::vector<Flag> s2 = s2_;
  for (EdgeIndex k = 0; k < edge_count(); ++k) {
    if (!a.contains(k)) continue;
    for (Flag x = 4 * k; x < 4 * k + 4; ++x) std::swap(s0[x], s2[x]);
  }
  return GemMap(std::move(s0), s1_, std::move(s2), isolated_);
}

void GemMap::check_invariants() const {
  const std::size_t n = flag_count();
  for (const Involution* s : {&s0_, &s1_, &s2_}) {
    for (Flag x = 0; x < n; ++x) {
      const Flag y = (*s)[x];
      if (y >= n || y == x || (*s)[y] != x) throw VerificationError("gem map: not a fixed-point-free involution");
    }
  }
  for (Flag x = 0; x < n; ++x)
    if (s0_[s2_[x]] != s2_[s0_[x]]) throw VerificationError("gem map: s0 and s2 do not commute");
  std::vector<std::size_t> sizes;
  count_orbits(n, {&s0_, &s2_}, &sizes);
  for (std::size_t size : sizes)
    if (size != 4) throw VerificationError("gem map: an edge orbit does not have 4 flags");
  for (Flag x = 0; x < n; ++x)
    if (edge_of(s0_[x]) != edge_of(x) || edge_of(s2_[x]) != edge_of(x))
      throw VerificationError("gem map: s0/s2 leave an edge's flags");
}

GemMap to_gem(const RibbonGraph& g) {
  const std::size_t n = 4 * g.edge_count();
  std::vector<Flag> s0(n), s1(n), s2(n);
  for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
    const bool tw = g.twisted(k);
    for (unsigned end = 0; end < 2; ++end) {
      for (unsigned side = 0; side < 2; ++side) {
        const Flag x = flag_of(k, end, side);
        s2[x] = flag_of(k, end, 1 - side);
        s0[x] = flag_of(k, 1 - end, tw ? side : 1 - side);
      }
    }
  }
  std::size_t isolated = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const EdgeEnd h = rot[i];
      const EdgeEnd next = rot[(i + 1) % rot.size()];
      const Flag after = flag_of(h.edge, h.end, 1);
      const Flag before = flag_of(next.edge, next.end, 0);
      s1[after] = before;
      s1[before] = after;
    }
  }
  return GemMap(std::move(s0), std::move(s1), std::move(s2), isolated);
}

RibbonGraph to_ribbon_graph(const GemMap& m) {
  const std::size_t n = m.flag_count();
  const auto colour = two_colouring(m);
  constexpr auto unset = static_cast<VertexIndex>(-1);

  // Each vertex orbit alternates s2 and s1; its side-0 flags start half-edges.
  std::vector<VertexIndex> vertex_of_flag(n, unset);
  std::vector<std::vector<Flag>> starts;  // per vertex, side-0 flag of each half-edge in rotation order
  for (Flag first = 0; first < n; ++first) {
    if (vertex_of_flag[first] != unset) continue;
    const auto v = static_cast<VertexIndex>(starts.size());
    Flag x0 = first;
    if (colour && (*colour)[first] != 0) x0 = m.s2(first);
    std::vector<Flag> half_edges;
    Flag x = x0;
    do {
      vertex_of_flag[x] = v;
      vertex_of_flag[m.s2(x)] = v;
      half_edges.push_back(x);
      x = m.s1(m.s2(x));
    } while (x != x0);
    starts.push_back(std::move(half_edges));
  }

  // side[x]: 0 when x starts its half-edge in the walk above.
  std::vector<std::uint8_t> side(n, 1);
  for (const auto& hs : starts)
    for (Flag x : hs) side[x] = 0;

  const std::size_t e = m.edge_count();
  std::vector<bool> twisted(e, false);
  // end_of[x]: which end of its edge the half-edge containing x becomes.
  std::vector<std::uint8_t> end_of(n, 0);
  for (EdgeIndex k = 0; k < e; ++k) {
    const Flag base = 4 * k;
    for (Flag x = base; x < base + 4; ++x) {
      const bool with_base = x == base || x == m.s2(base);
      end_of[x] = with_base ? 0 : 1;
    }
    const Flag side0_end0 = side[base] == 0 ? base : m.s2(base);
    twisted[k] = side[m.s0(side0_end0)] == 0;
  }

  std::vector<std::vector<EdgeEnd>> rotations;
  rotations.reserve(starts.size() + m.isolated_vertices());
  for (const auto& hs : starts) {
    std::vector<EdgeEnd> rot;
    rot.reserve(hs.size());
    for (Flag x : hs) rot.push_back(EdgeEnd{edge_of(x), end_of[x]});
    rotations.push_back(std::move(rot));
  }
  rotations.resize(starts.size() + m.isolated_vertices());
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

SurfaceStats surface_stats(const GemMap& m) {
  SurfaceStats s;
  s.v = m.vertex_count();
  s.e = m.edge_count();
  s.f = m.face_count();
  s.c = m.component_count();
  s.orientable = m.orientable();
  s.euler_genus = 2 * static_cast<long>(s.c) - static_cast<long>(s.v) + static_cast<long>(s.e) - static_cast<long>(s.f);
  if (s.orientable) s.genus = s.euler_genus / 2;
  return s;
}

SurfaceStats surface_stats(const RibbonGraph& g) { return surface_stats(to_gem(g)); }

bool equivalent_embedding(const RibbonGraph& g1, const RibbonGraph& g2) {
  if (g1.edge_count() != g2.edge_count() || g1.vertex_count() != g2.vertex_count()) return false;
  const GemMap a = to_gem(g1);
  const GemMap b = to_gem(g2);
  if (a.isolated_vertices() != b.isolated_vertices()) return false;
  const std::size_t n = a.flag_count();
  constexpr auto unset = static_cast<Flag>(-1);
  std::vector<Flag> image(n, unset);
  std::vector<Flag> preimage(n, unset);
  std::vector<Flag> stack;

  // Extend x ↦ y along s0, s1, s2; false on any conflict. Undone on failure.
  auto try_map = [&](Flag x0, Flag y0) {
    std::vector<Flag> assigned;
    auto bind = [&](Flag x, Flag y) {
      if (edge_of(x) != edge_of(y)) return false;
      if (image[x] != unset || preimage[y] != unset) return image[x] == y && preimage[y] == x;
      image[x] = y;
      preimage[y] = x;
      assigned.push_back(x);
      stack.push_back(x);
      return true;
    };
    stack.clear();
    bool ok = bind(x0, y0);
    while (ok && !stack.empty()) {
      const Flag x = stack.back();
      stack.pop_back();
      const Flag y = image[x];
      ok = bind(a.s0(x), b.s0(y)) && bind(a.s1(x), b.s1(y)) && bind(a.s2(x), b.s2(y));
    }
    if (!ok)
      for (Flag x : assigned) {
        preimage[image[x]] = unset;
        image[x] = unset;
      }
    return ok;
  };

  for (Flag x = 0; x < n; ++x) {
    if (image[x] != unset) continue;
    const Flag base = 4 * edge_of(x);
    bool found = false;
    for (Flag y = base; y < base + 4 && !found; ++y) found = try_map(x, y);
    if (!found) return false;
  }
  return true;
}

// -------------------------------------------------------- SpanningEvaluator

SpanningEvaluator::SpanningEvaluator(const RibbonGraph& g)
    : graph_(g), gem_(to_gem(g)), orientable_(gem_.orientable()) {
  if (g.edge_count() > EdgeSubset::max_width) throw PreconditionError("at most 64 edges supported");
  flag_vertex_.resize(gem_.flag_count());
  for (EdgeIndex k = 0; k < g.edge_count(); ++k)
    for (unsigned end = 0; end < 2; ++end)
      for (unsigned side = 0; side < 2; ++side) flag_vertex_[flag_of(k, end, side)] = g.endpoint(k, end);
  seen_.assign(std::max(gem_.flag_count(), g.vertex_count()), 0);
}

std::size_t SpanningEvaluator::components(std::uint64_t bits) {
  const std::size_t v = graph_.vertex_count();
  parent_.resize(v);
  for (std::size_t i = 0; i < v; ++i) parent_[i] = i;
  auto find = [this](std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  };
  std::size_t count = v;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    const auto k = static_cast<EdgeIndex>(std::countr_zero(rest));
    std::size_t a = find(graph_.endpoint(k, 0));
    std::size_t b = find(graph_.endpoint(k, 1));
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
      --count;
    }
  }
  return count;
}

std::size_t SpanningEvaluator::faces(std::uint64_t bits) {
  // Faces of (V, A): <s0, s1_A>-orbits on the flags of A, where s1_A skips
  // over half-edges not in A; plus one face per vertex with no A-ends.
  auto in_a = [bits](Flag x) { return ((bits >> edge_of(x)) & 1U) != 0; };
  auto s1_restricted = [&](Flag x) {
    Flag y = gem_.s1(x);
    while (!in_a(y)) y = gem_.s1(gem_.s2(y));
    return y;
  };
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  std::size_t orbits = 0;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    const auto k = static_cast<EdgeIndex>(std::countr_zero(rest));
    for (Flag x0 = 4 * k; x0 < 4 * k + 4; ++x0) {
      if (seen_[x0] == stamp_) continue;
      ++orbits;
      Flag x = x0;
      do {
        seen_[x] = stamp_;
        const Flag y = gem_.s0(x);
        seen_[y] = stamp_;
        x = s1_restricted(y);
      } while (x != x0);
    }
  }
  // Vertices touched by A.
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  std::size_t touched = 0;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    const auto k = static_cast<EdgeIndex>(std::countr_zero(rest));
    for (unsigned end = 0; end < 2; ++end) {
      const VertexIndex v = graph_.endpoint(k, end);
      if (seen_[v] != stamp_) {
        seen_[v] = stamp_;
        ++touched;
      }
    }
  }
  return orbits + (graph_.vertex_count() - touched);
}

SpanningStats SpanningEvaluator::stats(std::uint64_t bits) {
  SpanningStats s;
  s.components = components(bits);
  s.faces = faces(bits);
  const auto edges = static_cast<long>(std::popcount(bits));
  s.euler_genus = 2 * static_cast<long>(s.components) - static_cast<long>(graph_.vertex_count()) + edges -
                  static_cast<long>(s.faces);
  bool orientable = orientable_;
  if (!orientable) {
    const RibbonGraph sub = spanning_subgraph(graph_, EdgeSubset(graph_.edge_count(), bits));
    orientable = to_gem(sub).orientable();
  }
  if (orientable) s.genus = s.euler_genus / 2;
  return s;
}

SpanningStats spanning_stats(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.width() != g.edge_count()) throw PreconditionError("subset width does not match edge count");
  SpanningEvaluator eval(g);
  return eval.stats(a.bits());
}

RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.width() != g.edge_count()) throw PreconditionError("subset width does not match edge count");
  return to_ribbon_graph(to_gem(g).partial_dual(a));
}

long genus_of_partial_dual(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.width() != g.edge_count()) throw PreconditionError("subset width does not match edge count");
  const SurfaceStats whole = surface_stats(g);
  if (!whole.orientable)
    throw PreconditionError("genus formula needs an orientable ribbon graph; use the Euler-genus path");
  SpanningEvaluator eval(g);
  const std::uint64_t in = a.bits();
  const std::uint64_t out = a.complement().bits();
  long genus_in = 0;
  long genus_out = 0;
  if (*whole.genus == 0) {
    // Spanning subgraphs of a plane ribbon graph are plane.
    assert(*eval.stats(in).genus == 0 && *eval.stats(out).genus == 0);
  } else {
    genus_in = *eval.stats(in).genus;
    genus_out = *eval.stats(out).genus;
  }
  return genus_in + genus_out + static_cast<long>(whole.c) + static_cast<long>(whole.v) -
         static_cast<long>(eval.components(in)) - static_cast<long>(eval.components(out));
}

}  // namespace ribbon
