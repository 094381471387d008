#include "ribbon/theorems.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <thread>

#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/gem_map.hpp"

namespace ribbon {

namespace {

void require_connected_plane(const RibbonGraph& g, const char* who) {
  if (!g.connected()) throw PreconditionError(std::string(who) + ": graph must be connected");
  const SurfaceStats s = surface_stats(g);
  if (!s.orientable || *s.genus != 0) throw PreconditionError(std::string(who) + ": graph must be plane");
}

IntPolynomial brute(const RibbonGraph& g) { return pdg_polynomial(g, GenusMethod::construct); }
IntPolynomial via_formula(const RibbonGraph& g) { return pdg_polynomial(g, GenusMethod::formula); }

const IntPolynomial z = IntPolynomial::z();
const IntPolynomial two_minus_2z{2, -2};

// Face id of every corner: face_of[v][gap].
std::vector<std::vector<std::size_t>> corner_faces(const RibbonGraph& g) {
  const GemMap gem = to_gem(g);
  const std::size_t n = gem.flag_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> face(n, unset);
  std::size_t next = 0;
  for (Flag x0 = 0; x0 < n; ++x0) {
    if (face[x0] != unset) continue;
    Flag x = x0;
    do {
      face[x] = next;
      const Flag y = gem.s0(x);
      face[y] = next;
      x = gem.s1(y);
    } while (x != x0);
    ++next;
  }
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (const EdgeEnd& h : g.rotation(v)) out[v].push_back(face[flag_of(h.edge, h.end, 1)]);
  return out;
}

}  // namespace

IntPolynomial deletion_recurrence(const RibbonGraph& g, EdgeIndex e, DeletionForm form) {
  if (e >= g.edge_count()) throw PreconditionError("deletion_recurrence: edge index out of range");
  require_connected_plane(g, "deletion_recurrence");
  const RibbonGraph rest = delete_edge(g, e);
  if (!rest.connected()) throw PreconditionError("deletion_recurrence: G-e must be connected (e is a bridge)");
  const IntPolynomial base = via_formula(rest);
  if (form == DeletionForm::cycle) {
    const SubsetFamily fam = subset_family(g, e, FamilyKind::cycle_with_edge);
    return IntPolynomial{0, 2} * base + two_minus_2z * correction_sum(rest, fam);
  }
  const SubsetFamily fam = subset_family(g, e, FamilyKind::cut_in_union);
  return IntPolynomial{2} * base + IntPolynomial{-2, 2} * correction_sum(rest, fam);
}

ParallelResult parallel_recurrence(const RibbonGraph& g, EdgeIndex e1, unsigned n) {
  if (n < 2) throw PreconditionError("parallel_recurrence: n must be at least 2");
  if (e1 >= g.edge_count()) throw PreconditionError("parallel_recurrence: edge index out of range");
  require_connected_plane(g, "parallel_recurrence");
  const RibbonGraph rest = delete_edge(g, e1);
  if (!rest.connected()) throw PreconditionError("parallel_recurrence: G-e1 must be connected");
  if (g.edge_count() > 30) throw PreconditionError("parallel_recurrence: too many edges to enumerate");

  const IntPolynomial pg = via_formula(g);
  const IntPolynomial pg_minus = via_formula(rest);

  // Correction sum over A ⊆ E(G), e1 ∉ A, with both A and A^c − e1 joining
  // the ends of e1.
  const VertexIndex u = g.endpoint(e1, 0);
  const VertexIndex w = g.endpoint(e1, 1);
  SpanningEvaluator eval(g);
  const std::uint64_t mask = EdgeSubset::all(g.edge_count()).bits();
  const std::uint64_t e1_bit = std::uint64_t{1} << e1;
  const long base = static_cast<long>(g.vertex_count()) + 1;
  std::vector<BigInt> coeffs;
  bool needed = false;
  auto joins = [&](std::uint64_t bits) {
    if (u == w) return true;
    return components_of(g, EdgeSubset(g.edge_count(), bits)) ==
           components_of(g, EdgeSubset(g.edge_count(), bits | e1_bit));
  };
  for (std::uint64_t bits = 0; bits <= mask; ++bits) {
    if ((bits & e1_bit) != 0) continue;
    const std::uint64_t comp_rest = ~bits & mask & ~e1_bit;
    if (!joins(bits) || !joins(comp_rest)) continue;
    needed = true;
    const long genus = base - static_cast<long>(eval.components(bits)) -
                       static_cast<long>(eval.components(~bits & mask));
    const auto i = static_cast<std::size_t>(genus);
    if (i >= coeffs.size()) coeffs.resize(i + 1, 0);
    coeffs[i] += 1;
  }
  const IntPolynomial correction(std::move(coeffs));

  IntPolynomial p2 = IntPolynomial{1, 2} * pg - IntPolynomial{0, 0, 2} * pg_minus;
  if (needed) p2 += IntPolynomial{2, -4, 2} * correction;
  if (n == 2) return {p2, needed};
  const BigInt top = BigInt(1) << (n - 1);
  return {(top - 1) * p2 - (top - 2) * pg, needed};
}

IntPolynomial subdivision_recurrence(const RibbonGraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw PreconditionError("subdivision_recurrence: edge index out of range");
  if (!g.connected()) throw PreconditionError("subdivision_recurrence: graph must be connected");
  if (g.is_bridge(e)) return IntPolynomial{2} * via_formula(g);
  return via_formula(g) + IntPolynomial{0, 2} * via_formula(delete_edge(g, e));
}

std::optional<std::pair<Corner, Corner>> root_corners(const RingPart& part) {
  const RibbonGraph& g = part.graph;
  if (part.first_root >= g.vertex_count() || part.second_root >= g.vertex_count())
    throw PreconditionError("ring part: root vertex out of range");
  if (part.first_root == part.second_root) throw PreconditionError("ring part: the two roots must differ");
  const auto faces = corner_faces(g);
  const auto& fa = faces[part.first_root];
  const auto& fb = faces[part.second_root];
  std::optional<std::pair<Corner, Corner>> best;
  std::size_t best_face = 0;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (best && fa[i] >= best_face) continue;
    const auto j = std::find(fb.begin(), fb.end(), fa[i]);
    if (j == fb.end()) continue;
    best_face = fa[i];
    best = std::pair{Corner{part.first_root, i},
                     Corner{part.second_root, static_cast<std::size_t>(j - fb.begin())}};
  }
  return best;
}

RibbonGraph close_part(const RingPart& part) {
  const auto corners = root_corners(part);
  if (!corners) throw PreconditionError("ring part: roots share no face, the closure would not be plane");
  return insert_edge(part.graph, corners->first, corners->second);
}

RibbonGraph assemble_ring(const std::vector<RingPart>& parts) {
  if (parts.empty()) throw PreconditionError("ring: need at least one part");
  std::vector<std::pair<Corner, Corner>> corners;
  std::vector<VertexIndex> offset;
  RibbonGraph ring;
  for (const RingPart& part : parts) {
    const auto c = root_corners(part);
    if (!c) throw PreconditionError("ring part: roots share no face");
    offset.push_back(static_cast<VertexIndex>(ring.vertex_count()));
    corners.push_back(*c);
    ring = disjoint_union(ring, part.graph);
  }
  // Each root vertex receives exactly one ring end, so the gaps stay valid.
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    Corner from = corners[i].second;
    Corner to = corners[j].first;
    from.vertex += offset[i];
    to.vertex += offset[j];
    ring = insert_edge(ring, from, to);
  }
  return ring;
}

IntPolynomial ringlike_polynomial(const std::vector<RingPart>& parts) {
  if (parts.empty()) throw PreconditionError("ring: need at least one part");
  IntPolynomial product_parts{1};
  IntPolynomial product_factors{1};
  for (const RingPart& part : parts) {
    require_connected_plane(part.graph, "ring part");
    const RibbonGraph closed = close_part(part);
    const SurfaceStats s = surface_stats(closed);
    if (!s.orientable || *s.genus != 0) throw PreconditionError("ring part: closure is not plane");
    const IntPolynomial p = via_formula(part.graph);
    const IntPolynomial p_closed = via_formula(closed);
    const auto factor = exact_divide(p_closed - IntPolynomial{0, 2} * p, two_minus_2z);
    if (!factor) throw VerificationError("ring part: closure factor is not divisible by 2-2z");
    product_parts *= p;
    product_factors *= *factor;
  }
  const BigInt scale = BigInt(1) << parts.size();
  return (scale * z) * product_parts + two_minus_2z * product_factors;
}

// ------------------------------------------------------------ random graphs

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

void check_targets(std::size_t vertices, std::size_t edges) {
  if (vertices == 0) throw PreconditionError("random graph: need at least one vertex");
  if (edges + 1 < vertices) throw PreconditionError("random graph: need at least v-1 edges to connect");
  if (edges > EdgeSubset::max_width) throw PreconditionError("random graph: at most 64 edges");
}

// Abstract connected multigraph: random tree plus random extra edges.
std::vector<std::pair<VertexIndex, VertexIndex>> random_edges(Rng& rng, std::size_t vertices, std::size_t edges) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (std::size_t i = 1; i < vertices; ++i)
    out.emplace_back(static_cast<VertexIndex>(pick(rng, i)), static_cast<VertexIndex>(i));
  while (out.size() < edges)
    out.emplace_back(static_cast<VertexIndex>(pick(rng, vertices)), static_cast<VertexIndex>(pick(rng, vertices)));
  return out;
}

RibbonGraph random_embedding(std::uint64_t seed, std::size_t vertices, std::size_t edges, bool twists) {
  check_targets(vertices, edges);
  Rng rng(seed);
  const auto ends = random_edges(rng, vertices, edges);
  std::vector<std::vector<EdgeEnd>> rotations(vertices);
  for (EdgeIndex k = 0; k < ends.size(); ++k) {
    rotations[ends[k].first].push_back(EdgeEnd{k, 0});
    rotations[ends[k].second].push_back(EdgeEnd{k, 1});
  }
  for (auto& rot : rotations) std::shuffle(rot.begin(), rot.end(), rng);
  std::vector<bool> twisted(edges, false);
  if (twists)
    for (std::size_t k = 0; k < edges; ++k) twisted[k] = pick(rng, 2) == 1;
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

}  // namespace

RibbonGraph random_planar(std::uint64_t seed, std::size_t vertices, std::size_t edges) {
  check_targets(vertices, edges);
  Rng rng(seed);
  std::vector<std::vector<EdgeEnd>> rotations(1);
  for (std::size_t i = 1; i < vertices; ++i) {
    const auto k = static_cast<EdgeIndex>(i - 1);
    auto& rot = rotations[pick(rng, i)];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pick(rng, rot.size() + 1)), EdgeEnd{k, 0});
    rotations.push_back({EdgeEnd{k, 1}});
  }
  RibbonGraph g(std::move(rotations), std::vector<bool>(vertices - 1, false));
  while (g.edge_count() < edges) {
    if (g.edge_count() == 0) {
      g = insert_edge(g, Corner{0, 0}, Corner{0, 0});
      continue;
    }
    const auto faces = corner_faces(g);
    std::map<std::size_t, std::vector<Corner>> by_face;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      for (std::size_t gap = 0; gap < faces[v].size(); ++gap) by_face[faces[v][gap]].push_back(Corner{v, gap});
    const auto& corners = std::next(by_face.begin(), static_cast<std::ptrdiff_t>(pick(rng, by_face.size())))->second;
    const Corner a = corners[pick(rng, corners.size())];
    const Corner b = corners[pick(rng, corners.size())];
    g = insert_edge(g, a, b);
  }
  return g;
}

RibbonGraph random_orientable(std::uint64_t seed, std::size_t vertices, std::size_t edges) {
  return random_embedding(seed, vertices, edges, false);
}

RibbonGraph random_signed(std::uint64_t seed, std::size_t vertices, std::size_t edges) {
  return random_embedding(seed, vertices, edges, true);
}

// ------------------------------------------------------------------- audits

namespace {

const std::vector<std::pair<TheoremId, const char*>> theorem_names = {
    {TheoremId::deletion, "deletion"}, {TheoremId::parallel, "parallel"}, {TheoremId::subdivision, "subdivision"},
    {TheoremId::ringlike, "ringlike"}, {TheoremId::lemma, "lemma"},     {TheoremId::maxgenus, "maxgenus"},
    {TheoremId::prop12, "prop12"},     {TheoremId::eq11, "eq11"},       {TheoremId::prop23, "prop23"},
    {TheoremId::half_sum, "half_sum"},
};

struct Trial {
  Rng rng;
  RecurrenceReport& report;

  std::uint64_t sub_seed() { return rng(); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + pick(rng, hi - lo + 1); }

  // Connected plane graph with `e` edges and a random vertex count; with
  // `cyclic` the graph has at least one non-bridge edge.
  RibbonGraph planar(std::size_t e, bool cyclic) {
    const std::size_t v = between(1, cyclic ? std::max<std::size_t>(1, e) : e + 1);
    return random_planar(sub_seed(), v, e);
  }

  EdgeIndex pick_edge(const RibbonGraph& g, bool bridge) {
    std::vector<EdgeIndex> candidates;
    for (EdgeIndex k = 0; k < g.edge_count(); ++k)
      if (g.is_bridge(k) == bridge) candidates.push_back(k);
    if (candidates.empty()) throw std::logic_error("no suitable edge in generated graph");
    return candidates[pick(rng, candidates.size())];
  }

  void compare(IntPolynomial lhs, IntPolynomial rhs, const AuditOptions& opts, std::optional<EdgeSubset> witness) {
    if (opts.perturb) lhs = opts.perturb(lhs);
    report.agree = report.agree && lhs == rhs;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    if (!report.agree && !report.witness) report.witness = std::move(witness);
  }

  void fail(EdgeSubset witness) {
    if (report.agree) report.witness = witness;
    report.agree = false;
  }

  void add_note(const std::string& s) {
    if (!report.note.empty()) report.note += "; ";
    report.note += s;
  }
};

std::vector<std::size_t> sorted_degrees(const RibbonGraph& g) {
  std::vector<std::size_t> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Face boundary lengths of an orientable, untwisted ribbon graph by walking
// darts: leave along an edge, then turn to the next end in the far rotation.
std::vector<std::size_t> face_lengths_by_rotation(const RibbonGraph& g) {
  std::vector<bool> seen(2 * g.edge_count(), false);
  std::vector<std::size_t> out;
  for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
    for (std::uint8_t end = 0; end < 2; ++end) {
      EdgeEnd h{k, end};
      if (seen[2 * k + end]) continue;
      std::size_t len = 0;
      while (!seen[2 * h.edge + h.end]) {
        seen[2 * h.edge + h.end] = true;
        ++len;
        const EdgeEnd far{h.edge, static_cast<std::uint8_t>(1 - h.end)};
        const auto& rot = g.rotation(g.vertex_of(far));
        h = rot[(g.position_of(far) + 1) % rot.size()];
      }
      out.push_back(len);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_prop12(Trial& t, const RibbonGraph& g) {
  const std::size_t e = g.edge_count();
  const SurfaceStats s = surface_stats(g);
  SpanningEvaluator eval(g);
  const std::uint64_t total = std::uint64_t{1} << e;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const EdgeSubset a(e, bits);
    const RibbonGraph d = partial_dual(g, a);
    const SurfaceStats sd = surface_stats(d);
    const bool ok = sd.v == eval.faces(bits) && sd.e == s.e && sd.c == s.c && sd.orientable == s.orientable &&
                    equivalent_embedding(partial_dual(d, a), g);
    if (!ok) {
      t.fail(a);
      return;
    }
  }
  if (!equivalent_embedding(partial_dual(g, EdgeSubset::none(e)), g)) t.fail(EdgeSubset::none(e));
  const RibbonGraph dual = partial_dual(g, EdgeSubset::all(e));
  const SurfaceStats sd = surface_stats(dual);
  bool dual_ok = sd.v == s.f && sd.f == s.v && sd.euler_genus == s.euler_genus;
  const bool untwisted = std::ranges::none_of(g.twists(), [](bool b) { return b; });
  if (untwisted && e > 0) dual_ok = dual_ok && sorted_degrees(dual) == face_lengths_by_rotation(g);
  if (!dual_ok) t.fail(EdgeSubset::all(e));
}

IntPolynomial histogram(const std::vector<long>& values) {
  std::vector<BigInt> coeffs;
  for (long x : values) {
    const auto i = static_cast<std::size_t>(x);
    if (i >= coeffs.size()) coeffs.resize(i + 1, 0);
    coeffs[i] += 1;
  }
  return IntPolynomial(std::move(coeffs));
}

void run_trial(TheoremId id, Trial& t, const AuditOptions& opts) {
  const std::size_t cap = std::max<std::size_t>(opts.max_edges, 2);
  switch (id) {
    case TheoremId::deletion: {
      const RibbonGraph g = t.planar(t.between(1, cap), true);
      const EdgeIndex e = t.pick_edge(g, false);
      if (g.is_loop(e)) t.add_note("loop");
      const IntPolynomial rhs = brute(g);
      const auto witness = EdgeSubset::of(g.edge_count(), {e});
      t.compare(deletion_recurrence(g, e, DeletionForm::cycle), rhs, opts, witness);
      t.compare(deletion_recurrence(g, e, DeletionForm::cut), rhs, opts, witness);
      break;
    }
    case TheoremId::parallel: {
      const auto n = static_cast<unsigned>(2 + t.report.trial % 3);
      const RibbonGraph g = t.planar(t.between(1, cap - 1), true);
      const EdgeIndex e1 = t.pick_edge(g, false);
      RibbonGraph bigger = g;
      for (unsigned i = 1; i < n; ++i) bigger = add_parallel_edge(bigger, e1);
      const ParallelResult r = parallel_recurrence(g, e1, n);
      t.add_note("n=" + std::to_string(n) + (r.correction_needed ? " with correction" : " no correction"));
      t.compare(r.polynomial, brute(bigger), opts, EdgeSubset::of(g.edge_count(), {e1}));
      break;
    }
    case TheoremId::subdivision: {
      const bool want_bridge = t.report.trial % 2 == 1;
      const RibbonGraph g = t.planar(t.between(1, cap - 1), !want_bridge);
      std::size_t bridges = 0;
      for (EdgeIndex k = 0; k < g.edge_count(); ++k) bridges += g.is_bridge(k) ? 1 : 0;
      const bool bridge = want_bridge ? bridges > 0 : bridges == g.edge_count();
      const EdgeIndex e = t.pick_edge(g, bridge);
      t.add_note(bridge ? "bridge" : "cycle edge");
      t.compare(subdivision_recurrence(g, e), brute(subdivide_edge(g, e)), opts, EdgeSubset::of(g.edge_count(), {e}));
      break;
    }
    case TheoremId::ringlike: {
      const std::size_t count = t.between(1, 3);
      std::vector<RingPart> parts;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t e = t.between(1, std::min<std::size_t>(3, cap));
        const RibbonGraph g = random_planar(t.sub_seed(), t.between(2, e + 1), e);
        std::vector<RingPart> options;
        for (VertexIndex a = 0; a < g.vertex_count(); ++a)
          for (VertexIndex b = 0; b < g.vertex_count(); ++b)
            if (a != b && root_corners(RingPart{g, a, b})) options.push_back(RingPart{g, a, b});
        parts.push_back(options[pick(t.rng, options.size())]);
      }
      t.add_note(std::to_string(count) + " parts");
      const RibbonGraph ring = assemble_ring(parts);
      std::vector<EdgeIndex> ring_edges;
      for (auto k = static_cast<EdgeIndex>(ring.edge_count() - count); k < ring.edge_count(); ++k)
        ring_edges.push_back(k);
      t.compare(ringlike_polynomial(parts), brute(ring), opts, EdgeSubset::of(ring.edge_count(), ring_edges));
      break;
    }
    case TheoremId::lemma:
    case TheoremId::maxgenus: {
      const RibbonGraph g = t.planar(t.between(1, cap), false);
      const std::size_t xi = min_cotree_components(g);
      const std::size_t e = g.edge_count();
      if (id == TheoremId::maxgenus) {
        t.compare(IntPolynomial::constant(static_cast<long>(g.vertex_count() - xi)),
                  IntPolynomial::constant(brute(g).degree()), opts, std::nullopt);
        break;
      }
      SpanningEvaluator eval(g);
      const std::uint64_t mask = EdgeSubset::all(e).bits();
      std::size_t least = 2 * g.vertex_count();
      for (std::uint64_t bits = 0; bits <= mask; ++bits) {
        const std::size_t c = eval.components(bits) + eval.components(~bits & mask);
        least = std::min(least, c);
        if (c < 1 + xi) t.fail(EdgeSubset(e, bits));
      }
      t.report.lhs = IntPolynomial::constant(static_cast<long>(least));
      t.report.rhs = IntPolynomial::constant(static_cast<long>(1 + xi));
      break;
    }
    case TheoremId::prop12: {
      const std::size_t e = t.between(1, cap);
      check_prop12(t, t.planar(e, false));
      if (t.report.agree) {
        const std::size_t v = t.between(1, e + 1);
        check_prop12(t, random_signed(t.sub_seed(), v, e));
      }
      break;
    }
    case TheoremId::eq11: {
      const std::size_t e = t.between(1, cap);
      const RibbonGraph g = random_orientable(t.sub_seed(), t.between(1, e + 1), e);
      t.add_note("genus " + std::to_string(*surface_stats(g).genus));
      const GemMap gem = to_gem(g);
      std::vector<long> formula;
      std::vector<long> constructed;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e); ++bits) {
        const EdgeSubset a(e, bits);
        formula.push_back(genus_of_partial_dual(g, a));
        constructed.push_back(*surface_stats(gem.partial_dual(a)).genus);
        if (formula.back() != constructed.back()) t.fail(a);
      }
      t.report.lhs = histogram(formula);
      t.report.rhs = histogram(constructed);
      break;
    }
    case TheoremId::prop23: {
      const RibbonGraph g = t.planar(t.between(1, cap), false);
      const auto e = static_cast<EdgeIndex>(pick(t.rng, g.edge_count()));
      RibbonGraph gk = add_parallel_edge(g, e);
      const long base = brute(gk).degree();
      std::vector<BigInt> got;
      for (unsigned k = 3; k <= 5; ++k) {
        gk = add_parallel_edge(gk, e);
        const long m = brute(gk).degree();
        if (m != base) t.fail(EdgeSubset::of(g.edge_count(), {e}));
        got.emplace_back(m);
      }
      t.report.lhs = IntPolynomial(std::move(got));
      t.report.rhs = IntPolynomial(std::vector<BigInt>(3, base));
      break;
    }
    case TheoremId::half_sum: {
      const RibbonGraph g = t.planar(t.between(1, cap), true);
      const EdgeIndex e = t.pick_edge(g, false);
      const std::size_t m = g.edge_count();
      std::vector<long> with_e;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
        if ((bits >> e) & 1U) with_e.push_back(genus_of_partial_dual(g, EdgeSubset(m, bits)));
      t.compare(IntPolynomial{2} * histogram(with_e), brute(g), opts, EdgeSubset::of(m, {e}));
      break;
    }
  }
}

}  // namespace

std::string to_string(TheoremId id) {
  for (const auto& [t, name] : theorem_names)
    if (t == id) return name;
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
  for (const auto& [t, n] : theorem_names)
    if (name == n) return t;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& entry : theorem_names) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

std::vector<RecurrenceReport> audit(TheoremId theorem, const AuditOptions& opts) {
  std::vector<RecurrenceReport> reports(opts.trials);
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      RecurrenceReport& r = reports[i];
      r.theorem = theorem;
      r.seed = opts.seed;
      r.trial = i;
      std::seed_seq seq{opts.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(theorem)};
      Trial t{Rng(seq), r};
      try {
        run_trial(theorem, t, opts);
      } catch (const std::exception& ex) {
        r.agree = false;
        t.add_note(std::string("error: ") + ex.what());
      }
    }
  };
  const unsigned workers =
      std::max(1U, std::min<unsigned>(opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads,
                                      static_cast<unsigned>(std::max<std::size_t>(1, opts.trials))));
  if (workers == 1) {
    run_range(0, opts.trials);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run_range, opts.trials * w / workers, opts.trials * (w + 1) / workers);
  }
  return reports;
}

std::string audit_csv(const std::vector<RecurrenceReport>& reports) {
  std::string out = "theorem,seed,trial,agree,witness_subset\n";
  for (const auto& r : reports) {
    out += to_string(r.theorem) + "," + std::to_string(r.seed) + "," + std::to_string(r.trial) + "," +
           (r.agree ? "true" : "false") + ",";
    if (r.witness) out += "\"" + r.witness->to_string() + "\"";
    out += "\n";
  }
  return out;
}

}  // namespace ribbon
