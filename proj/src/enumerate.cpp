#include "ribbon/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include "ribbon/detail/union_find.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/gem_map.hpp"

namespace ribbon {

namespace {

void check_cap(const RibbonGraph& g, const EnumerateOptions& opts) {
  if (g.edge_count() > EdgeSubset::max_width)
    throw PreconditionError("brute-force enumeration supports at most 64 edges");
  if (g.edge_count() > opts.edge_cap && !opts.override_cap)
    throw PreconditionError("graph has " + std::to_string(g.edge_count()) + " edges, above the enumeration cap of " +
                            std::to_string(opts.edge_cap) + " (override to proceed)");
}

unsigned resolve_threads(unsigned requested, std::uint64_t total) {
  unsigned t = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  if (total < 4096) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, total));
}

// Histogram of exponent(A) over all A ⊆ [0, edges), visited in Gray-code
// order and split into contiguous index ranges, one per worker. `make_worker`
// builds a per-thread callable mapping subset bits to an exponent.
template <class MakeWorker>
IntPolynomial subset_histogram(std::size_t edges, unsigned threads, MakeWorker make_worker) {
  const std::uint64_t total = std::uint64_t{1} << edges;
  const unsigned workers = resolve_threads(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto scan = [&](unsigned t) {
    auto exponent_of = make_worker();
    auto& hist = partial[t];
    const std::uint64_t lo = total / workers * t;
    const std::uint64_t hi = t + 1 == workers ? total : total / workers * (t + 1);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t bits = i ^ (i >> 1);
      const std::size_t x = exponent_of(bits);
      if (x >= hist.size()) hist.resize(x + 1, 0);
      ++hist[x];
    }
  };
  auto run = [&](unsigned t) {
    try {
      scan(t);
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  std::size_t width = 0;
  for (const auto& h : partial) width = std::max(width, h.size());
  std::vector<BigInt> coeffs(width, 0);
  for (const auto& h : partial)
    for (std::size_t i = 0; i < h.size(); ++i) coeffs[i] += h[i];
  IntPolynomial result(std::move(coeffs));
  if (result.coefficient_sum() != BigInt(1) << edges)
    throw VerificationError("subset histogram does not sum to 2^e");
  return result;
}

// Euler genus of every partial dual, computed on the swapped flag model.
class ConstructWorker {
 public:
  explicit ConstructWorker(const GemMap& base) : base_(base), n_(base.flag_count()) {
    s0_.resize(n_);
    s1_.resize(n_);
    s2_.resize(n_);
    for (Flag x = 0; x < n_; ++x) s1_[x] = base.s1(x);
    seen_.assign(n_, 0);
  }

  long euler_genus(std::uint64_t bits) {
    for (Flag x = 0; x < n_; ++x) {
      const bool swap = ((bits >> edge_of(x)) & 1U) != 0;
      s0_[x] = swap ? base_.s2(x) : base_.s0(x);
      s2_[x] = swap ? base_.s0(x) : base_.s2(x);
    }
    const long v = static_cast<long>(alternating_orbits(s1_, s2_) + base_.isolated_vertices());
    const long f = static_cast<long>(alternating_orbits(s0_, s1_) + base_.isolated_vertices());
    const long c = static_cast<long>(component_orbits() + base_.isolated_vertices());
    const long e = static_cast<long>(n_ / 4);
    return 2 * c - v + e - f;
  }

 private:
  std::uint32_t next_stamp() {
    if (++stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  // Orbits of the group generated by two involutions: each orbit is a cycle
  // alternating a and b.
  std::size_t alternating_orbits(const std::vector<Flag>& a, const std::vector<Flag>& b) {
    const std::uint32_t mark = next_stamp();
    std::size_t orbits = 0;
    for (Flag x0 = 0; x0 < n_; ++x0) {
      if (seen_[x0] == mark) continue;
      ++orbits;
      Flag x = x0;
      do {
        seen_[x] = mark;
        const Flag y = a[x];
        seen_[y] = mark;
        x = b[y];
      } while (x != x0);
    }
    return orbits;
  }

  std::size_t component_orbits() {
    const std::uint32_t mark = next_stamp();
    std::size_t orbits = 0;
    for (Flag x0 = 0; x0 < n_; ++x0) {
      if (seen_[x0] == mark) continue;
      ++orbits;
      seen_[x0] = mark;
      stack_.push_back(x0);
      while (!stack_.empty()) {
        const Flag x = stack_.back();
        stack_.pop_back();
        for (const Flag y : {s0_[x], s1_[x], s2_[x]}) {
          if (seen_[y] != mark) {
            seen_[y] = mark;
            stack_.push_back(y);
          }
        }
      }
    }
    return orbits;
  }

  const GemMap& base_;
  std::size_t n_;
  std::vector<Flag> s0_, s1_, s2_;
  std::vector<std::uint32_t> seen_;
  std::vector<Flag> stack_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

IntPolynomial pdg_polynomial(const RibbonGraph& g, GenusMethod method, const EnumerateOptions& opts) {
  check_cap(g, opts);
  const SurfaceStats whole = surface_stats(g);
  if (!whole.orientable)
    throw PreconditionError("pdG polynomial needs an orientable ribbon graph; use the Euler-genus polynomial");
  const std::size_t e = g.edge_count();
  const std::uint64_t mask = EdgeSubset::all(e).bits();

  if (method == GenusMethod::formula) {
    if (!g.connected()) throw PreconditionError("formula enumeration needs a connected ribbon graph");
    const long base = static_cast<long>(whole.c + whole.v);
    if (*whole.genus == 0) {
      return subset_histogram(e, opts.threads, [&] {
        return [eval = SpanningEvaluator(g), base, mask](std::uint64_t bits) mutable {
          return static_cast<std::size_t>(base - static_cast<long>(eval.components(bits)) -
                                          static_cast<long>(eval.components(~bits & mask)));
        };
      });
    }
    return subset_histogram(e, opts.threads, [&] {
      return [eval = SpanningEvaluator(g), base, mask](std::uint64_t bits) mutable {
        const SpanningStats in = eval.stats(bits);
        const SpanningStats out = eval.stats(~bits & mask);
        return static_cast<std::size_t>(*in.genus + *out.genus + base - static_cast<long>(in.components) -
                                        static_cast<long>(out.components));
      };
    });
  }

  const GemMap gem = to_gem(g);
  return subset_histogram(e, opts.threads, [&] {
    return [worker = ConstructWorker(gem)](std::uint64_t bits) mutable {
      const long eg = worker.euler_genus(bits);
      if (eg % 2 != 0) throw VerificationError("partial dual of an orientable graph has odd Euler genus");
      return static_cast<std::size_t>(eg / 2);
    };
  });
}

IntPolynomial euler_polynomial(const RibbonGraph& g, const EnumerateOptions& opts) {
  check_cap(g, opts);
  const GemMap gem = to_gem(g);
  return subset_histogram(g.edge_count(), opts.threads, [&] {
    return [worker = ConstructWorker(gem)](std::uint64_t bits) mutable {
      return static_cast<std::size_t>(worker.euler_genus(bits));
    };
  });
}

SubsetFamily subset_family(const RibbonGraph& g, EdgeIndex e, FamilyKind kind) {
  if (e >= g.edge_count()) throw PreconditionError("subset_family: edge index out of range");
  const RibbonGraph rest = delete_edge(g, e);
  if (rest.edge_count() > 30) throw PreconditionError("subset_family: too many edges to enumerate");
  const VertexIndex u = g.endpoint(e, 0);
  const VertexIndex w = g.endpoint(e, 1);
  SubsetFamily fam;
  fam.kind = kind;
  fam.anchor_edge = e;
  const std::uint64_t total = std::uint64_t{1} << rest.edge_count();
  detail::UnionFind uf;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool joined = u == w;
    if (!joined) {
      uf.reset(rest.vertex_count());
      for (std::uint64_t b = bits; b != 0; b &= b - 1) {
        const auto k = static_cast<EdgeIndex>(std::countr_zero(b));
        uf.unite(rest.endpoint(k, 0), rest.endpoint(k, 1));
      }
      joined = uf.same(u, w);
    }
    if (joined == (kind == FamilyKind::cycle_with_edge)) fam.members.emplace_back(rest.edge_count(), bits);
  }
  return fam;
}

IntPolynomial correction_sum(const RibbonGraph& g_minus_e, const SubsetFamily& family) {
  if (!g_minus_e.connected()) throw PreconditionError("correction_sum: G-e must be connected");
  const SurfaceStats s = surface_stats(g_minus_e);
  if (!s.orientable || *s.genus != 0) throw PreconditionError("correction_sum: G-e must be plane");
  SpanningEvaluator eval(g_minus_e);
  const std::uint64_t mask = EdgeSubset::all(g_minus_e.edge_count()).bits();
  const long base = static_cast<long>(s.c + s.v);
  std::vector<BigInt> coeffs;
  for (const EdgeSubset& a : family.members) {
    if (a.width() != g_minus_e.edge_count()) throw PreconditionError("correction_sum: family width mismatch");
    const long genus =
        base - static_cast<long>(eval.components(a.bits())) - static_cast<long>(eval.components(~a.bits() & mask));
    const auto i = static_cast<std::size_t>(genus);
    if (i >= coeffs.size()) coeffs.resize(i + 1, 0);
    coeffs[i] += 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<EdgeSubset> spanning_trees(const RibbonGraph& g) {
  if (!g.connected()) throw PreconditionError("spanning_trees: graph is disconnected");
  const std::size_t e = g.edge_count();
  const std::size_t v = g.vertex_count();
  if (e > EdgeSubset::max_width) throw PreconditionError("spanning_trees: at most 64 edges");
  std::vector<EdgeSubset> trees;

  // Include (contract) or exclude (delete) each edge in turn; an edge may be
  // excluded only while the remaining edges can still span.
  auto spans = [&](std::uint64_t chosen, EdgeIndex from) {
    detail::UnionFind uf(v);
    for (EdgeIndex k = 0; k < e; ++k)
      if (((chosen >> k) & 1U) != 0 || k >= from) uf.unite(g.endpoint(k, 0), g.endpoint(k, 1));
    return uf.set_count() == 1;
  };
  auto recurse = [&](auto&& self, EdgeIndex k, std::uint64_t chosen, detail::UnionFind uf) -> void {
    if (uf.set_count() == 1) {
      trees.emplace_back(e, chosen);
      return;
    }
    if (k == e) return;
    const VertexIndex a = g.endpoint(k, 0);
    const VertexIndex b = g.endpoint(k, 1);
    if (!uf.same(a, b)) {
      detail::UnionFind with = uf;
      with.unite(a, b);
      self(self, k + 1, chosen | (std::uint64_t{1} << k), std::move(with));
    }
    if (spans(chosen, k + 1)) self(self, k + 1, chosen, std::move(uf));
  };
  recurse(recurse, 0, 0, detail::UnionFind(v));
  return trees;
}

std::size_t min_cotree_components(const RibbonGraph& g) {
  std::size_t best = g.vertex_count();
  for (const EdgeSubset& t : spanning_trees(g)) best = std::min(best, components_of(g, t.complement()));
  return best;
}

TreeStats tree_stats(const RibbonGraph& g, const EnumerateOptions& opts) {
  if (!g.connected()) throw PreconditionError("tree_stats: graph must be connected");
  const SurfaceStats s = surface_stats(g);
  if (!s.orientable || *s.genus != 0) throw PreconditionError("tree_stats: graph must be plane");

  const auto trees = spanning_trees(g);
  TreeStats out;
  out.xi = g.vertex_count();
  std::vector<std::size_t> cotree_components;
  cotree_components.reserve(trees.size());
  for (const EdgeSubset& t : trees) {
    cotree_components.push_back(components_of(g, t.complement()));
    out.xi = std::min(out.xi, cotree_components.back());
  }
  const std::size_t v = g.vertex_count();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (cotree_components[i] == out.xi) ++out.mu;
    // T^c is a spanning tree iff it is connected with v-1 edges.
    if (cotree_components[i] == 1 && g.edge_count() - trees[i].size() == v - 1) ++out.eta;
  }
  out.mu_c = out.mu;  // A ↦ A^c is a bijection between the two sets
  out.gamma_max = static_cast<long>(v) - static_cast<long>(out.xi);
  out.top_coeff = pdg_polynomial(g, GenusMethod::formula, opts).coeff(static_cast<std::size_t>(out.gamma_max));

  if (out.eta > 0) {
    out.prop_case = 3;
  } else if (g.edge_count() <= 20) {
    std::vector<std::uint64_t> tree_bits;
    for (const auto& t : trees) tree_bits.push_back(t.bits());
    std::sort(tree_bits.begin(), tree_bits.end());
    const std::uint64_t mask = EdgeSubset::all(g.edge_count()).bits();
    SpanningEvaluator eval(g);
    bool only_trees = true;
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t bits = 0; bits < total && only_trees; ++bits) {
      if (eval.components(bits) + eval.components(~bits & mask) != 1 + out.xi) continue;
      const bool in_t = std::binary_search(tree_bits.begin(), tree_bits.end(), bits);
      const bool in_tc = std::binary_search(tree_bits.begin(), tree_bits.end(), ~bits & mask);
      if (!in_t && !in_tc) only_trees = false;
    }
    out.prop_case = only_trees ? 1 : 2;
  }
  return out;
}

long max_pd_genus(const RibbonGraph& g, MaxGenusMethod method, const EnumerateOptions& opts) {
  if (!g.connected()) throw PreconditionError("max_pd_genus: graph must be connected");
  if (method == MaxGenusMethod::brute) return pdg_polynomial(g, GenusMethod::formula, opts).degree();
  const SurfaceStats s = surface_stats(g);
  if (!s.orientable || *s.genus != 0) throw PreconditionError("max_pd_genus: the spanning-tree formula needs a plane graph");
  return static_cast<long>(g.vertex_count()) - static_cast<long>(min_cotree_components(g));
}

std::string distribution_csv(const IntPolynomial& p) {
  std::string out = "i,count\n";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += std::to_string(i) + "," + p.coeffs()[i].str() + "\n";
  return out;
}

}  // namespace ribbon
