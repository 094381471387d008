#include "ribbon/families.hpp"

#include "ribbon/errors.hpp"
#include "ribbon/theorems.hpp"

namespace ribbon {

namespace {

const std::vector<std::pair<Family, const char*>> family_names = {
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::dipole, "dipole"},
    {Family::bouquet_twisted, "bouquet_twisted"},
    {Family::necklace, "necklace"},
    {Family::fan_q, "fan_q"},
    {Family::fan_f2m2, "fan_f2m2"},
    {Family::wheel, "wheel"},
    {Family::wheel_bar, "wheel_bar"},
    {Family::join_with_bm, "join_with_bm"},
};

EdgeEnd end0(std::size_t k) { return EdgeEnd{static_cast<EdgeIndex>(k), 0}; }
EdgeEnd end1(std::size_t k) { return EdgeEnd{static_cast<EdgeIndex>(k), 1}; }

RibbonGraph make(std::vector<std::vector<EdgeEnd>> rotations, std::size_t edges) {
  return RibbonGraph(std::move(rotations), std::vector<bool>(edges, false));
}

// Edge i runs from vertex i to vertex i+1 (mod n).
RibbonGraph cycle_graph(std::size_t n) {
  std::vector<std::vector<EdgeEnd>> rot(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i].push_back(end0(i));
    rot[(i + 1) % n].push_back(end1(i));
  }
  return make(std::move(rot), n);
}

RibbonGraph path_graph(std::size_t n) {
  std::vector<std::vector<EdgeEnd>> rot(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rot[i].push_back(end0(i));
    rot[i + 1].push_back(end1(i));
  }
  return make(std::move(rot), n - 1);
}

RibbonGraph dipole_graph(std::size_t n) {
  std::vector<std::vector<EdgeEnd>> rot(2);
  for (std::size_t i = 0; i < n; ++i) {
    rot[0].push_back(end0(i));
    rot[1].insert(rot[1].begin(), end1(i));
  }
  return make(std::move(rot), n);
}

RibbonGraph bouquet_graph(std::size_t m) {
  std::vector<std::vector<EdgeEnd>> rot(1);
  for (std::size_t i = 0; i < m; ++i) {
    rot[0].push_back(end0(i));
    rot[0].push_back(end1(i));
  }
  return RibbonGraph(std::move(rot), std::vector<bool>(m, true));
}

// Apex 0 above the path 1..n. Spoke i−1 joins the apex to path vertex i;
// path edge n+i−1 joins path vertices i and i+1. Rotations are
// counterclockwise in that drawing.
RibbonGraph fan_graph(std::size_t n) {
  std::vector<std::vector<EdgeEnd>> rot(n + 1);
  for (std::size_t i = 1; i <= n; ++i) rot[0].push_back(end0(i - 1));
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n) rot[i].push_back(end0(n + i - 1));
    rot[i].push_back(end1(i - 1));
    if (i > 1) rot[i].push_back(end1(n + i - 2));
  }
  return make(std::move(rot), 2 * n - 1);
}

// Hub 0 inside the rim 1..n. Spoke i−1 joins the hub to rim vertex i; rim edge
// n+i−1 joins rim vertex i to the next one counterclockwise.
RibbonGraph wheel_graph(std::size_t n) {
  std::vector<std::vector<EdgeEnd>> rot(n + 1);
  for (std::size_t i = 1; i <= n; ++i) rot[0].push_back(end0(i - 1));
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t before = i == 1 ? n : i - 1;
    rot[i].push_back(end0(n + i - 1));
    rot[i].push_back(end1(i - 1));
    rot[i].push_back(end1(n + before - 1));
  }
  return make(std::move(rot), 2 * n);
}

IntPolynomial cycle_form(std::size_t n) {
  return IntPolynomial::constant(2) + IntPolynomial::monomial((BigInt(1) << n) - 2, 1);
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& [k, name] : family_names)
    if (k == f) return name;
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (const auto& [k, n] : family_names)
    if (name == n) return k;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> out = [] {
    std::vector<Family> v;
    for (const auto& entry : family_names) v.push_back(entry.first);
    return v;
  }();
  return out;
}

void validate(const FamilySpec& spec) {
  std::size_t least = 1;
  switch (spec.kind) {
    case Family::bouquet_twisted:
    case Family::fan_f2m2:
      least = 0;
      break;
    case Family::wheel:
    case Family::wheel_bar:
      least = 2;
      break;
    default:
      break;
  }
  if (spec.n < least)
    throw PreconditionError(to_string(spec.kind) + " needs n >= " + std::to_string(least) + ", got " +
                            std::to_string(spec.n));
  if (spec.m != 0 && spec.kind != Family::join_with_bm)
    throw PreconditionError("parameter m only applies to join_with_bm");
}

RibbonGraph generate(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case Family::cycle:
      return cycle_graph(n);
    case Family::path:
      return path_graph(n);
    case Family::dipole:
      return dipole_graph(n);
    case Family::bouquet_twisted:
      return bouquet_graph(n);
    case Family::necklace: {
      RibbonGraph g = cycle_graph(2 * n);
      for (std::size_t i = 0; i < n; ++i) g = add_parallel_edge(g, static_cast<EdgeIndex>(2 * i));
      return g;
    }
    case Family::fan_q:
      return fan_graph(n);
    case Family::fan_f2m2: {
      // Apex, then the path v2, u1..un, v3; double the spokes to v2 and v3.
      RibbonGraph g = fan_graph(n + 2);
      g = add_parallel_edge(g, 0);
      return add_parallel_edge(g, static_cast<EdgeIndex>(n + 1));
    }
    case Family::wheel:
      return wheel_graph(n);
    case Family::wheel_bar:
      return add_parallel_edge(wheel_graph(n), 0);
    case Family::join_with_bm:
      if (spec.m == 0) return cycle_graph(n);
      return join(cycle_graph(n), 0, 0, bouquet_graph(spec.m), 0, 0);
  }
  throw PreconditionError("unknown family");
}

std::vector<IntPolynomial> fan_recurrence(std::size_t n) {
  std::vector<IntPolynomial> q;
  if (n >= 1) q.push_back(IntPolynomial{2});
  if (n >= 2) q.push_back(IntPolynomial{2, 6});
  while (q.size() < n) {
    const std::size_t k = q.size();
    q.push_back(IntPolynomial{1, 4} * q[k - 1] - IntPolynomial{0, 0, 4} * q[k - 2]);
  }
  return q;
}

IntPolynomial fan_g(long n, long k) {
  if (k < 0 || k > n) return {};
  BigInt binom = 1;
  for (long i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  BigInt scale = binom << static_cast<unsigned>(2 * k + 1);
  if (k % 2 != 0) scale = -scale;
  return (scale * pow(IntPolynomial{1, 4}, static_cast<unsigned>(n - k))).shifted(static_cast<std::size_t>(2 * k));
}

IntPolynomial fan_closed_form(std::size_t n) {
  if (n == 0) throw PreconditionError("fan_q needs n >= 1");
  const auto big_n = static_cast<long>(n);
  IntPolynomial sum;
  for (long k = 0; k <= big_n; ++k) {
    sum += fan_g(k, big_n - 1 - k);
    sum -= fan_g(k, big_n - 2 - k).shifted(1);
  }
  return sum;
}

WheelSeries wheel_recurrence(std::size_t n) {
  if (n == 0) throw PreconditionError("wheel needs n >= 1");
  const auto q = fan_recurrence(n);
  auto Q = [&](std::size_t i) -> const IntPolynomial& { return q[i - 1]; };
  WheelSeries s;
  s.w.resize(n + 1);
  s.f.resize(std::max<std::size_t>(n + 1, 3));
  s.w[1] = IntPolynomial{4};
  if (n >= 2) s.w[2] = IntPolynomial{2, 10, 4};
  s.f[2] = IntPolynomial{0, 2};
  const IntPolynomial one_minus_z{1, -1};
  for (std::size_t i = 3; i <= n; ++i) {
    IntPolynomial tail;
    for (std::size_t j = 2; j < i; ++j) tail += s.f[j].shifted(i - 1 - j);
    s.f[i] = Q(i - 1).shifted(1) + one_minus_z * tail;
    s.w[i] = s.w[i - 1].shifted(1) + Q(i) + Q(i - 1).shifted(1) * BigInt(2) - IntPolynomial{2, -2} * s.f[i];
  }
  return s;
}

IntPolynomial closed_form_pdg(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case Family::cycle:
    case Family::dipole:
      return cycle_form(n);
    case Family::path:
      return IntPolynomial::constant(BigInt(1) << (n - 1));
    case Family::necklace:
      return IntPolynomial::monomial(BigInt(1) << n, 1) * pow(IntPolynomial{2, 2}, static_cast<unsigned>(n)) +
             IntPolynomial{2, -2} * pow(IntPolynomial{1, 2}, static_cast<unsigned>(n));
    case Family::fan_q:
    case Family::fan_f2m2: {
      const std::size_t size = spec.kind == Family::fan_q ? n : n + 3;
      IntPolynomial rec = fan_recurrence(size).back();
      if (rec != fan_closed_form(size))
        throw VerificationError("fan recurrence and explicit sum disagree at n=" + std::to_string(size));
      return rec;
    }
    case Family::wheel:
      return wheel_recurrence(n).w[n];
    case Family::wheel_bar:
      return wheel_recurrence(n).w[n] + fan_recurrence(n).back().shifted(1) * BigInt(2);
    case Family::join_with_bm:
      if (spec.m == 0) return cycle_form(n);
      [[fallthrough]];
    case Family::bouquet_twisted:
      throw PreconditionError(to_string(spec.kind) + " is non-orientable; use the Euler-genus polynomial");
  }
  throw PreconditionError("unknown family");
}

IntPolynomial closed_form_euler(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case Family::bouquet_twisted:
      return pow(IntPolynomial{0, 2}, static_cast<unsigned>(spec.n));
    case Family::join_with_bm:
      return cycle_form(spec.n).squared_variable() * pow(IntPolynomial{0, 2}, static_cast<unsigned>(spec.m));
    default:
      return closed_form_pdg(spec).squared_variable();
  }
}

IntPolynomial recurrence_pdg(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case Family::cycle: {
      // C_{k+1} subdivides an edge of C_k, and C_k minus an edge is a path
      // with k−1 edges whose partial duals are all plane.
      IntPolynomial p{2};
      for (std::size_t k = 1; k < n; ++k) p += IntPolynomial::monomial(BigInt(1) << k, 1);
      return p;
    }
    case Family::dipole:
      if (n <= 2) return recurrence_pdg(FamilySpec{Family::cycle, n, 0});
      return parallel_recurrence(dipole_graph(2), 0, static_cast<unsigned>(n - 1)).polynomial;
    case Family::necklace: {
      std::vector<RingPart> parts(n, RingPart{dipole_graph(2), 0, 1});
      return ringlike_polynomial(parts);
    }
    case Family::fan_q:
      return fan_recurrence(n).back();
    case Family::fan_f2m2:
      return fan_recurrence(n + 3).back();
    case Family::wheel:
      return wheel_recurrence(n).w[n];
    case Family::wheel_bar:
      return wheel_recurrence(n).w[n] + fan_recurrence(n).back().shifted(1) * BigInt(2);
    default:
      throw PreconditionError("no recurrence evaluator for " + to_string(spec.kind));
  }
}

}  // namespace ribbon
