#include "ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "ribbon/detail/union_find.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

// ---------------------------------------------------------------- EdgeSubset

EdgeSubset::EdgeSubset(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width > max_width) throw PreconditionError("edge subsets support at most 64 edges");
  if (width < max_width && (bits >> width) != 0)
    throw PreconditionError("edge subset has bits set beyond its width");
}

EdgeSubset EdgeSubset::all(std::size_t width) {
  return EdgeSubset(width, width == max_width ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1);
}

EdgeSubset EdgeSubset::of(std::size_t width, std::span<const EdgeIndex> edges) {
  EdgeSubset s(width, 0);
  for (EdgeIndex k : edges) s = s.with(k);
  return s;
}

EdgeSubset EdgeSubset::of(std::size_t width, std::initializer_list<EdgeIndex> edges) {
  return of(width, std::span<const EdgeIndex>(edges.begin(), edges.size()));
}

std::size_t EdgeSubset::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

EdgeSubset EdgeSubset::with(EdgeIndex k) const {
  if (k >= width_) throw PreconditionError("edge index " + std::to_string(k) + " out of range");
  return EdgeSubset(width_, bits_ | (std::uint64_t{1} << k));
}

EdgeSubset EdgeSubset::without(EdgeIndex k) const {
  if (k >= width_) throw PreconditionError("edge index " + std::to_string(k) + " out of range");
  return EdgeSubset(width_, bits_ & ~(std::uint64_t{1} << k));
}

EdgeSubset EdgeSubset::complement() const { return EdgeSubset(width_, all(width_).bits_ & ~bits_); }

std::vector<EdgeIndex> EdgeSubset::indices() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex k = 0; k < width_; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::string EdgeSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (EdgeIndex k : indices()) {
    if (!first) s += ',';
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

// --------------------------------------------------------------- RibbonGraph

RibbonGraph::RibbonGraph(std::vector<std::vector<EdgeEnd>> rotations, std::vector<bool> twisted)
    : rotations_(std::move(rotations)), twisted_(std::move(twisted)) {
  const std::size_t ends = 2 * twisted_.size();
  constexpr auto unset = static_cast<VertexIndex>(-1);
  end_vertex_.assign(ends, unset);
  end_position_.assign(ends, 0);
  for (VertexIndex v = 0; v < rotations_.size(); ++v) {
    for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
      const EdgeEnd h = rotations_[v][i];
      if (h.edge >= twisted_.size() || h.end > 1)
        throw PreconditionError("rotation of vertex " + std::to_string(v) + " names unknown end " +
                                std::to_string(h.edge) + "." + std::to_string(h.end));
      const std::size_t slot = 2 * h.edge + h.end;
      if (end_vertex_[slot] != unset)
        throw PreconditionError("end " + std::to_string(h.edge) + "." + std::to_string(h.end) +
                                " appears twice");
      end_vertex_[slot] = v;
      end_position_[slot] = i;
    }
  }
  for (std::size_t slot = 0; slot < ends; ++slot)
    if (end_vertex_[slot] == unset)
      throw PreconditionError("end " + std::to_string(slot / 2) + "." + std::to_string(slot % 2) +
                              " is missing");
}

std::size_t RibbonGraph::component_count() const {
  detail::UnionFind uf(vertex_count());
  for (EdgeIndex k = 0; k < edge_count(); ++k) uf.unite(endpoint(k, 0), endpoint(k, 1));
  return uf.set_count();
}

bool RibbonGraph::is_bridge(EdgeIndex k) const {
  if (k >= edge_count()) throw PreconditionError("edge index out of range");
  if (is_loop(k)) return false;
  detail::UnionFind uf(vertex_count());
  for (EdgeIndex j = 0; j < edge_count(); ++j)
    if (j != k) uf.unite(endpoint(j, 0), endpoint(j, 1));
  return !uf.same(endpoint(k, 0), endpoint(k, 1));
}

namespace {

std::vector<EdgeEnd> canonical_rotation(const std::vector<EdgeEnd>& rot) {
  if (rot.empty()) return rot;
  const auto smallest = std::min_element(rot.begin(), rot.end());
  std::vector<EdgeEnd> out(smallest, rot.end());
  out.insert(out.end(), rot.begin(), smallest);
  return out;
}

}  // namespace

bool RibbonGraph::same_structure(const RibbonGraph& other) const {
  if (twisted_ != other.twisted_ || vertex_count() != other.vertex_count()) return false;
  auto canon = [](const RibbonGraph& g) {
    std::vector<std::vector<EdgeEnd>> rots;
    rots.reserve(g.vertex_count());
    for (const auto& r : g.rotations_) rots.push_back(canonical_rotation(r));
    std::sort(rots.begin(), rots.end());
    return rots;
  };
  return canon(*this) == canon(other);
}

// -------------------------------------------------------------- text format

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

}  // namespace

RibbonGraph decode(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
  std::vector<std::vector<EdgeEnd>> rotations;
  std::vector<bool> rotation_seen;
  std::vector<std::size_t> end_line;  // line on which each end was declared, 0 = unseen
  std::vector<bool> twisted;

  auto require_sizes = [&](const char* what) {
    if (!vertices || !edges)
      throw ParseError(line_no, std::string("'") + what + "' before 'vertices' and 'edges'");
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "ribbongraph" || tokens[1] != "1")
        throw ParseError(line_no, "expected header 'ribbongraph 1'");
      have_header = true;
      continue;
    }
    const std::string_view key = tokens[0];
    if (key == "vertices" || key == "edges") {
      if (tokens.size() != 2) throw ParseError(line_no, std::string("malformed '") + std::string(key) + "' line");
      auto& slot = key == "vertices" ? vertices : edges;
      if (slot) throw ParseError(line_no, std::string("duplicate '") + std::string(key) + "' line");
      slot = parse_count(tokens[1], line_no, key == "vertices" ? "vertices" : "edges");
      if (vertices && edges) {
        rotations.resize(*vertices);
        rotation_seen.assign(*vertices, false);
        end_line.assign(2 * *edges, 0);
        twisted.assign(*edges, false);
      }
    } else if (key == "rot") {
      require_sizes("rot");
      // "rot <v>: ..." ; the colon may be attached to the index or stand alone.
      const std::string_view rest = trim(line.substr(3));
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, "missing ':' in rot line");
      const std::size_t v = parse_count(trim(rest.substr(0, colon)), line_no, "vertex index");
      if (v >= *vertices) throw ParseError(line_no, "vertex index " + std::to_string(v) + " out of range");
      if (rotation_seen[v]) throw ParseError(line_no, "duplicate rotation for vertex " + std::to_string(v));
      rotation_seen[v] = true;
      for (std::string_view tok : split_ws(rest.substr(colon + 1))) {
        const auto dot = tok.find('.');
        if (dot == std::string_view::npos) throw ParseError(line_no, "edge end '" + std::string(tok) + "' is not <k>.<0|1>");
        const std::size_t k = parse_count(tok.substr(0, dot), line_no, "edge index");
        const std::string_view tag = tok.substr(dot + 1);
        if (tag != "0" && tag != "1") throw ParseError(line_no, "end tag must be 0 or 1 in '" + std::string(tok) + "'");
        if (k >= *edges) throw ParseError(line_no, "unknown edge index " + std::to_string(k));
        const std::uint8_t end = tag == "1" ? 1 : 0;
        const std::size_t slot = 2 * k + end;
        if (end_line[slot] != 0)
          throw ParseError(line_no, "end " + std::string(tok) + " already declared on line " +
                                        std::to_string(end_line[slot]));
        end_line[slot] = line_no;
        rotations[v].push_back(EdgeEnd{static_cast<EdgeIndex>(k), end});
      }
    } else if (key == "twist") {
      require_sizes("twist");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::size_t k = parse_count(tokens[i], line_no, "edge index");
        if (k >= *edges) throw ParseError(line_no, "unknown edge index " + std::to_string(k) + " in twist");
        twisted[k] = true;
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  // A trailing newline does not start another line.
  const std::size_t last = !text.empty() && text.back() == '\n' ? line_no - 1 : line_no;
  if (!have_header) throw ParseError(last, "missing header 'ribbongraph 1'");
  if (!vertices || !edges) throw ParseError(last, "missing 'vertices' or 'edges' line");
  for (std::size_t v = 0; v < *vertices; ++v)
    if (!rotation_seen[v]) throw ParseError(last, "no rotation line for vertex " + std::to_string(v));
  for (std::size_t slot = 0; slot < end_line.size(); ++slot)
    if (end_line[slot] == 0)
      throw ParseError(last, "end " + std::to_string(slot / 2) + "." + std::to_string(slot % 2) + " never declared");
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

std::string encode(const RibbonGraph& g) {
  std::ostringstream out;
  out << "ribbongraph 1\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "edges " << g.edge_count() << "\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v << ":";
    for (const EdgeEnd& h : canonical_rotation(g.rotation(v)))
      out << ' ' << h.edge << '.' << static_cast<int>(h.end);
    out << "\n";
  }
  bool any = false;
  for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
    if (!g.twisted(k)) continue;
    out << (any ? " " : "twist ") << k;
    any = true;
  }
  if (any) out << "\n";
  return out.str();
}

RibbonGraph read_ribbon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode(buf.str());
}

void write_ribbon_file(const std::string& path, const RibbonGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << encode(g);
}

// ------------------------------------------------------------------- edits

RibbonGraph delete_edge(const RibbonGraph& g, EdgeIndex k) {
  if (k >= g.edge_count()) throw PreconditionError("delete_edge: edge index out of range");
  auto rotations = g.rotations();
  for (auto& rot : rotations) {
    std::erase_if(rot, [k](const EdgeEnd& h) { return h.edge == k; });
    for (auto& h : rot)
      if (h.edge > k) --h.edge;
  }
  auto twisted = g.twists();
  twisted.erase(twisted.begin() + k);
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

RibbonGraph add_parallel_edge(const RibbonGraph& g, EdgeIndex k) {
  if (k >= g.edge_count()) throw PreconditionError("add_parallel_edge: edge index out of range");
  const auto fresh = static_cast<EdgeIndex>(g.edge_count());
  auto rotations = g.rotations();
  // Untwisted: the side of k following end 0 meets the side preceding end 1,
  // so the copy goes after k.0 and before k.1. Twisted: after both ends.
  const bool tw = g.twisted(k);
  auto place = [&](std::uint8_t end, bool after) {
    auto& rot = rotations[g.endpoint(k, end)];
    auto it = std::find(rot.begin(), rot.end(), EdgeEnd{k, end});
    if (after) ++it;
    rot.insert(it, EdgeEnd{fresh, end});
  };
  place(0, true);
  place(1, tw);
  auto twisted = g.twists();
  twisted.push_back(tw);
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

RibbonGraph subdivide_edge(const RibbonGraph& g, EdgeIndex k) {
  if (k >= g.edge_count()) throw PreconditionError("subdivide_edge: edge index out of range");
  const auto fresh = static_cast<EdgeIndex>(g.edge_count());
  auto rotations = g.rotations();
  auto& far = rotations[g.endpoint(k, 1)];
  *std::find(far.begin(), far.end(), EdgeEnd{k, 1}) = EdgeEnd{fresh, 1};
  rotations.push_back({EdgeEnd{k, 1}, EdgeEnd{fresh, 0}});
  auto twisted = g.twists();
  twisted.push_back(false);
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

RibbonGraph insert_edge(const RibbonGraph& g, Corner a, Corner b, bool twisted) {
  auto check = [&](Corner c) {
    if (c.vertex >= g.vertex_count()) throw PreconditionError("insert_edge: vertex out of range");
    const std::size_t gaps = std::max<std::size_t>(1, g.degree(c.vertex));
    if (c.gap >= gaps) throw PreconditionError("insert_edge: corner gap out of range");
  };
  check(a);
  check(b);
  const auto fresh = static_cast<EdgeIndex>(g.edge_count());
  auto rotations = g.rotations();
  const EdgeEnd end0{fresh, 0};
  const EdgeEnd end1{fresh, 1};
  if (a.vertex != b.vertex) {
    auto& ra = rotations[a.vertex];
    ra.insert(ra.begin() + static_cast<std::ptrdiff_t>(std::min(a.gap + 1, ra.size())), end0);
    auto& rb = rotations[b.vertex];
    rb.insert(rb.begin() + static_cast<std::ptrdiff_t>(std::min(b.gap + 1, rb.size())), end1);
  } else {
    auto& rot = rotations[a.vertex];
    const auto at = [&](std::size_t gap) {
      return rot.begin() + static_cast<std::ptrdiff_t>(std::min(gap + 1, rot.size()));
    };
    if (a.gap == b.gap) {
      auto it = rot.insert(at(a.gap), end1);
      rot.insert(it, end0);
    } else if (a.gap < b.gap) {
      rot.insert(at(b.gap), end1);
      rot.insert(at(a.gap), end0);
    } else {
      rot.insert(at(a.gap), end0);
      rot.insert(at(b.gap), end1);
    }
  }
  auto tw = g.twists();
  tw.push_back(twisted);
  return RibbonGraph(std::move(rotations), std::move(tw));
}

namespace {

// g2's edges shifted by `edge_offset`.
std::vector<std::vector<EdgeEnd>> shifted_rotations(const RibbonGraph& g, EdgeIndex edge_offset) {
  auto rotations = g.rotations();
  for (auto& rot : rotations)
    for (auto& h : rot) h.edge += edge_offset;
  return rotations;
}

}  // namespace

RibbonGraph join(const RibbonGraph& g1, VertexIndex v1, std::size_t slot1,
                 const RibbonGraph& g2, VertexIndex v2, std::size_t slot2) {
  if (v1 >= g1.vertex_count() || v2 >= g2.vertex_count()) throw PreconditionError("join: vertex out of range");
  if (slot1 >= std::max<std::size_t>(1, g1.degree(v1)) || slot2 >= std::max<std::size_t>(1, g2.degree(v2)))
    throw PreconditionError("join: slot out of range");
  const auto offset = static_cast<EdgeIndex>(g1.edge_count());
  auto rotations = g1.rotations();
  auto second = shifted_rotations(g2, offset);

  // Open g2's rotation at slot2: it starts just after position slot2.
  std::vector<EdgeEnd> opened;
  const auto& r2 = second[v2];
  for (std::size_t i = 0; i < r2.size(); ++i) opened.push_back(r2[(slot2 + 1 + i) % r2.size()]);
  auto& r1 = rotations[v1];
  r1.insert(r1.begin() + static_cast<std::ptrdiff_t>(std::min(slot1 + 1, r1.size())), opened.begin(), opened.end());

  for (VertexIndex v = 0; v < second.size(); ++v)
    if (v != v2) rotations.push_back(std::move(second[v]));
  auto twisted = g1.twists();
  twisted.insert(twisted.end(), g2.twists().begin(), g2.twists().end());
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

RibbonGraph disjoint_union(const RibbonGraph& g1, const RibbonGraph& g2) {
  auto rotations = g1.rotations();
  for (auto& rot : shifted_rotations(g2, static_cast<EdgeIndex>(g1.edge_count()))) rotations.push_back(std::move(rot));
  auto twisted = g1.twists();
  twisted.insert(twisted.end(), g2.twists().begin(), g2.twists().end());
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

RibbonGraph spanning_subgraph(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.width() != g.edge_count()) throw PreconditionError("subset width does not match edge count");
  std::vector<EdgeIndex> relabel(g.edge_count(), 0);
  std::vector<bool> twisted;
  for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
    if (!a.contains(k)) continue;
    relabel[k] = static_cast<EdgeIndex>(twisted.size());
    twisted.push_back(g.twisted(k));
  }
  std::vector<std::vector<EdgeEnd>> rotations(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (const EdgeEnd& h : g.rotation(v))
      if (a.contains(h.edge)) rotations[v].push_back(EdgeEnd{relabel[h.edge], h.end});
  return RibbonGraph(std::move(rotations), std::move(twisted));
}

std::size_t components_of(const RibbonGraph& g, const EdgeSubset& a) {
  detail::UnionFind uf(g.vertex_count());
  for (EdgeIndex k = 0; k < g.edge_count(); ++k)
    if (a.contains(k)) uf.unite(g.endpoint(k, 0), g.endpoint(k, 1));
  return uf.set_count();
}

}  // namespace ribbon

