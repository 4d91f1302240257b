#include "cvt/merge_split.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cvt/canonical.hpp"
#include "cvt/perm_group.hpp"
#include "cvt/transitivity.hpp"

namespace cvt {

namespace {

constexpr std::array<std::array<int, 4>, 3> kMate{{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};

std::string ladder_name(LadderKind kind) {
  return kind == LadderKind::Circular ? "circular" : "moebius";
}

// Pairing index after relabelling positions by q (position a -> q[a]).
int pairing_image(int index, std::span<const int> q) {
  std::array<int, 4> mate{};
  for (int a = 0; a < 4; ++a) mate[q[a]] = q[kMate[index][a]];
  return mate[0] - 1;
}

// Pairing at p(v) that p carries the pairing `index` at v onto.
int map_pairing(const Graph& g, int v, int index, const Permutation& p) {
  const auto& nb = g.neighbors(v);
  std::array<int, 4> q{};
  for (int a = 0; a < 4; ++a) q[a] = g.neighbor_index(p[v], p[nb[a]]);
  return pairing_image(index, q);
}

// Follows the edge pairing from every edge; nullopt (with a reason) when a
// trail revisits a vertex.
std::optional<CycleDecomposition> trace_pairing(const Graph& g, const std::vector<int>& pairing,
                                                std::string* why) {
  const int n = static_cast<int>(g.order());
  std::vector<std::array<char, 4>> used(n, {0, 0, 0, 0});
  CycleDecomposition out;
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < 4; ++k) {
      if (used[u][k]) continue;
      std::vector<int> cyc{u};
      std::vector<char> on(n, 0);
      on[u] = 1;
      int prev = u;
      int cur = g.neighbors(u)[k];
      used[u][k] = 1;
      while (true) {
        const int in = g.neighbor_index(cur, prev);
        used[cur][in] = 1;
        const int out_pos = kMate[pairing[cur]][in];
        if (cur == u) {
          if (out_pos == k) break;
          if (why) *why = "trail through vertex " + std::to_string(u) + " is not a simple cycle";
          return std::nullopt;
        }
        if (on[cur]) {
          if (why) *why = "trail through vertex " + std::to_string(cur) + " is not a simple cycle";
          return std::nullopt;
        }
        on[cur] = 1;
        cyc.push_back(cur);
        used[cur][out_pos] = 1;
        prev = cur;
        cur = g.neighbors(cur)[out_pos];
      }
      out.cycles.push_back(std::move(cyc));
    }
  }
  return normalize(std::move(out));
}

void require_tetravalent(const Graph& g) {
  if (!g.is_regular(4) || !g.is_connected()) {
    throw std::invalid_argument("needs a connected tetravalent graph");
  }
}

std::map<std::vector<int>, int> cycle_index(const CycleDecomposition& c) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    index.emplace(normalize_cycle(c.cycles[i]), static_cast<int>(i));
  }
  return index;
}

}  // namespace

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  if (cycle.empty()) return cycle;
  const auto low = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), low, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

CycleDecomposition normalize(CycleDecomposition c) {
  for (auto& cyc : c.cycles) cyc = normalize_cycle(std::move(cyc));
  std::sort(c.cycles.begin(), c.cycles.end());
  return c;
}

DecompositionCheck validate_cycle_decomposition(const Graph& host, const CycleDecomposition& c) {
  const int n = static_cast<int>(host.order());
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const auto& cyc = c.cycles[i];
    const std::string where = "cycle " + std::to_string(i) + ": ";
    if (cyc.size() < 3) return {false, where + "fewer than 3 vertices"};
    std::set<int> distinct;
    for (int v : cyc) {
      if (v < 0 || v >= n) return {false, where + "vertex " + std::to_string(v) + " out of range"};
      if (!distinct.insert(v).second) return {false, where + "repeats vertex " + std::to_string(v)};
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      const int a = cyc[j];
      const int b = cyc[(j + 1) % cyc.size()];
      if (!host.adjacent(a, b)) {
        return {false, where + std::to_string(a) + "-" + std::to_string(b) + " is not an edge"};
      }
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
        return {false, where + "edge " + std::to_string(a) + "-" + std::to_string(b) +
                           " already covered"};
      }
    }
  }
  if (seen.size() != host.edge_count()) {
    for (const auto& e : host.edges()) {
      if (!seen.contains(e)) {
        return {false, "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                           " not covered"};
      }
    }
  }
  return {true, {}};
}

std::vector<int> cycle_permutation(const CycleDecomposition& c, const Permutation& p) {
  const auto index = cycle_index(c);
  std::vector<int> out(c.cycles.size());
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    std::vector<int> image;
    image.reserve(c.cycles[i].size());
    for (int v : c.cycles[i]) image.push_back(p[v]);
    const auto it = index.find(normalize_cycle(std::move(image)));
    if (it == index.end()) throw std::invalid_argument("permutation does not preserve the decomposition");
    out[i] = it->second;
  }
  return out;
}

bool preserves_decomposition(const CycleDecomposition& c, std::span<const Permutation> gens) {
  try {
    for (const auto& p : gens) cycle_permutation(c, p);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

std::string write_cycles(const CycleDecomposition& c, std::size_t host_order) {
  std::ostringstream os;
  os << "cycles " << c.cycles.size() << " over " << host_order << '\n';
  for (const auto& cyc : c.cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) os << (j ? " " : "") << cyc[j];
    os << '\n';
  }
  return os.str();
}

std::pair<CycleDecomposition, std::size_t> parse_cycles(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::size_t expected = 0;
  std::size_t order = 0;
  bool header = false;
  CycleDecomposition out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    const auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    if (!header) {
      std::string word, over;
      long long k = -1, n = -1;
      if (!(ls >> word >> k >> over >> n) || word != "cycles" || over != "over" || k < 0 || n < 0) {
        fail("expected 'cycles <k> over <n>'");
      }
      std::string rest;
      if (ls >> rest) fail("trailing text after header");
      expected = static_cast<std::size_t>(k);
      order = static_cast<std::size_t>(n);
      header = true;
      continue;
    }
    std::vector<int> cyc;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        fail("bad vertex '" + tok + "'");
      }
      if (used != tok.size() || v < 0 || v >= static_cast<long long>(order)) {
        fail("bad vertex '" + tok + "'");
      }
      cyc.push_back(static_cast<int>(v));
    }
    out.cycles.push_back(std::move(cyc));
  }
  if (!header) throw std::invalid_argument("missing 'cycles <k> over <n>' header");
  if (out.cycles.size() != expected) {
    throw std::invalid_argument("header announces " + std::to_string(expected) + " cycles, found " +
                                std::to_string(out.cycles.size()));
  }
  return {std::move(out), order};
}

std::vector<int> partner_map(const Graph& g, std::span<const Permutation> gens) {
  if (!g.is_regular(3) || !g.is_connected()) {
    throw std::invalid_argument("partner map needs a connected cubic graph");
  }
  const auto la = local_action(g, gens, 0);
  if (la.type != LocalType::Z2Fix1) {
    throw std::invalid_argument("group is not locally Z2^[3] (local type " + to_string(la.type) + ")");
  }
  const auto& q = la.induced_generators.front();
  int fixed = 0;
  while (q[fixed] != fixed) ++fixed;
  const int partner0 = g.neighbors(0)[fixed];

  PermGroup group(g.order(), std::vector<Permutation>(gens.begin(), gens.end()), {0});
  std::vector<int> partner(g.order());
  for (int w = 0; w < static_cast<int>(g.order()); ++w) {
    partner[w] = (*group.transversal_element(w))[partner0];
  }
  for (int w = 0; w < static_cast<int>(g.order()); ++w) {
    if (partner[partner[w]] != w) throw std::logic_error("partner map is not an involution");
  }
  return partner;
}

DegeneratePairError::DegeneratePairError(LadderKind kind, int n)
    : std::invalid_argument("degenerate pair: " + ladder_name(kind) + " ladder of order " +
                            std::to_string(2 * n)),
      kind_(kind),
      n_(n) {}

namespace {

Degeneracy degeneracy_from_partners(const Graph& g, const std::vector<int>& partner) {
  std::map<std::pair<int, int>, int> between;
  for (const auto& [u, v] : g.edges()) {
    if (partner[u] == v) continue;
    const int a = std::min(u, partner[u]);
    const int b = std::min(v, partner[v]);
    ++between[{std::min(a, b), std::max(a, b)}];
  }
  Degeneracy d;
  d.degenerate = std::any_of(between.begin(), between.end(), [](const auto& kv) { return kv.second > 1; });
  if (!d.degenerate) return d;
  const int half = static_cast<int>(g.order() / 2);
  const auto form = canonical_form(g);
  if (half >= 3 && canonical_form(ladder(half, LadderKind::Circular)) == form) {
    d.kind = LadderKind::Circular;
  } else if (half >= 2 && canonical_form(ladder(half, LadderKind::Moebius)) == form) {
    d.kind = LadderKind::Moebius;
  } else {
    throw std::logic_error("degenerate pair is not a ladder");
  }
  d.ladder_n = half;
  return d;
}

}  // namespace

Degeneracy is_degenerate(const Graph& g, std::span<const Permutation> gens) {
  return degeneracy_from_partners(g, partner_map(g, gens));
}

MergeResult merge(const Graph& g, std::span<const Permutation> gens) {
  const auto partner = partner_map(g, gens);
  const auto deg = degeneracy_from_partners(g, partner);
  if (deg.degenerate) throw DegeneratePairError(*deg.kind, deg.ladder_n);

  const int n = static_cast<int>(g.order());
  MergeResult r;
  r.pair_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v < partner[v]) {
      r.pair_of[v] = r.pair_of[partner[v]] = static_cast<int>(r.matching.size());
      r.matching.emplace_back(v, partner[v]);
    }
  }
  const int half = static_cast<int>(r.matching.size());

  std::vector<std::pair<int, int>> qedges;
  for (const auto& [u, v] : g.edges()) {
    if (partner[u] != v) qedges.emplace_back(r.pair_of[u], r.pair_of[v]);
  }
  r.quotient = Graph::from_edges(half, qedges);

  // The non-matching edges form a 2-factor; each of its cycles maps to a cycle.
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int prev = -1;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      cyc.push_back(r.pair_of[cur]);
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (w != partner[cur] && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    r.decomposition.cycles.push_back(std::move(cyc));
  }
  r.decomposition = normalize(std::move(r.decomposition));

  for (const auto& p : gens) {
    std::vector<int> images(half);
    for (int i = 0; i < half; ++i) {
      const auto [a, b] = r.matching[i];
      images[i] = r.pair_of[p[a]];
      if (r.pair_of[p[b]] != images[i]) throw ContractViolation("group does not preserve the matching");
    }
    r.induced_group.emplace_back(std::move(images));
  }

  if (!r.quotient.is_regular(4)) throw ContractViolation("quotient is not tetravalent");
  if (!r.quotient.is_connected()) throw ContractViolation("quotient is not connected");
  const auto check = validate_cycle_decomposition(r.quotient, r.decomposition);
  if (!check.valid) throw ContractViolation("decomposition invalid: " + check.diagnostic);
  if (!preserves_decomposition(r.decomposition, r.induced_group)) {
    throw ContractViolation("induced group does not preserve the decomposition");
  }
  if (arc_orbit_count_any(g, gens) != 2) throw ContractViolation("non-matching edges are not one orbit");
  const std::vector<Permutation> gvec(gens.begin(), gens.end());
  if (PermGroup(g.order(), gvec).order() != PermGroup(half, r.induced_group).order()) {
    throw ContractViolation("induced action is not faithful");
  }
  if (arc_orbit_count_any(r.quotient, r.induced_group) != 1) {
    throw ContractViolation("induced group is not arc-transitive on the quotient");
  }
  return r;
}

SplitResult split(const Graph& lambda, const CycleDecomposition& c, std::span<const Permutation> gens) {
  const auto check = validate_cycle_decomposition(lambda, c);
  if (!check.valid) throw std::invalid_argument("invalid decomposition: " + check.diagnostic);

  SplitResult r;
  std::vector<std::vector<int>> through(lambda.order());
  for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
    for (int v : c.cycles[ci]) {
      r.vertices.emplace_back(v, static_cast<int>(ci));
      through[v].push_back(static_cast<int>(ci));
    }
  }
  for (std::size_t v = 0; v < lambda.order(); ++v) {
    if (through[v].size() != 2) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " lies on " + std::to_string(through[v].size()) +
                                  " cycles, expected 2");
    }
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  std::map<std::pair<int, int>, int> id;
  for (std::size_t i = 0; i < r.vertices.size(); ++i) id.emplace(r.vertices[i], static_cast<int>(i));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t v = 0; v < lambda.order(); ++v) {
    const auto& cs = through[v];
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        edges.emplace_back(id.at({static_cast<int>(v), cs[a]}), id.at({static_cast<int>(v), cs[b]}));
      }
    }
  }
  for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
    const auto& cyc = c.cycles[ci];
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      const int a = cyc[j];
      const int b = cyc[(j + 1) % cyc.size()];
      edges.emplace_back(id.at({a, static_cast<int>(ci)}), id.at({b, static_cast<int>(ci)}));
    }
  }
  r.graph = Graph::from_edges(r.vertices.size(), edges);

  for (const auto& p : gens) {
    if (!lambda.is_automorphism(p)) throw std::invalid_argument("not an automorphism");
    const auto cp = cycle_permutation(c, p);
    std::vector<int> images(r.vertices.size());
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
      const auto [v, ci] = r.vertices[i];
      images[i] = id.at({p[v], cp[ci]});
    }
    r.inherited.emplace_back(std::move(images));
  }
  return r;
}

std::array<std::array<int, 2>, 2> pairing_by_index(int index) {
  if (index < 0 || index > 2) throw std::out_of_range("pairing index must be 0, 1 or 2");
  std::array<std::array<int, 2>, 2> out{};
  out[0] = {0, index + 1};
  int k = 0;
  for (int a = 1; a < 4; ++a) {
    if (a != index + 1) out[1][k++] = a;
  }
  return out;
}

CycleDecomposition decomposition_from_root_pairing(const Graph& lambda, std::span<const Permutation> gens,
                                                   int root, int pairing_index) {
  require_tetravalent(lambda);
  require_automorphisms(lambda, gens);
  if (pairing_index < 0 || pairing_index > 2) throw std::out_of_range("pairing index must be 0, 1 or 2");
  const int n = static_cast<int>(lambda.order());
  if (root < 0 || root >= n) throw std::out_of_range("root out of range");
  if (orbit_count(gens, lambda.order()) != 1) throw std::invalid_argument("group is not vertex-transitive");

  PermGroup group(lambda.order(), std::vector<Permutation>(gens.begin(), gens.end()), {root});
  for (const auto& s : group.stabilizer_generators(1)) {
    if (map_pairing(lambda, root, pairing_index, s) != pairing_index) {
      throw std::invalid_argument("pairing is not preserved by the vertex stabiliser");
    }
  }
  std::vector<int> pairing(n);
  for (int w = 0; w < n; ++w) pairing[w] = map_pairing(lambda, root, pairing_index, *group.transversal_element(w));
  std::string why;
  auto out = trace_pairing(lambda, pairing, &why);
  if (!out) throw std::invalid_argument(why);
  return *out;
}

CycleDecomposition local_block_decomposition(const Graph& lambda, std::span<const Permutation> gens) {
  require_tetravalent(lambda);
  if (arc_orbit_count_any(lambda, gens) != 1) throw std::invalid_argument("group is not arc-transitive");
  const auto la = local_action(lambda, gens, 0);
  if (la.type != LocalType::Z4 && la.type != LocalType::D4) {
    throw std::invalid_argument("local type " + to_string(la.type) + " has no unique edge pairing");
  }
  int found = -1;
  for (int i = 0; i < 3; ++i) {
    bool fixed = true;
    for (const auto& q : la.induced_generators) {
      if (pairing_image(i, q.images()) != i) fixed = false;
    }
    if (fixed) {
      if (found >= 0) throw std::logic_error("edge pairing is not unique");
      found = i;
    }
  }
  if (found < 0) throw std::logic_error("no invariant edge pairing");
  return decomposition_from_root_pairing(lambda, gens, 0, found);
}

namespace {

// Colours: 0 host vertices, 1 edges, 2 cycles.
std::pair<Graph, std::vector<int>> incidence_structure(const Graph& lambda, const CycleDecomposition& c) {
  const int n = static_cast<int>(lambda.order());
  const auto edges = lambda.edges();
  std::map<std::pair<int, int>, int> edge_id;
  const int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) edge_id.emplace(edges[i], n + i);
  std::vector<std::pair<int, int>> links;
  for (int i = 0; i < m; ++i) {
    links.emplace_back(edges[i].first, n + i);
    links.emplace_back(edges[i].second, n + i);
  }
  for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
    const auto& cyc = c.cycles[ci];
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      const int a = cyc[j];
      const int b = cyc[(j + 1) % cyc.size()];
      links.emplace_back(edge_id.at({std::min(a, b), std::max(a, b)}), n + m + static_cast<int>(ci));
    }
  }
  const std::size_t total = static_cast<std::size_t>(n + m) + c.cycles.size();
  std::vector<int> colors(total, 2);
  std::fill(colors.begin(), colors.begin() + n, 0);
  std::fill(colors.begin() + n, colors.begin() + n + m, 1);
  return {Graph::from_edges(total, links), std::move(colors)};
}

class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& g, std::vector<std::vector<int>> candidates, std::vector<int> order)
      : g_(g), n_(static_cast<int>(g.order())), cand_(std::move(candidates)), order_(std::move(order)) {
    pairing_.assign(n_, -1);
  }

  template <typename Leaf>
  void run(int root, int root_pairing, Leaf&& leaf) {
    pairing_.assign(n_, -1);
    length_ = -1;
    pairing_[root] = root_pairing;
    if (!consistent(root)) return;
    rec(1, leaf);
  }

 private:
  template <typename Leaf>
  void rec(std::size_t depth, Leaf& leaf) {
    if (depth == order_.size()) {
      leaf(pairing_);
      return;
    }
    const int w = order_[depth];
    const int saved = length_;
    for (int idx : cand_[w]) {
      pairing_[w] = idx;
      if (consistent(w)) rec(depth + 1, leaf);
      length_ = saved;
    }
    pairing_[w] = -1;
  }

  // Walks from w along position k while vertices are paired. Returns the
  // walk (starting with w) and whether it closed up at w.
  bool walk(int w, int k, std::vector<int>& verts, bool& closed) const {
    verts.assign(1, w);
    closed = false;
    int prev = w;
    int cur = g_.neighbors(w)[k];
    while (true) {
      if (pairing_[cur] < 0) {
        verts.push_back(cur);
        return true;
      }
      const int in = g_.neighbor_index(cur, prev);
      const int out_pos = kMate[pairing_[cur]][in];
      if (cur == w) {
        if (out_pos != k) return false;
        closed = true;
        return true;
      }
      if (std::find(verts.begin(), verts.end(), cur) != verts.end()) return false;
      verts.push_back(cur);
      prev = cur;
      cur = g_.neighbors(cur)[out_pos];
    }
  }

  bool consistent(int w) {
    std::vector<int> a, b;
    for (int k = 0; k < 4; ++k) {
      bool closed = false;
      if (!walk(w, k, a, closed)) return false;
      if (closed) {
        const int len = static_cast<int>(a.size());
        if (len < 3) return false;
        if (length_ < 0) length_ = len;
        if (len != length_) return false;
        continue;
      }
      bool closed_b = false;
      if (!walk(w, kMate[pairing_[w]][k], b, closed_b)) return false;
      // a = w ... x (open end), b = w ... y (open end): interiors disjoint.
      const int edges = static_cast<int>(a.size() + b.size()) - 2;
      if (length_ > 0 && edges > length_) return false;
      for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        if (std::find(a.begin(), a.end(), b[i]) != a.end()) return false;
      }
      for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (std::find(b.begin(), b.end(), a[i]) != b.end()) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> cand_;
  std::vector<int> order_;
  std::vector<int> pairing_;
  int length_ = -1;
};

}  // namespace

std::vector<ArcTransitiveDecomposition> arc_transitive_decompositions(const Graph& lambda) {
  require_tetravalent(lambda);
  const int n = static_cast<int>(lambda.order());
  const auto aut = graph_automorphisms(lambda);
  if (arc_orbit_count_any(lambda, aut.generators) != 1) return {};

  PermGroup group(lambda.order(), aut.generators, {0});
  const auto stab = PermGroup(lambda.order(), group.stabilizer_generators(1)).elements();

  // Root pairings up to the stabiliser; keep those whose own stabiliser is
  // transitive on the neighbours of 0.
  std::vector<int> roots;
  std::set<int> covered;
  for (int i = 0; i < 3; ++i) {
    if (covered.contains(i)) continue;
    std::vector<Permutation> keep;
    for (const auto& s : stab) {
      const int j = map_pairing(lambda, 0, i, s);
      covered.insert(j);
      if (j == i) keep.push_back(s);
    }
    std::vector<Permutation> local;
    for (const auto& s : keep) {
      std::vector<int> q(4);
      for (int a = 0; a < 4; ++a) q[a] = lambda.neighbor_index(0, s[lambda.neighbors(0)[a]]);
      local.emplace_back(std::move(q));
    }
    if (orbit_count(local, 4) == 1) roots.push_back(i);
  }
  if (roots.empty()) return {};

  std::vector<Permutation> transversal(n);
  for (int w = 0; w < n; ++w) transversal[w] = *group.transversal_element(w);

  // Breadth-first order so that trails close early.
  const auto dist = bfs_distances(lambda, 0);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return dist[x] < dist[y]; });

  std::map<CanonicalForm, ArcTransitiveDecomposition> found;
  for (int root : roots) {
    std::vector<std::vector<int>> cand(n);
    for (int w = 0; w < n; ++w) {
      std::set<int> options;
      for (const auto& s : stab) options.insert(map_pairing(lambda, 0, root, s * transversal[w]));
      cand[w].assign(options.begin(), options.end());
    }
    DecompositionSearch search(lambda, std::move(cand), order);
    search.run(0, root, [&](const std::vector<int>& pairing) {
      auto dec = trace_pairing(lambda, pairing, nullptr);
      if (!dec) return;
      const auto [inc, colors] = incidence_structure(lambda, *dec);
      auto lab = canonical_labeling(inc, colors);
      if (found.contains(lab.form)) return;
      std::vector<Permutation> restricted;
      for (const auto& a : lab.automorphisms) {
        std::vector<int> images(a.images().begin(), a.images().begin() + n);
        Permutation p(std::move(images));
        if (!p.is_identity()) restricted.push_back(std::move(p));
      }
      if (arc_orbit_count_any(lambda, restricted) != 1) return;
      ArcTransitiveDecomposition entry;
      entry.decomposition = std::move(*dec);
      entry.stabilizer_order = PermGroup(lambda.order(), restricted).order();
      entry.stabilizer = std::move(restricted);
      found.emplace(lab.form, std::move(entry));
    });
  }
  std::vector<ArcTransitiveDecomposition> out;
  for (auto& [form, entry] : found) out.push_back(std::move(entry));
  return out;
}

}  // namespace cvt
