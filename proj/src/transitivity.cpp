#include "cvt/transitivity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cvt/perm_group.hpp"

namespace cvt {

std::string to_string(LocalType type) {
  switch (type) {
    case LocalType::Trivial: return "trivial";
    case LocalType::Z2Fix1: return "Z2^[3]";
    case LocalType::Z3: return "Z3";
    case LocalType::S3: return "S3";
    case LocalType::Z2xZ2: return "Z2xZ2";
    case LocalType::Z4: return "Z4";
    case LocalType::D4: return "D4";
    case LocalType::Other: return "other";
  }
  return "other";
}

void require_automorphisms(const Graph& g, std::span<const Permutation> gens) {
  for (const auto& p : gens) {
    if (!g.is_automorphism(p)) throw std::invalid_argument("not an automorphism");
  }
}

bool is_vertex_transitive(const Graph& g, std::span<const Permutation> gens) {
  require_automorphisms(g, gens);
  if (g.order() <= 1) return true;
  return orbit_count(gens, g.order()) == 1;
}

namespace {

std::vector<int> arc_offsets(const Graph& g) {
  std::vector<int> offset(g.order() + 1, 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    offset[v + 1] = offset[v] + static_cast<int>(g.degree(static_cast<int>(v)));
  }
  return offset;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<int> arc_orbits(const Graph& g, std::span<const Permutation> gens) {
  require_automorphisms(g, gens);
  const auto offset = arc_offsets(g);
  const int arcs = offset.back();
  std::vector<int> parent(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : gens) {
    for (int u = 0; u < static_cast<int>(g.order()); ++u) {
      const auto& nb = g.neighbors(u);
      const int pu = p[u];
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const int image = offset[pu] + g.neighbor_index(pu, p[nb[k]]);
        const int a = find_root(parent, offset[u] + static_cast<int>(k));
        const int b = find_root(parent, image);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (int a = 0; a < arcs; ++a) parent[a] = find_root(parent, a);
  return parent;
}

std::size_t arc_orbit_count_any(const Graph& g, std::span<const Permutation> gens) {
  const auto orbit = arc_orbits(g, gens);
  std::size_t count = 0;
  for (std::size_t a = 0; a < orbit.size(); ++a) {
    if (orbit[a] == static_cast<int>(a)) ++count;
  }
  return count;
}

int arc_orbit_count(const Graph& g, std::span<const Permutation> gens) {
  if (!g.is_regular(3)) throw std::invalid_argument("arc_orbit_count needs a cubic graph");
  if (!is_vertex_transitive(g, gens)) throw std::invalid_argument("group is not vertex-transitive");
  return static_cast<int>(arc_orbit_count_any(g, gens));
}

LocalAction local_action(const Graph& g, std::span<const Permutation> gens, int v) {
  const std::size_t k = g.degree(v);
  if (!g.is_regular(k) || (k != 3 && k != 4)) {
    throw std::invalid_argument("local_action needs valency 3 or 4");
  }
  if (!is_vertex_transitive(g, gens)) throw std::invalid_argument("group is not vertex-transitive");

  PermGroup group(g.order(), std::vector<Permutation>(gens.begin(), gens.end()), {v});
  LocalAction out;
  out.stabilizer_generators = group.stabilizer_generators(1);
  out.stabilizer_order = group.order() / g.order();

  const auto& nb = g.neighbors(v);
  for (const auto& s : out.stabilizer_generators) {
    std::vector<int> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = g.neighbor_index(v, s[nb[i]]);
    Permutation induced(std::move(images));
    if (!induced.is_identity()) out.induced_generators.push_back(std::move(induced));
  }
  PermGroup induced_group(k, out.induced_generators);
  out.induced_order = induced_group.order();
  const bool transitive = out.induced_generators.empty() ? false : induced_group.is_transitive();

  switch (out.induced_order) {
    case 1: out.type = LocalType::Trivial; return out;
    case 2: out.type = k == 3 ? LocalType::Z2Fix1 : LocalType::Other; return out;
    case 3: out.type = k == 3 ? LocalType::Z3 : LocalType::Other; return out;
    case 6: out.type = k == 3 ? LocalType::S3 : LocalType::Other; return out;
    case 8: out.type = LocalType::D4; return out;
    case 4: {
      if (!transitive) {
        out.type = LocalType::Other;
        return out;
      }
      bool has_four_cycle = false;
      for (const auto& p : induced_group.elements()) {
        if (p.order() == 4) has_four_cycle = true;
      }
      out.type = has_four_cycle ? LocalType::Z4 : LocalType::Z2xZ2;
      return out;
    }
    default: out.type = LocalType::Other; return out;
  }
}

bool is_dihedral_group(std::span<const Permutation> elements) {
  const std::size_t n = elements.size();
  if (n < 2 || n % 2 != 0) return false;
  const std::uint64_t k = n / 2;
  for (const auto& c : elements) {
    if (c.order() != k) continue;
    std::unordered_set<Permutation, PermutationHash> cyclic;
    Permutation power = Permutation::identity(c.degree());
    for (std::uint64_t i = 0; i < k; ++i) {
      cyclic.insert(power);
      power = power * c;
    }
    const Permutation c_inv = c.inverse();
    for (const auto& t : elements) {
      if (t.order() != 2 || cyclic.contains(t)) continue;
      if (t * c * t == c_inv) return true;
    }
  }
  return false;
}

namespace {

class RegularSearch {
 public:
  RegularSearch(std::size_t n, const PermGroup& group) : n_(n), group_(group) {
    stabilizer_ = PermGroup(n, group.stabilizer_generators(1)).elements();
  }

  RegularSubgroupResult run() {
    std::vector<Permutation> start{Permutation::identity(n_)};
    search(start, {});
    return std::move(result_);
  }

 private:
  void search(const std::vector<Permutation>& subgroup, const std::vector<Permutation>& gens) {
    if (done_) return;
    if (subgroup.size() == n_) {
      ++result_.regular_subgroups_seen;
      if (!result_.regular_subgroup) result_.regular_subgroup = gens;
      if (is_dihedral_group(subgroup)) {
        result_.dihedral = true;
        result_.regular_subgroup = gens;
        done_ = true;
      }
      return;
    }
    std::vector<char> covered(n_, 0);
    for (const auto& h : subgroup) covered[h[0]] = 1;
    int target = 0;
    while (covered[target]) ++target;
    const auto t = *group_.transversal_element(target);
    for (const auto& s : stabilizer_) {
      Permutation x = s * t;
      if (x.fixed_points() != 0 || n_ % x.order() != 0) continue;
      auto next = closure(subgroup, gens, x);
      if (!next) continue;
      if (!seen_.insert(key(*next)).second) continue;
      auto next_gens = gens;
      next_gens.push_back(x);
      search(*next, next_gens);
      if (done_) return;
    }
  }

  // Closure of <gens, x>, or nothing if it stops being semiregular.
  std::optional<std::vector<Permutation>> closure(const std::vector<Permutation>& subgroup,
                                                  std::vector<Permutation> gens,
                                                  const Permutation& x) const {
    gens.push_back(x);
    std::vector<Permutation> elements = subgroup;
    std::vector<char> image_used(n_, 0);
    for (const auto& h : elements) image_used[h[0]] = 1;
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& s : gens) {
        Permutation e = elements[head] * s;
        const int image = e[0];
        if (image_used[image]) {
          // Semiregular: an element is determined by the image of 0.
          const auto it = std::find_if(elements.begin(), elements.end(),
                                       [&](const Permutation& h) { return h[0] == image; });
          if (*it != e) return std::nullopt;
          continue;
        }
        if (!e.is_identity() && e.fixed_points() != 0) return std::nullopt;
        image_used[image] = 1;
        elements.push_back(std::move(e));
        if (elements.size() > n_) return std::nullopt;
      }
    }
    if (n_ % elements.size() != 0) return std::nullopt;
    return elements;
  }

  std::vector<int> key(const std::vector<Permutation>& elements) const {
    std::vector<const Permutation*> by_image(n_, nullptr);
    for (const auto& h : elements) by_image[h[0]] = &h;
    std::vector<int> out;
    out.reserve(elements.size() * n_);
    for (const auto* h : by_image) {
      if (h) out.insert(out.end(), h->images().begin(), h->images().end());
    }
    return out;
  }

  std::size_t n_;
  const PermGroup& group_;
  std::vector<Permutation> stabilizer_;
  std::set<std::vector<int>> seen_;
  RegularSubgroupResult result_;
  bool done_ = false;
};

}  // namespace

RegularSubgroupResult regular_subgroup_search(const Graph& g, std::span<const Permutation> gens,
                                              std::uint64_t cap) {
  require_automorphisms(g, gens);
  RegularSubgroupResult out;
  const std::size_t n = g.order();
  if (n == 0) return out;
  if (n == 1) {
    out.vertex_transitive = true;
    out.regular_subgroup = std::vector<Permutation>{};
    out.regular_subgroups_seen = 1;
    return out;
  }
  if (orbit_count(gens, n) != 1) return out;
  out.vertex_transitive = true;
  PermGroup group(n, std::vector<Permutation>(gens.begin(), gens.end()), {0});
  if (group.order() > cap) throw LimitExceeded("automorphism group too large for regular subgroup search");
  auto result = RegularSearch(n, group).run();
  result.vertex_transitive = true;
  return result;
}

RegularSubgroupResult regular_subgroup_search(const Graph& g, std::uint64_t cap) {
  const auto aut = graph_automorphisms(g);
  return regular_subgroup_search(g, aut.generators, cap);
}

ClassificationRecord classify(const Graph& g) {
  if (!g.is_regular(3)) throw std::invalid_argument("classify needs a cubic graph");
  if (!g.is_connected()) throw std::invalid_argument("classify needs a connected graph");
  auto lab = canonical_labeling(g);
  const auto& gens = lab.automorphisms;
  if (orbit_count(gens, g.order()) != 1) throw std::invalid_argument("graph is not vertex-transitive");

  ClassificationRecord r;
  r.canonical = lab.form;
  r.order = g.order();
  r.aut_order = PermGroup(g.order(), gens).order();
  r.m_full = arc_orbit_count(g, gens);
  r.is_grr = r.aut_order == g.order();
  auto regular = regular_subgroup_search(g, gens);
  r.is_cayley = regular.regular_subgroup.has_value();
  r.is_dihedrant = regular.dihedral;
  r.girth = girth(g).value_or(0);
  r.diameter = diameter(g);
  r.hamiltonian = has_hamilton_cycle(g);
  return r;
}

}  // namespace cvt
