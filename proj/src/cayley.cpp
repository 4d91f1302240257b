#include "cvt/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cvt {

Graph cayley_graph(const FiniteGroup& g, std::span<const int> connection_set) {
  std::vector<int> s(connection_set.begin(), connection_set.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("connection set has repeated elements");
  }
  for (int x : s) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) throw std::invalid_argument("element out of range");
    if (x == g.identity()) throw std::invalid_argument("connection set contains the identity");
    if (!std::binary_search(s.begin(), s.end(), g.inv(x))) {
      throw std::invalid_argument("connection set is not inverse-closed");
    }
  }
  std::vector<std::vector<int>> adj(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (int x : s) adj[v].push_back(g.mul(x, static_cast<int>(v)));
  }
  return Graph::from_adjacency(std::move(adj));
}

std::vector<Permutation> right_regular_generators(const FiniteGroup& g) {
  std::vector<int> gens = g.generator_marks();
  if (gens.empty() || !g.generates(gens)) gens = small_generating_set(g);
  std::vector<Permutation> out;
  for (int h : gens) out.push_back(g.right_regular(h));
  return out;
}

std::vector<ConnectionSet> generating_connection_sets(const FiniteGroup& g) {
  std::vector<int> involutions = g.involutions();
  std::vector<int> pairs;  // x with x < x^-1
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (x != g.identity() && g.inv(x) > x) pairs.push_back(x);
  }
  std::vector<ConnectionSet> out;
  auto consider = [&](int a, int b, int c) {
    const int gens[3] = {a, b, c};
    if (!g.generates(gens)) return;
    ConnectionSet s{{a, b, c}};
    std::sort(s.elements.begin(), s.elements.end());
    out.push_back(s);
  };
  const std::size_t k = involutions.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) consider(involutions[i], involutions[j], involutions[l]);
  for (int t : involutions)
    for (int x : pairs) consider(t, x, g.inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

ConnectionSet apply_automorphism(const ConnectionSet& s, const Permutation& phi) {
  ConnectionSet out;
  for (int i = 0; i < 3; ++i) out.elements[i] = phi[s.elements[i]];
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<ConnectionSet> connection_set_orbits(const FiniteGroup& g, const AutomorphismGroup& aut) {
  const auto sets = generating_connection_sets(g);
  std::map<ConnectionSet, int> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i], static_cast<int>(i));
  std::vector<int> parent(sets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& phi : aut.generators) {
      const int j = index.at(apply_automorphism(sets[i], phi));
      const int a = find(static_cast<int>(i));
      const int b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Sets are sorted, so each root is the least member of its orbit.
  std::vector<ConnectionSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) out.push_back(sets[i]);
  }
  return out;
}

std::vector<ConnectionSet> connection_set_orbits(const FiniteGroup& g) {
  return connection_set_orbits(g, automorphism_group(g));
}

std::vector<CayleyEntry> cayley_graphs_for_group(const FiniteGroup& g) {
  std::map<CanonicalForm, CayleyEntry> found;
  for (const auto& s : connection_set_orbits(g)) {
    Graph graph = cayley_graph(g, s.elements);
    auto lab = canonical_labeling(graph);
    if (found.contains(lab.form)) continue;
    found.emplace(lab.form, CayleyEntry{lab.form, graph.relabel(lab.labeling), s});
  }
  std::vector<CayleyEntry> out;
  out.reserve(found.size());
  for (auto& [form, entry] : found) out.push_back(std::move(entry));
  return out;
}

}  // namespace cvt
