#include "cvt/canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "cvt/perm_group.hpp"

namespace cvt {

namespace {

// Ordered partition: cells are contiguous ranges of `lab`; a cell is named
// by its start position.
struct Partition {
  std::vector<int> lab;
  std::vector<int> cell_of;   // vertex -> cell start
  std::vector<int> cell_end;  // cell start -> one past its end
  int cells = 0;
};

constexpr int kNoJump = INT_MAX;

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.order(), 0), marked_(g.order(), 0), queued_(g.order(), 0) {}

  void refine(Partition& p, std::vector<int> queue) {
    const int n = static_cast<int>(g_.order());
    for (int c : queue) queued_[c] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      if (p.cells == n) break;
      const int w = queue[head];
      queued_[w] = 0;
      const int wend = p.cell_end[w];
      touched_.clear();
      for (int pos = w; pos < wend; ++pos) {
        for (int x : g_.neighbors(p.lab[pos])) {
          if (count_[x]++ == 0) touched_.push_back(x);
        }
      }
      touched_cells_.clear();
      for (int x : touched_) {
        const int c = p.cell_of[x];
        if (!marked_[c]) {
          marked_[c] = 1;
          touched_cells_.push_back(c);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      for (int x : touched_cells_) {
        marked_[x] = 0;
        split(p, x, queue);
      }
      for (int x : touched_) count_[x] = 0;
    }
    for (std::size_t i = 0; i < queue.size(); ++i) queued_[queue[i]] = 0;
  }

 private:
  void split(Partition& p, int x, std::vector<int>& queue) {
    const int xend = p.cell_end[x];
    if (xend - x == 1) return;
    auto first = p.lab.begin() + x;
    auto last = p.lab.begin() + xend;
    std::sort(first, last, [this](int a, int b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    if (count_[p.lab[x]] == count_[p.lab[xend - 1]]) return;

    fragments_.clear();
    int start = x;
    for (int pos = x + 1; pos <= xend; ++pos) {
      if (pos == xend || count_[p.lab[pos]] != count_[p.lab[start]]) {
        fragments_.emplace_back(start, pos);
        start = pos;
      }
    }
    for (auto [s, e] : fragments_) {
      p.cell_end[s] = e;
      for (int pos = s; pos < e; ++pos) p.cell_of[p.lab[pos]] = s;
    }
    p.cells += static_cast<int>(fragments_.size()) - 1;

    if (queued_[x]) {
      for (std::size_t i = 1; i < fragments_.size(); ++i) push(queue, fragments_[i].first);
      return;
    }
    std::size_t largest = 0;
    for (std::size_t i = 1; i < fragments_.size(); ++i) {
      const int size_i = fragments_[i].second - fragments_[i].first;
      const int size_l = fragments_[largest].second - fragments_[largest].first;
      if (size_i > size_l) largest = i;
    }
    for (std::size_t i = 0; i < fragments_.size(); ++i) {
      if (i != largest) push(queue, fragments_[i].first);
    }
  }

  void push(std::vector<int>& queue, int c) {
    if (!queued_[c]) {
      queued_[c] = 1;
      queue.push_back(c);
    }
  }

  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> marked_;
  std::vector<char> queued_;
  std::vector<int> touched_;
  std::vector<int> touched_cells_;
  std::vector<std::pair<int, int>> fragments_;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::span<const int> colors) : g_(g), refiner_(g) {
    const int n = static_cast<int>(g.order());
    if (!colors.empty() && colors.size() != g.order()) {
      throw std::invalid_argument("vertex colour count does not match graph order");
    }
    root_.lab.resize(n);
    std::iota(root_.lab.begin(), root_.lab.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(root_.lab.begin(), root_.lab.end(),
                       [&](int a, int b) { return colors[a] < colors[b]; });
    }
    root_.cell_of.assign(n, 0);
    root_.cell_end.assign(n, 0);
    std::vector<int> queue;
    int start = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (pos == n || (!colors.empty() && colors[root_.lab[pos]] != colors[root_.lab[start]])) {
        root_.cell_end[start] = pos;
        for (int q = start; q < pos; ++q) root_.cell_of[root_.lab[q]] = start;
        queue.push_back(start);
        ++root_.cells;
        start = pos;
      }
    }
    if (n > 0) refiner_.refine(root_, std::move(queue));
  }

  void run() {
    if (g_.order() == 0) return;
    std::vector<int> path;
    search(root_, path);
  }

  const std::vector<int>& best_lab() const { return best_lab_; }
  std::vector<Permutation>& generators() { return generators_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int search(const Partition& p, std::vector<int>& path) {
    ++nodes_;
    const int depth = static_cast<int>(path.size());
    const int n = static_cast<int>(g_.order());
    if (p.cells == n) return leaf(p, path);

    // First smallest non-singleton cell.
    int target = -1;
    int target_size = INT_MAX;
    for (int s = 0; s < n; s = p.cell_end[s]) {
      const int size = p.cell_end[s] - s;
      if (size > 1 && size < target_size) {
        target = s;
        target_size = size;
      }
    }
    std::vector<int> children(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::vector<int> orbit_rep;
    std::size_t orbit_gens = SIZE_MAX;
    for (int v : children) {
      if (!explored.empty()) {
        if (orbit_gens != generators_.size()) {
          orbit_rep = stabilizer_orbits(path);
          orbit_gens = generators_.size();
        }
        const int rep = orbit_rep[v];
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int u) { return orbit_rep[u] == rep; })) {
          continue;
        }
      }
      Partition child = p;
      individualize(child, v);
      path.push_back(v);
      const int jump = search(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  void individualize(Partition& p, int v) {
    const int c = p.cell_of[v];
    const int end = p.cell_end[c];
    auto it = std::find(p.lab.begin() + c, p.lab.begin() + end, v);
    std::iter_swap(p.lab.begin() + c, it);
    p.cell_end[c] = c + 1;
    p.cell_end[c + 1] = end;
    for (int pos = c + 1; pos < end; ++pos) p.cell_of[p.lab[pos]] = c + 1;
    ++p.cells;
    refiner_.refine(p, {c});
  }

  // Bit positions of edges in graph6 order under the leaf labelling; the
  // smallest bit string has the lexicographically largest position list.
  std::vector<std::int64_t> certificate(const std::vector<int>& lab) {
    const int n = static_cast<int>(g_.order());
    pos_.resize(n);
    for (int i = 0; i < n; ++i) pos_[lab[i]] = i;
    std::vector<std::int64_t> cert;
    cert.reserve(g_.edge_count());
    for (int u = 0; u < n; ++u) {
      for (int w : g_.neighbors(u)) {
        if (u < w) {
          const std::int64_t i = std::min(pos_[u], pos_[w]);
          const std::int64_t j = std::max(pos_[u], pos_[w]);
          cert.push_back(j * (j - 1) / 2 + i);
        }
      }
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  int leaf(const Partition& p, const std::vector<int>& path) {
    auto cert = certificate(p.lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = std::move(cert);
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) {
      add_automorphism(p.lab, first_lab_);
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      add_automorphism(p.lab, best_lab_);
      return common_prefix(path, best_path_);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
      best_path_ = path;
    }
    return kNoJump;
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> images(g_.order());
    for (std::size_t i = 0; i < from.size(); ++i) images[from[i]] = to[i];
    Permutation gamma(std::move(images));
    if (!gamma.is_identity()) generators_.push_back(std::move(gamma));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
    std::vector<Permutation> fixing;
    for (const auto& gamma : generators_) {
      if (std::all_of(path.begin(), path.end(), [&](int v) { return gamma[v] == v; })) {
        fixing.push_back(gamma);
      }
    }
    return orbit_representatives(fixing, g_.order());
  }

  const Graph& g_;
  Refiner refiner_;
  Partition root_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::int64_t> first_cert_, best_cert_;
  std::vector<int> first_path_, best_path_;
  std::vector<Permutation> generators_;
  std::vector<int> pos_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> vertex_colors) {
  CanonicalSearch search(g, vertex_colors);
  search.run();
  const int n = static_cast<int>(g.order());
  std::vector<int> images(n);
  const auto& lab = search.best_lab();
  for (int i = 0; i < n; ++i) images[lab[i]] = i;
  CanonicalLabeling out;
  out.labeling = Permutation(std::move(images));
  out.form.bytes = graph6_encode(g.relabel(out.labeling));
  if (!vertex_colors.empty()) {
    out.form.bytes += '|';
    for (int i = 0; i < n; ++i) {
      if (i > 0) out.form.bytes += ',';
      out.form.bytes += std::to_string(vertex_colors[lab[i]]);
    }
  }
  out.automorphisms = std::move(search.generators());
  out.search_nodes = search.nodes();
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<Permutation> find_graph_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto la = canonical_labeling(a);
  auto lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  return la.labeling * lb.labeling.inverse();
}

GraphAutomorphisms graph_automorphisms(const Graph& g, std::span<const int> vertex_colors) {
  auto result = canonical_labeling(g, vertex_colors);
  GraphAutomorphisms out;
  out.generators = std::move(result.automorphisms);
  if (!out.generators.empty()) {
    out.order = PermGroup(g.order(), out.generators).order();
  }
  return out;
}

}  // namespace cvt
