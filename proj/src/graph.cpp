#include "cvt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvt {

namespace {

void check_vertex(std::size_t n, int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
  Graph g;
  g.adj_ = std::move(adjacency);
  const std::size_t n = g.adj_.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    for (int u : a) {
      check_vertex(n, u);
      if (static_cast<std::size_t>(u) == v) throw std::invalid_argument("loop");
    }
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw std::invalid_argument("repeated edge");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (int u : g.adj_[v]) {
      if (!g.adjacent(u, static_cast<int>(v))) throw std::invalid_argument("asymmetric adjacency");
    }
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::neighbor_index(int u, int v) const {
  const auto& a = neighbors(u);
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return static_cast<int>(it - a.begin());
}

bool Graph::is_regular(std::size_t valency) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [valency](const auto& a) { return a.size() == valency; });
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (int v : adj_[u]) {
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    }
  }
  return out;
}

Graph Graph::relabel(const Permutation& p) const {
  if (p.degree() != order()) throw std::invalid_argument("relabel: degree mismatch");
  Graph g(order());
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    auto& a = g.adj_[p[static_cast<int>(u)]];
    a.reserve(adj_[u].size());
    for (int v : adj_[u]) a.push_back(p[v]);
    std::sort(a.begin(), a.end());
  }
  return g;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != order()) return false;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    const int pu = p[static_cast<int>(u)];
    if (adj_[pu].size() != adj_[u].size()) return false;
    for (int v : adj_[u]) {
      if (!adjacent(pu, p[v])) return false;
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int root) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue;
  queue.reserve(g.order());
  dist[root] = 0;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order()), parent(g.order()), queue;
  queue.reserve(g.order());
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw std::invalid_argument("disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

// Path extension search for a Hamilton cycle through vertex 0.
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), on_path_(g.order(), 0),
        interior_(g.order(), 0), avail_(g.order()), seen_(g.order(), 0) {
    for (int v = 0; v < n_; ++v) avail_[v] = static_cast<int>(g.degree(v));
  }

  std::optional<std::vector<int>> run() {
    if (n_ < 3) return std::nullopt;
    for (int v = 0; v < n_; ++v) {
      if (avail_[v] < 2) return std::nullopt;
    }
    if (!g_.is_connected()) return std::nullopt;
    path_.push_back(0);
    on_path_[0] = 1;
    if (extend(0)) return path_;
    return std::nullopt;
  }

 private:
  bool extend(int v) {
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(v, 0);

    std::vector<int> options;
    for (int u : g_.neighbors(v)) {
      if (!on_path_[u]) options.push_back(u);
    }
    std::stable_sort(options.begin(), options.end(),
                     [this](int a, int b) { return avail_[a] < avail_[b]; });

    // v stops being an endpoint once the path moves on (vertex 0 stays one).
    const bool v_becomes_interior = v != 0;
    if (v_becomes_interior) set_interior(v, true);
    bool found = false;
    for (int u : options) {
      path_.push_back(u);
      on_path_[u] = 1;
      if (feasible(v, u) && extend(u)) {
        found = true;
        break;
      }
      on_path_[u] = 0;
      path_.pop_back();
    }
    if (v_becomes_interior) set_interior(v, false);
    return found;
  }

  void set_interior(int v, bool on) {
    interior_[v] = on ? 1 : 0;
    for (int w : g_.neighbors(v)) avail_[w] += on ? -1 : 1;
  }

  bool feasible(int v, int u) {
    const int remaining = n_ - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    // Every unvisited vertex needs two usable edges.
    for (int w : g_.neighbors(v)) {
      if (!on_path_[w] && avail_[w] < 2) return false;
    }
    // The new endpoint and vertex 0 both need an unvisited neighbour.
    if (!has_unvisited_neighbor(u) || !has_unvisited_neighbor(0)) return false;
    return unvisited_connected(u);
  }

  bool has_unvisited_neighbor(int v) const {
    for (int w : g_.neighbors(v)) {
      if (!on_path_[w]) return true;
    }
    return false;
  }

  // The unvisited vertices must form one component reachable from the endpoint.
  bool unvisited_connected(int endpoint) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    stack_.clear();
    int reached = 0;
    for (int w : g_.neighbors(endpoint)) {
      if (!on_path_[w] && seen_[w] != stamp_) {
        seen_[w] = stamp_;
        stack_.push_back(w);
      }
    }
    while (!stack_.empty()) {
      const int x = stack_.back();
      stack_.pop_back();
      ++reached;
      for (int w : g_.neighbors(x)) {
        if (!on_path_[w] && seen_[w] != stamp_) {
          seen_[w] = stamp_;
          stack_.push_back(w);
        }
      }
    }
    return reached == n_ - static_cast<int>(path_.size());
  }

  const Graph& g_;
  int n_;
  std::vector<char> on_path_;
  std::vector<char> interior_;
  std::vector<int> avail_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<int> stack_;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> find_hamilton_cycle(const Graph& g) {
  return HamiltonSearch(g).run();
}

bool has_hamilton_cycle(const Graph& g) { return find_hamilton_cycle(g).has_value(); }

Graph ladder(int n, LadderKind kind) {
  std::vector<std::pair<int, int>> edges;
  if (kind == LadderKind::Circular) {
    if (n < 3) throw std::invalid_argument("circular ladder needs n >= 3");
    for (int i = 0; i < n; ++i) {
      const int next = (i + 1) % n;
      edges.emplace_back(2 * i, 2 * i + 1);
      edges.emplace_back(2 * i, 2 * next);
      edges.emplace_back(2 * i + 1, 2 * next + 1);
    }
    return Graph::from_edges(static_cast<std::size_t>(2 * n), edges);
  }
  if (n < 2) throw std::invalid_argument("Moebius ladder needs n >= 2");
  const int m = 2 * n;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + n);
  return Graph::from_edges(static_cast<std::size_t>(m), edges);
}

Graph truncation(const Graph& g) {
  if (!g.is_regular(3) || g.order() == 0) throw std::invalid_argument("truncation needs a cubic graph");
  const int n = static_cast<int>(g.order());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    edges.emplace_back(3 * u, 3 * u + 1);
    edges.emplace_back(3 * u, 3 * u + 2);
    edges.emplace_back(3 * u + 1, 3 * u + 2);
    const auto& a = g.neighbors(u);
    for (int k = 0; k < 3; ++k) {
      const int v = a[k];
      if (u < v) edges.emplace_back(3 * u + k, 3 * v + g.neighbor_index(v, u));
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(3 * n), edges);
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid byte");
  }
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t n = 0;
  std::size_t pos = 0;
  auto read_big = [&](std::size_t start, int count) {
    if (text.size() < start + count) throw std::invalid_argument("graph6: truncated header");
    std::size_t value = 0;
    for (int k = 0; k < count; ++k) value = (value << 6) | static_cast<std::size_t>(text[start + k] - 63);
    return value;
  };
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    n = read_big(2, 6);
    pos = 8;
  } else {
    n = read_big(1, 3);
    pos = 4;
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw std::invalid_argument("graph6: truncated bit stream");
  if (text.size() - pos > nbytes) throw std::invalid_argument("graph6: trailing data");
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph6_lines(buf.str());
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace named {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(static_cast<std::size_t>(a + b), e);
}

Graph complete_multipartite(int parts, int size) {
  std::vector<std::pair<int, int>> e;
  const int n = parts * size;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i / size != j / size) e.emplace_back(i, j);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph coxeter() {
  // Outer 7-cycle, three inner heptagrams with steps 2 and 3, and 7 hubs.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 7; ++i) {
    e.emplace_back(i, (i + 1) % 7);
    e.emplace_back(7 + i, 7 + (i + 2) % 7);
    e.emplace_back(14 + i, 14 + (i + 3) % 7);
    e.emplace_back(21 + i, i);
    e.emplace_back(21 + i, 7 + i);
    e.emplace_back(21 + i, 14 + i);
  }
  return Graph::from_edges(28, e);
}

Graph cube(int dimension) {
  const int n = 1 << dimension;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph circulant(int n, std::span<const int> jumps) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int j : jumps) {
      for (int w : {((v + j) % n + n) % n, ((v - j) % n + n) % n}) {
        if (w != v && std::find(adj[v].begin(), adj[v].end(), w) == adj[v].end()) adj[v].push_back(w);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace named

}  // namespace cvt
