#include "cvt/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cvt/canonical.hpp"

namespace cvt {

namespace {

struct State {
  std::vector<std::vector<int>> adj;
  int discovered = 1;
  int vertex = 0;
};

std::vector<int> distance_profile(const Graph& g, int v) {
  std::vector<int> profile;
  for (int d : bfs_distances(g, v)) {
    if (d >= static_cast<int>(profile.size())) profile.resize(d + 1, 0);
    ++profile[d];
  }
  return profile;
}

class RegularGenerator {
 public:
  RegularGenerator(int n, int d) : n_(n), d_(d) {}

  // Collects the states reached when vertex `split_at` is about to be filled.
  void collect(State s, int split_at, std::vector<State>& out) {
    split_at_ = split_at;
    prefixes_ = &out;
    rec(s, s.vertex + 1);
    prefixes_ = nullptr;
  }

  void expand(State s, std::map<std::string, Graph>& found, EnumerationStats& stats) {
    split_at_ = -1;
    found_ = &found;
    stats_ = &stats;
    rec(s, s.vertex + 1);
  }

 private:
  bool adjacent(const State& s, int a, int b) const {
    return std::find(s.adj[a].begin(), s.adj[a].end(), b) != s.adj[a].end();
  }

  void rec(State& s, int lo) {
    const int i = s.vertex;
    if (static_cast<int>(s.adj[i].size()) == d_) {
      if (i + 1 == n_) {
        leaf(s);
        return;
      }
      if (i + 1 >= s.discovered) return;  // component closed early
      ++s.vertex;
      if (s.vertex == split_at_) {
        prefixes_->push_back(s);
      } else {
        rec(s, s.vertex + 1);
      }
      --s.vertex;
      return;
    }
    const int need = d_ - static_cast<int>(s.adj[i].size());
    int available = n_ - s.discovered;
    for (int j = std::max(lo, i + 1); j < s.discovered; ++j) {
      if (static_cast<int>(s.adj[j].size()) < d_ && !adjacent(s, i, j)) ++available;
    }
    if (available < need) return;

    for (int j = std::max(lo, i + 1); j < s.discovered; ++j) {
      if (static_cast<int>(s.adj[j].size()) >= d_ || adjacent(s, i, j)) continue;
      s.adj[i].push_back(j);
      s.adj[j].push_back(i);
      rec(s, j + 1);
      s.adj[i].pop_back();
      s.adj[j].pop_back();
    }
    if (s.discovered < n_) {
      const int j = s.discovered++;
      s.adj[i].push_back(j);
      s.adj[j].push_back(i);
      rec(s, j + 1);
      s.adj[i].pop_back();
      s.adj[j].pop_back();
      --s.discovered;
    }
  }

  void leaf(const State& s) {
    ++stats_->labelled_leaves;
    Graph g = Graph::from_adjacency(s.adj);
    const auto root = distance_profile(g, 0);
    for (int v = 1; v < n_; ++v) {
      if (distance_profile(g, v) > root) return;
    }
    ++stats_->canonical_calls;
    auto lab = canonical_labeling(g);
    if (!found_->contains(lab.form.bytes)) {
      found_->emplace(lab.form.bytes, g.relabel(lab.labeling));
    }
  }

  int n_;
  int d_;
  int split_at_ = -1;
  std::vector<State>* prefixes_ = nullptr;
  std::map<std::string, Graph>* found_ = nullptr;
  EnumerationStats* stats_ = nullptr;
};

}  // namespace

std::vector<Graph> all_connected_regular_graphs(int n, int valency, unsigned workers,
                                                EnumerationStats* stats) {
  if (n < 1 || valency < 0 || valency >= n || (n * valency) % 2 != 0) {
    throw std::invalid_argument("no regular graph with these parameters");
  }
  if (valency == 0) {
    if (n == 1) return {Graph(1)};
    return {};
  }
  State start;
  start.adj.resize(n);
  std::vector<State> prefixes;
  RegularGenerator splitter(n, valency);
  splitter.collect(start, std::min(n - 1, 3), prefixes);

  std::vector<std::map<std::string, Graph>> partial(prefixes.size());
  std::vector<EnumerationStats> partial_stats(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    RegularGenerator gen(n, valency);
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      gen.expand(prefixes[k], partial[k], partial_stats[k]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(prefixes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::map<std::string, Graph> merged;
  EnumerationStats total;
  for (std::size_t k = 0; k < partial.size(); ++k) {
    merged.merge(partial[k]);
    total.labelled_leaves += partial_stats[k].labelled_leaves;
    total.canonical_calls += partial_stats[k].canonical_calls;
  }
  if (stats) *stats = total;
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [key, g] : merged) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_connected_cubic_graphs(int n, unsigned workers) {
  if (n % 2 != 0 || n < 4 || n > 14) {
    throw std::invalid_argument("cubic oracle needs even n with 4 <= n <= 14");
  }
  return all_connected_regular_graphs(n, 3, workers);
}

std::vector<Graph> all_connected_tetravalent_graphs(int n, unsigned workers) {
  if (n < 5 || n > 12) throw std::invalid_argument("tetravalent oracle needs 5 <= n <= 12");
  return all_connected_regular_graphs(n, 4, workers);
}

}  // namespace cvt
