#include "cvt/perm_group.hpp"

#include <algorithm>
#include <deque>

namespace cvt {

namespace {

bool fixes_all(const Permutation& g, std::span<const int> points) {
  return std::all_of(points.begin(), points.end(), [&](int p) { return g.apply(p) == p; });
}

int first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g[i] != static_cast<int>(i)) return static_cast<int>(i);
  }
  return -1;
}

// u * s * w, evaluated pointwise without temporaries.
Permutation triple(const Permutation& u, const Permutation& s, const Permutation& w) {
  std::vector<int> img(u.degree());
  for (std::size_t x = 0; x < u.degree(); ++x) img[x] = w.apply(s.apply(u[x]));
  return Permutation(std::move(img));
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<int> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) strong_.push_back(g);
  }
  if (strong_.empty()) return;
  for (int p : base_prefix) add_level(p);
  for (const auto& g : strong_) {
    auto b = base();
    if (fixes_all(g, b)) add_level(first_moved(g));
  }
  for (auto& level : levels_) rebuild_orbit(level);

  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t oi = 0; !restarted && oi < levels_[i].orbit.size(); ++oi) {
      int beta = levels_[i].orbit[oi];
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        const Permutation& s = strong_[levels_[i].gens[gi]];
        const Level& cur = levels_[i];
        int gamma = s.apply(beta);
        Permutation h = triple(cur.transversal[cur.slot[beta]], s,
                               cur.transversal_inv[cur.slot[gamma]]);
        if (h.is_identity()) continue;
        auto [j, residue] = sift(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        std::size_t idx = strong_.size() - 1;
        if (j == levels_.size()) {
          for (std::size_t l = i + 1; l < levels_.size(); ++l) levels_[l].gens.push_back(idx);
          add_level(first_moved(strong_[idx]));
        } else {
          for (std::size_t l = i + 1; l <= j; ++l) levels_[l].gens.push_back(idx);
        }
        for (std::size_t l = i + 1; l <= j; ++l) rebuild_orbit(levels_[l]);
        i = j + 1;  // the loop decrement resumes at level j
        restarted = true;
        break;
      }
    }
  }
  // Trailing levels with trivial orbits carry no information unless the
  // caller asked for them as a prefix.
  while (!levels_.empty() && levels_.back().orbit.size() == 1 &&
         levels_.size() > base_prefix.size()) {
    levels_.pop_back();
  }
  if (std::all_of(levels_.begin(), levels_.end(),
                  [](const Level& l) { return l.orbit.size() == 1; }) &&
      base_prefix.empty()) {
    levels_.clear();
  }
}

void PermGroup::add_level(int point) {
  Level level;
  level.point = point;
  auto b = base();
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    if (fixes_all(strong_[k], b)) level.gens.push_back(k);
  }
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void PermGroup::rebuild_orbit(Level& level) {
  level.orbit.assign(1, level.point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.transversal_inv.assign(1, Permutation::identity(degree_));
  level.slot[level.point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    int beta = level.orbit[k];
    for (std::size_t gi : level.gens) {
      const Permutation& s = strong_[gi];
      int gamma = s.apply(beta);
      if (level.slot[gamma] >= 0) continue;
      level.slot[gamma] = static_cast<int>(level.transversal.size());
      Permutation u = level.transversal[level.slot[beta]] * s;
      level.transversal_inv.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
      level.orbit.push_back(gamma);
    }
  }
}

std::pair<std::size_t, Permutation> PermGroup::sift(Permutation h, std::size_t from) const {
  for (std::size_t k = from; k < levels_.size(); ++k) {
    const Level& lv = levels_[k];
    int beta = h.apply(lv.point);
    if (lv.slot[beta] < 0) return {k, std::move(h)};
    if (beta != lv.point) h = h * lv.transversal_inv[lv.slot[beta]];
  }
  return {levels_.size(), std::move(h)};
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.point);
  return b;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t result = 1;
  for (const auto& l : levels_) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(l.orbit.size()), &result)) {
      throw LimitExceeded("group order exceeds 64 bits");
    }
  }
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [k, residue] = sift(g, 0);
  return residue.is_identity();
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t depth) const {
  auto b = base();
  if (depth > b.size()) depth = b.size();
  std::span<const int> prefix(b.data(), depth);
  std::vector<Permutation> out;
  for (const auto& s : strong_) {
    if (fixes_all(s, prefix)) out.push_back(s);
  }
  return out;
}

std::vector<Permutation> PermGroup::point_stabilizer(int point) const {
  if (!levels_.empty() && levels_.front().point == point) return stabilizer_generators(1);
  PermGroup fresh(degree_, strong_.empty() ? generators_ : strong_, {point});
  return fresh.stabilizer_generators(1);
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      int y = g.apply(out[k]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == degree_;
}

std::optional<Permutation> PermGroup::transversal_element(int point) const {
  if (levels_.empty()) {
    if (point == 0 || degree_ == 0) return Permutation::identity(degree_);
    return std::nullopt;
  }
  const Level& lv = levels_.front();
  if (lv.slot[point] < 0) return std::nullopt;
  return lv.transversal[lv.slot[point]];
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                 std::uint64_t cap) const {
  if (order() > cap) throw LimitExceeded("group too large to enumerate");
  // Every element factors uniquely as v_{L-1} * ... * v_0 with v_k in the
  // k-th transversal.
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t k,
                                                                const Permutation& acc) {
    if (k == 0) {
      fn(acc);
      return;
    }
    const Level& lv = levels_[k - 1];
    for (const auto& u : lv.transversal) rec(k - 1, acc * u);
  };
  rec(levels_.size(), Permutation::identity(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); }, cap);
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc = Permutation::identity(degree_);
  for (std::size_t k = levels_.size(); k-- > 0;) {
    const Level& lv = levels_[k];
    std::uniform_int_distribution<std::size_t> pick(0, lv.transversal.size() - 1);
    acc = acc * lv.transversal[pick(rng)];
  }
  return acc;
}

}  // namespace cvt
