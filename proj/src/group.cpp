#include "cvt/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cvt {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table, int identity, std::string label,
                         std::vector<int> generator_marks)
    : order_(order),
      table_(std::move(table)),
      identity_(identity),
      generator_marks_(std::move(generator_marks)),
      label_(std::move(label)) {
  if (order_ == 0 || table_.size() != order_ * order_) {
    throw std::invalid_argument("multiplication table has wrong size");
  }
  if (identity_ < 0 || static_cast<std::size_t>(identity_) >= order_) {
    throw std::invalid_argument("identity out of range");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(static_cast<int>(a), identity_) != static_cast<int>(a) ||
        mul(identity_, static_cast<int>(a)) != static_cast<int>(a)) {
      throw std::invalid_argument("identity is not two-sided");
    }
  }
  inverse_.assign(order_, -1);
  for (std::size_t a = 0; a < order_; ++a) {
    const int* row = &table_[a * order_];
    for (std::size_t b = 0; b < order_; ++b) {
      if (row[b] == identity_) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
    }
    if (inverse_[a] < 0) throw std::invalid_argument("element without inverse");
  }
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = identity_;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<int> FiniteGroup::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FiniteGroup::subgroup(std::span<const int> gens) const {
  std::vector<char> in(order_, 0);
  std::vector<int> elems{identity_};
  in[identity_] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int g : gens) {
      int y = mul(elems[k], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::generates(std::span<const int> gens) const {
  return subgroup(gens).size() == order_;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<int> FiniteGroup::involutions() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < order_; ++a) {
    if (static_cast<int>(a) != identity_ && mul(a, a) == identity_) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<int> FiniteGroup::order_profile() const {
  std::vector<int> out(order_);
  for (std::size_t a = 0; a < order_; ++a) out[a] = element_order(static_cast<int>(a));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation FiniteGroup::right_regular(int g) const {
  std::vector<int> img(order_);
  for (std::size_t x = 0; x < order_; ++x) img[x] = mul(static_cast<int>(x), g);
  return Permutation(std::move(img));
}

bool FiniteGroup::check_associativity(std::size_t samples) const {
  if (order_ <= 256) {
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) {
        int ab = mul(a, b);
        for (std::size_t c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
      }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(order_) - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

bool FiniteGroup::check_inverses() const {
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_) return false;
  }
  return true;
}

FiniteGroup group_from_generators(std::span<const Permutation> gens, std::string label,
                                  std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generators have different degrees");
  }
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<Permutation, int, PermutationHash> lookup{{elems.front(), 0}};
  std::vector<int> parent{-1}, via{-1};
  const std::size_t k = gens.size();
  std::vector<int> rmul;  // rmul[x * k + i] = index of x * gens[i]
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      Permutation y = elems[x] * gens[i];
      auto [it, inserted] = lookup.try_emplace(y, static_cast<int>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) throw LimitExceeded("group too large");
        elems.push_back(std::move(y));
        parent.push_back(static_cast<int>(x));
        via.push_back(static_cast<int>(i));
      }
      rmul.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    int* row = &table[a * n];
    row[0] = static_cast<int>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = rmul[row[parent[b]] * k + via[b]];
  }
  std::vector<int> marks;
  for (std::size_t i = 0; i < k; ++i) marks.push_back(lookup.at(gens[i]));
  FiniteGroup g(n, std::move(table), 0, std::move(label), std::move(marks));
  g.realization_ = std::move(elems);
  g.lookup_ = std::move(lookup);
  return g;
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> commutators;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      int c = g.commutator(static_cast<int>(a), static_cast<int>(b));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return g.subgroup(commutators);
}

FiniteGroup quotient_group(const FiniteGroup& g, std::span<const int> normal_subgroup) {
  const std::size_t n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int h : normal_subgroup) {
      int y = g.mul(static_cast<int>(x), h);
      coset[y] = id;
    }
  }
  const std::size_t m = reps.size();
  if (m * normal_subgroup.size() != n) throw std::invalid_argument("not a subgroup");
  std::vector<int> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<int> marks;
  for (int x : g.generator_marks()) marks.push_back(coset[x]);
  return FiniteGroup(m, std::move(table), coset[g.identity()], g.label().empty() ? "" : g.label() + "/N",
                     std::move(marks));
}

std::uint64_t AbelianInvariants::product() const {
  std::uint64_t p = 1;
  for (int c : cyclic_orders) p *= static_cast<std::uint64_t>(c);
  return p;
}

AbelianInvariants abelian_invariants(const FiniteGroup& abelian) {
  if (!abelian.is_abelian()) throw std::invalid_argument("group is not abelian");
  std::vector<int> factors;
  FiniteGroup current = abelian;
  while (current.order() > 1) {
    int best = current.identity(), best_order = 1;
    for (std::size_t x = 0; x < current.order(); ++x) {
      int o = current.element_order(static_cast<int>(x));
      if (o > best_order) {
        best_order = o;
        best = static_cast<int>(x);
      }
    }
    factors.push_back(best_order);
    const int cyc[] = {best};
    auto sub = current.subgroup(cyc);
    current = quotient_group(current, sub);
  }
  std::reverse(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] % factors[i - 1] != 0) throw std::logic_error("invariant factor chain broken");
  }
  return AbelianInvariants{std::move(factors)};
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  auto derived = derived_subgroup(g);
  return abelian_invariants(quotient_group(g, derived));
}

bool cubic_cayley_filter(const FiniteGroup& g) {
  const auto inv = abelianization(g).cyclic_orders;
  switch (inv.size()) {
    case 0:
    case 1:
      return true;
    case 2:
      return inv[0] == 2;
    case 3:
      return inv[0] == 2 && inv[1] == 2 && inv[2] == 2;
    default:
      return false;
  }
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> current = g.subgroup(gens);
  while (current.size() < g.order()) {
    std::vector<char> in(g.order(), 0);
    for (int x : current) in[x] = 1;
    int best = -1;
    std::size_t best_size = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      gens.push_back(static_cast<int>(x));
      std::size_t size = g.subgroup(gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = static_cast<int>(x);
        if (size == g.order()) break;
      }
      // elements of the same coset of `current` give the same closure size
      // only in special cases, so no further pruning here
    }
    gens.push_back(best);
    current = g.subgroup(gens);
  }
  return gens;
}

std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& g,
                                                    std::span<const int> gens,
                                                    const FiniteGroup& h,
                                                    std::span<const int> images) {
  std::vector<int> phi(g.order(), -1);
  phi[g.identity()] = h.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      int target = h.mul(phi[x], images[i]);
      if (phi[y] < 0) {
        phi[y] = target;
        queue.push_back(y);
      } else if (phi[y] != target) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) throw std::invalid_argument("gens do not generate the group");
  return phi;
}

namespace {

bool injective(const std::vector<int>& phi, std::size_t target_order) {
  std::vector<char> hit(target_order, 0);
  for (int y : phi) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

// Backtracking search for bijective homomorphisms G -> H that send gens[i]
// to images fixed in `prefix` for i < prefix.size(). Images for later
// generators are drawn from `candidates[i]`; pairwise product orders must
// match.
class ImageSearch {
 public:
  ImageSearch(const FiniteGroup& g, const FiniteGroup& h, std::vector<int> gens)
      : g_(g), h_(h), gens_(std::move(gens)) {
    const std::size_t k = gens_.size();
    pair_order_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        pair_order_[i * k + j] = g_.element_order(g_.mul(gens_[i], gens_[j]));
    std::vector<int> h_orders(h_.order());
    for (std::size_t x = 0; x < h_.order(); ++x) h_orders[x] = h_.element_order(static_cast<int>(x));
    candidates_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      int o = g_.element_order(gens_[i]);
      for (std::size_t x = 0; x < h_.order(); ++x)
        if (h_orders[x] == o) candidates_[i].push_back(static_cast<int>(x));
    }
  }

  const std::vector<int>& gens() const { return gens_; }
  const std::vector<int>& candidates(std::size_t i) const { return candidates_[i]; }

  std::optional<std::vector<int>> find(std::vector<int> prefix) {
    images_ = std::move(prefix);
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (!consistent(i)) return std::nullopt;
    return descend();
  }

 private:
  bool consistent(std::size_t i) const {
    const std::size_t k = gens_.size();
    for (std::size_t j = 0; j <= i; ++j) {
      if (h_.element_order(h_.mul(images_[i], images_[j])) != pair_order_[i * k + j]) return false;
      if (h_.element_order(h_.mul(images_[j], images_[i])) != pair_order_[j * k + i]) return false;
    }
    return true;
  }

  std::optional<std::vector<int>> descend() {
    std::size_t i = images_.size();
    if (i == gens_.size()) {
      auto phi = extend_homomorphism(g_, gens_, h_, images_);
      if (phi && injective(*phi, h_.order())) return phi;
      return std::nullopt;
    }
    for (int c : candidates_[i]) {
      images_.push_back(c);
      if (consistent(i)) {
        if (auto phi = descend()) return phi;
      }
      images_.pop_back();
    }
    return std::nullopt;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<int> gens_;
  std::vector<int> pair_order_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> images_;
};

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw LimitExceeded("group order exceeds automorphism cap");
  AutomorphismGroup result;
  if (g.order() == 1) return result;
  ImageSearch search(g, g, small_generating_set(g));
  const auto& gens = search.gens();
  const std::size_t k = gens.size();
  const std::size_t n = g.order();

  // Level i: automorphisms fixing gens[0..i-1]; deepest level first so that
  // its generators already prune the shallower orbits.
  for (std::size_t level = k; level-- > 0;) {
    auto level_gens = [&] {
      std::vector<Permutation> out;
      for (const auto& a : result.generators) {
        bool fixes = true;
        for (std::size_t j = 0; j < level && fixes; ++j) fixes = a[gens[j]] == gens[j];
        if (fixes) out.push_back(a);
      }
      return out;
    };
    std::vector<char> failed(n, 0);
    auto orbit_of = [&](int start) {
      auto lg = level_gens();
      std::vector<int> orb{start};
      std::vector<char> in(n, 0);
      in[start] = 1;
      for (std::size_t q = 0; q < orb.size(); ++q)
        for (const auto& a : lg) {
          int y = a[orb[q]];
          if (!in[y]) {
            in[y] = 1;
            orb.push_back(y);
          }
        }
      return std::pair{orb, in};
    };
    auto [orbit, in_orbit] = orbit_of(gens[level]);
    for (int c : search.candidates(level)) {
      if (in_orbit[c] || failed[c]) continue;
      std::vector<int> prefix(gens.begin(), gens.begin() + static_cast<long>(level));
      prefix.push_back(c);
      if (auto phi = search.find(prefix)) {
        result.generators.emplace_back(std::move(*phi));
        std::tie(orbit, in_orbit) = orbit_of(gens[level]);
      } else {
        auto [bad, bad_in] = orbit_of(c);
        for (int b : bad) failed[b] = 1;
      }
    }
    result.order *= orbit.size();
  }
  return result;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order_profile() != h.order_profile()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (abelianization(g) != abelianization(h)) return std::nullopt;
  ImageSearch search(g, h, small_generating_set(g));
  return search.find({});
}

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool r_class_member(const FiniteGroup& g) {
  if (!is_power_of_two(g.order())) return false;
  if (g.order() == 1) return true;
  // Burnside basis theorem: a subset generates a 2-group iff its image
  // spans the Frattini quotient G / (G' G^2) over F2.
  std::vector<int> frattini_gens = derived_subgroup(g);
  for (std::size_t x = 0; x < g.order(); ++x) frattini_gens.push_back(g.mul(x, x));
  auto frattini = g.subgroup(frattini_gens);
  FiniteGroup q = quotient_group(g, frattini);
  int rank = std::countr_zero(q.order());
  if (rank > 3) return false;

  std::vector<int> mask(q.order(), -1);
  std::vector<int> spanned{q.identity()};
  mask[q.identity()] = 0;
  int bit = 0;
  for (std::size_t x = 0; x < q.order(); ++x) {
    if (mask[x] >= 0) continue;
    std::size_t old = spanned.size();
    for (std::size_t s = 0; s < old; ++s) {
      int y = q.mul(spanned[s], static_cast<int>(x));
      mask[y] = mask[spanned[s]] | (1 << bit);
      spanned.push_back(y);
    }
    ++bit;
  }
  // coset of each element of g: cosets are numbered by least element, so
  // recompute the map directly.
  std::vector<int> coset_of(g.order(), -1);
  {
    int id = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (coset_of[x] >= 0) continue;
      for (int f : frattini) coset_of[g.mul(x, f)] = id;
      ++id;
    }
  }
  auto vec = [&](int x) { return mask[coset_of[x]]; };
  auto span_rank = [](std::initializer_list<int> vs) {
    std::vector<int> basis;
    for (int v : vs) {
      for (int b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
  };

  const auto inv = g.involutions();
  if (rank <= 2) {
    for (int t : inv)
      for (std::size_t x = 0; x < g.order(); ++x)
        if (span_rank({vec(t), vec(static_cast<int>(x))}) == rank) return true;
  }
  for (std::size_t a = 0; a < inv.size(); ++a)
    for (std::size_t b = a; b < inv.size(); ++b)
      for (std::size_t c = b; c < inv.size(); ++c)
        if (span_rank({vec(inv[a]), vec(inv[b]), vec(inv[c])}) == rank) return true;
  return false;
}

std::vector<FiniteGroup> central_quotients_by_order2(const FiniteGroup& g) {
  std::vector<FiniteGroup> out;
  for (int z : g.center()) {
    if (z == g.identity() || g.mul(z, z) != g.identity()) continue;
    const int gen[] = {z};
    auto c = g.subgroup(gen);
    out.push_back(quotient_group(g, c));
  }
  return out;
}

}  // namespace cvt
