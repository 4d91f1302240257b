#include "cvt/catalog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  if (token.empty()) throw ParseError(line, std::string("missing ") + what);
  std::size_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  bool open = false;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  auto close = [&] {
    if (open && out.back().generators.empty()) {
      throw ParseError(header_line, "group '" + out.back().label + "' has no generators");
    }
    open = false;
  };
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      close();
      continue;
    }
    if (line.rfind("group", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      close();
      std::istringstream in{std::string(line)};
      std::string kw, label, kd, d, ko, o;
      in >> kw >> label >> kd >> d >> ko >> o;
      if (label.empty() || kd != "degree" || ko != "order") {
        throw ParseError(line_no, "expected 'group <label> degree <d> order <n>'");
      }
      CatalogEntry entry;
      entry.label = label;
      entry.degree = parse_count(d, line_no, "degree");
      entry.declared_order = parse_count(o, line_no, "order");
      if (entry.degree == 0) throw ParseError(line_no, "degree must be positive");
      out.push_back(std::move(entry));
      open = true;
      header_line = line_no;
      continue;
    }
    if (!open) throw ParseError(line_no, "generator outside a group stanza");
    try {
      out.back().generators.push_back(Permutation::from_cycles(line, out.back().degree));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  close();
  return out;
}

std::string write_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += "group " + e.label + " degree " + std::to_string(e.degree) + " order " +
           std::to_string(e.declared_order) + "\n";
    for (const auto& g : e.generators) out += g.to_cycles() + "\n";
    out += "\n";
  }
  return out;
}

FiniteGroup build_group(const CatalogEntry& entry, std::size_t cap) {
  FiniteGroup g = group_from_generators(entry.generators, entry.label, cap);
  if (entry.declared_order != 0 && g.order() != entry.declared_order) {
    throw std::invalid_argument("group '" + entry.label + "' declared order " +
                                std::to_string(entry.declared_order) + " but generates " +
                                std::to_string(g.order()));
  }
  return g;
}

namespace families {

namespace {

CatalogEntry from_images(std::string label, std::size_t order,
                         std::vector<std::vector<int>> gens) {
  CatalogEntry e;
  e.label = std::move(label);
  e.degree = gens.front().size();
  e.declared_order = order;
  for (auto& g : gens) e.generators.emplace_back(std::move(g));
  return e;
}

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

CatalogEntry cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return from_images("Z" + std::to_string(n), n, {img});
}

CatalogEntry dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  if (n == 1) {
    auto e = cyclic(2);
    e.label = "D1";
    return e;
  }
  if (n == 2) {
    auto e = from_images("D2", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    return e;
  }
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = mod(-i, n);
  }
  return from_images("D" + std::to_string(n), 2 * n, {rot, ref});
}

CatalogEntry metacyclic(std::string label, int m, int s, int t, int r) {
  // Elements a^i b^j (0 <= i < m, 0 <= j < s), point index i + m*j.
  long long rs = 1;
  for (int k = 0; k < s; ++k) rs = rs * r % m;
  if (mod(rs, m) != 1 % m || mod(static_cast<long long>(r) * t - t, m) != 0) {
    throw std::invalid_argument("inconsistent metacyclic parameters");
  }
  const int n = m * s;
  std::vector<int> ga(n), gb(n);
  std::vector<int> rpow(s);
  rpow[0] = 1 % m;
  for (int j = 1; j < s; ++j) rpow[j] = mod(static_cast<long long>(rpow[j - 1]) * r, m);
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < m; ++i) {
      int p = i + m * j;
      // a^i b^j a = a^(i + r^j) b^j
      ga[p] = mod(i + rpow[j], m) + m * j;
      gb[p] = j + 1 < s ? i + m * (j + 1) : mod(i + t, m);
    }
  }
  return from_images(std::move(label), n, {ga, gb});
}

CatalogEntry dicyclic(int n) {
  return metacyclic(n == 2 ? "Q8" : "Dic" + std::to_string(n), 2 * n, 2, n, 2 * n - 1);
}

CatalogEntry semidihedral(int k) {
  int m = 1 << (k - 1);
  return metacyclic("SD" + std::to_string(1 << k), m, 2, 0, m / 2 - 1);
}

CatalogEntry modular(int k) {
  int m = 1 << (k - 1);
  return metacyclic("M" + std::to_string(1 << k), m, 2, 0, m / 2 + 1);
}

CatalogEntry alternating4() {
  return from_images("A4", 12, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

CatalogEntry symmetric(int n) {
  if (n < 2) return from_images("S1", 1, {{0}});
  std::vector<int> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::size_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::size_t>(i);
  return from_images("S" + std::to_string(n), order, {cyc, tr});
}

CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b) {
  CatalogEntry e;
  e.label = a.label + "x" + b.label;
  e.degree = a.degree + b.degree;
  e.declared_order = a.declared_order * b.declared_order;
  for (const auto& g : a.generators) {
    std::vector<int> img(e.degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = g[i];
    for (std::size_t i = 0; i < b.degree; ++i) img[a.degree + i] = static_cast<int>(a.degree + i);
    e.generators.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators) {
    std::vector<int> img(e.degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < b.degree; ++i) img[a.degree + i] = static_cast<int>(a.degree) + g[i];
    e.generators.emplace_back(std::move(img));
  }
  return e;
}

CatalogEntry elementary_abelian2(int rank) {
  CatalogEntry e = cyclic(2);
  for (int i = 1; i < rank; ++i) e = direct_product(e, cyclic(2));
  e.label = "Z2^" + std::to_string(rank);
  return e;
}

}  // namespace families

std::vector<std::string> builtin_catalog_names() {
  return {"small14", "two_groups64", "families64"};
}

namespace {

CatalogEntry trivial_group() {
  CatalogEntry e;
  e.label = "Z1";
  e.degree = 1;
  e.declared_order = 1;
  e.generators.emplace_back(1);
  return e;
}

CatalogEntry named(CatalogEntry e, std::string label) {
  e.label = std::move(label);
  return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(std::string_view name) {
  using namespace families;
  std::vector<CatalogEntry> out;
  if (name == "small14") {
    out.push_back(trivial_group());
    for (int n = 2; n <= 14; ++n) {
      out.push_back(cyclic(n));
      switch (n) {
        case 4:
          out.push_back(named(direct_product(cyclic(2), cyclic(2)), "Z2xZ2"));
          break;
        case 6:
          out.push_back(named(dihedral(3), "S3"));
          break;
        case 8:
          out.push_back(direct_product(cyclic(4), cyclic(2)));
          out.push_back(elementary_abelian2(3));
          out.push_back(dihedral(4));
          out.push_back(dicyclic(2));
          break;
        case 9:
          out.push_back(direct_product(cyclic(3), cyclic(3)));
          break;
        case 10:
          out.push_back(dihedral(5));
          break;
        case 12:
          out.push_back(direct_product(cyclic(2), cyclic(6)));
          out.push_back(dihedral(6));
          out.push_back(alternating4());
          out.push_back(dicyclic(3));
          break;
        case 14:
          out.push_back(dihedral(7));
          break;
        default:
          break;
      }
    }
    return out;
  }
  if (name == "two_groups64") {
    auto z = [](int n) { return cyclic(n); };
    out.push_back(z(2));
    out.push_back(z(4));
    out.push_back(named(direct_product(z(2), z(2)), "Z2xZ2"));
    out.push_back(z(8));
    out.push_back(direct_product(z(4), z(2)));
    out.push_back(elementary_abelian2(3));
    out.push_back(dihedral(4));
    out.push_back(dicyclic(2));
    out.push_back(z(16));
    out.push_back(direct_product(z(8), z(2)));
    out.push_back(direct_product(z(4), z(4)));
    out.push_back(direct_product(direct_product(z(4), z(2)), z(2)));
    out.push_back(elementary_abelian2(4));
    out.push_back(dihedral(8));
    out.push_back(dicyclic(4));
    out.push_back(semidihedral(4));
    out.push_back(modular(4));
    out.push_back(direct_product(dihedral(4), z(2)));
    out.push_back(direct_product(dicyclic(2), z(2)));
    out.push_back(metacyclic("Z4:Z4", 4, 4, 0, 3));
    out.push_back(z(32));
    out.push_back(dihedral(16));
    out.push_back(dicyclic(8));
    out.push_back(semidihedral(5));
    out.push_back(modular(5));
    out.push_back(direct_product(dihedral(8), z(2)));
    out.push_back(direct_product(dihedral(4), z(4)));
    out.push_back(direct_product(direct_product(dihedral(4), z(2)), z(2)));
    out.push_back(metacyclic("Z8:Z4", 8, 4, 0, 7));
    out.push_back(direct_product(dicyclic(4), z(2)));
    out.push_back(direct_product(z(8), z(4)));
    out.push_back(dihedral(32));
    out.push_back(dicyclic(16));
    out.push_back(semidihedral(6));
    out.push_back(modular(6));
    out.push_back(direct_product(dihedral(4), dihedral(4)));
    out.push_back(direct_product(dihedral(16), z(2)));
    out.push_back(direct_product(dihedral(8), z(4)));
    out.push_back(direct_product(dicyclic(2), dihedral(4)));
    out.push_back(metacyclic("Z16:Z4", 16, 4, 0, 15));
    out.push_back(direct_product(z(8), z(8)));
    out.push_back(elementary_abelian2(6));
    return out;
  }
  if (name == "families64") {
    out.push_back(trivial_group());
    for (int n = 2; n <= 64; ++n) out.push_back(cyclic(n));
    for (int n = 2; n <= 32; ++n) out.push_back(n == 2 ? named(dihedral(2), "Z2xZ2") : dihedral(n));
    for (int n = 2; n <= 32; ++n) {
      if (n % 2 == 0 && n >= 4) out.push_back(direct_product(cyclic(2), cyclic(n)));
    }
    for (int n = 2; n <= 16; ++n) out.push_back(dicyclic(n));
    out.push_back(alternating4());
    out.push_back(symmetric(4));
    out.push_back(direct_product(alternating4(), cyclic(2)));
    out.push_back(elementary_abelian2(3));
    out.push_back(direct_product(dihedral(4), cyclic(2)));
    out.push_back(direct_product(symmetric(4), cyclic(2)));
    out.push_back(direct_product(dihedral(3), dihedral(3)));
    out.push_back(direct_product(alternating4(), cyclic(4)));
    return out;
  }
  throw std::invalid_argument("unknown built-in catalog '" + std::string(name) + "'");
}

}  // namespace cvt
