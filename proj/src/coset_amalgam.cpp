#include "cvt/coset_amalgam.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cvt/perm_group.hpp"
#include "cvt/transitivity.hpp"

namespace cvt {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names) : names_(names) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  Word parse() {
    Word w = word();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("word '" + text_ + "' at " + std::to_string(pos_) + ": " + msg);
  }

  bool at(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  int generator(char ch) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].size() == 1 && names_[i][0] == ch) return static_cast<int>(i);
    }
    return -1;
  }

  Word word() {
    Word w;
    while (pos_ < text_.size() && !at(')') && !at(']') && !at(',')) {
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word atom() {
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Word w = word();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return w;
    }
    if (ch == '[') {
      ++pos_;
      Word u = word();
      if (!at(',')) fail("expected ','");
      ++pos_;
      Word v = word();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      Word w = inverse_word(u);
      const Word vi = inverse_word(v);
      w.insert(w.end(), vi.begin(), vi.end());
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      return w;
    }
    const int g = generator(ch);
    if (g < 0) fail("unknown generator '" + std::string(1, ch) + "'");
    ++pos_;
    return {Letter{g, 1}};
  }

  Word factor() {
    Word w = atom();
    while (at('^')) {
      ++pos_;
      if (pos_ >= text_.size()) fail("missing exponent");
      const char ch = text_[pos_];
      if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
        const bool negative = ch == '-';
        if (negative) ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("missing exponent");
        const int k = std::stoi(text_.substr(start, pos_ - start));
        const Word base = negative ? inverse_word(w) : w;
        w.clear();
        for (int i = 0; i < k; ++i) w.insert(w.end(), base.begin(), base.end());
      } else {
        const int g = generator(ch);
        if (g < 0) fail("unknown generator '" + std::string(1, ch) + "'");
        ++pos_;
        Word c{Letter{g, -1}};
        c.insert(c.end(), w.begin(), w.end());
        c.push_back(Letter{g, 1});
        w = std::move(c);
      }
    }
    return w;
  }

  std::string text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generator_names) {
  return WordParser(text, generator_names).parse();
}

Word reduce_word(Word w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->generator, -it->exponent});
  return out;
}

std::string format_word(const Word& w, std::span<const std::string> generator_names) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += generator_names[l.generator];
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Presentation make_presentation(std::string label, std::vector<std::string> generators,
                               std::vector<std::string> relators,
                               std::vector<std::string> local_generators, int local_order,
                               std::string arc_generator) {
  Presentation p;
  p.label = std::move(label);
  p.generator_names = std::move(generators);
  for (const auto& r : relators) p.relators.push_back(parse_word(r, p.generator_names));
  p.relator_text = std::move(relators);
  for (const auto& l : local_generators) {
    if (p.generator_index(l) < 0) throw std::invalid_argument("unknown local generator " + l);
  }
  p.local_generator_names = std::move(local_generators);
  p.local_order = local_order;
  if (p.generator_index(arc_generator) < 0) throw std::invalid_argument("unknown arc generator");
  p.arc_generator = std::move(arc_generator);
  return p;
}

const std::vector<Presentation>& amalgam_table() {
  static const std::vector<Presentation> table = [] {
    std::vector<Presentation> t;
    const std::vector<std::string> g2{"a", "y"};
    const std::vector<std::string> g4{"a", "b", "x", "y"};
    const std::vector<std::string> g5{"a", "b", "c", "x", "y"};
    const std::vector<std::string> g6{"a", "b", "c", "d", "x", "y"};

    t.push_back(make_presentation("1", g2, {"a^4", "y^2"}, {"a"}, 4, "y"));

    t.push_back(make_presentation("2", g4, {"a^2", "b^2", "[a,b]", "x^2", "a^xb", "y^2", "[y,b]"},
                                  {"a", "b", "x"}, 8, "y"));
    t.push_back(make_presentation("3", g4, {"a^2", "b^2", "[a,b]", "x^2", "a^xb", "y^2b", "[y,b]"},
                                  {"a", "b", "x"}, 8, "y"));

    const auto row16 = [&](std::string label, std::string ac, std::string x2) {
      return make_presentation(std::move(label), g5,
                               {"a^2", "b^2", "c^2", "[a,b]", std::move(ac), "[b,c]", std::move(x2),
                                "a^xc", "[x,b]", "c^xa", "y^2", "b^yc"},
                               {"a", "b", "c", "x"}, 16, "y");
    };
    t.push_back(row16("4", "[a,c]", "x^2"));
    t.push_back(row16("5", "[a,c]", "x^2b"));
    t.push_back(row16("6", "[a,c]b", "x^2"));
    t.push_back(row16("7", "[a,c]b", "x^2b"));

    const auto row32 = [&](std::string label, std::string ad, std::string y2) {
      return make_presentation(std::move(label), g6,
                               {"a^2", "b^2", "c^2", "d^2", "[a,b]", "[a,c]", "[b,c]", "[b,d]",
                                "[c,d]", std::move(ad), "x^2", "a^xd", "b^xc", std::move(y2), "b^yd",
                                "[c,y]", "d^yb"},
                               {"a", "b", "c", "d", "x"}, 32, "y");
    };
    t.push_back(row32("8", "[a,d]", "y^2"));
    t.push_back(row32("9", "[a,d]", "y^2c"));
    t.push_back(row32("10", "[a,d]bc", "y^2"));
    t.push_back(row32("11", "[a,d]bc", "y^2c"));
    return t;
  }();
  return table;
}

int evaluate_word(const FiniteGroup& g, const Word& w, std::span<const int> images) {
  int value = g.identity();
  for (const auto& l : w) {
    const int e = images[l.generator];
    value = g.mul(value, l.exponent > 0 ? e : g.inv(e));
  }
  return value;
}

CosetGraph coset_graph(const FiniteGroup& g, std::span<const int> h_gens, int a) {
  const int order = static_cast<int>(g.order());
  if (a < 0 || a >= order) throw std::out_of_range("element out of range");
  CosetGraph out;
  out.subgroup = g.subgroup(h_gens);
  if (std::binary_search(out.subgroup.begin(), out.subgroup.end(), a)) {
    throw std::invalid_argument("coset graph: a lies in H");
  }
  out.coset_of.assign(order, -1);
  for (int e = 0; e < order; ++e) {
    if (out.coset_of[e] >= 0) continue;
    const int id = static_cast<int>(out.representative.size());
    out.representative.push_back(e);
    for (int h : out.subgroup) out.coset_of[g.mul(h, e)] = id;
  }
  const int n = static_cast<int>(out.representative.size());

  std::set<std::pair<int, int>> edges;
  for (int e = 0; e < order; ++e) {
    const int u = out.coset_of[e];
    const int v = out.coset_of[g.mul(a, e)];
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  const std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
  out.graph = Graph::from_edges(n, edge_list);

  // HaH as a union of right cosets of H.
  std::set<int> double_coset;
  for (int h : out.subgroup) double_coset.insert(out.coset_of[g.mul(a, h)]);
  out.double_coset_valency = double_coset.size();
  const int a_inv = g.inv(a);
  out.self_paired = false;
  for (int h : out.subgroup) {
    if (out.coset_of[g.mul(a, h)] == out.coset_of[a_inv]) out.self_paired = true;
  }
  out.multi_edge_collapse = !out.graph.is_regular(out.double_coset_valency);

  std::vector<int> gens = g.generator_marks();
  if (gens.empty()) gens = small_generating_set(g);
  for (int s : gens) {
    std::vector<int> images(n);
    for (int v = 0; v < n; ++v) images[v] = out.coset_of[g.mul(out.representative[v], s)];
    out.right_action.emplace_back(std::move(images));
  }

  std::vector<int> ha(out.subgroup);
  ha.push_back(a);
  if (g.generates(ha) && !out.graph.is_connected()) {
    throw std::logic_error("coset graph of a generating pair is disconnected");
  }
  return out;
}

RegularMapPair regular_map_pair(const FiniteGroup& g, int x, int y, int a) {
  const int e = g.identity();
  for (const auto& [name, el] : {std::pair{"x", x}, std::pair{"y", y}, std::pair{"a", a}}) {
    if (el < 0 || el >= static_cast<int>(g.order())) throw std::out_of_range("element out of range");
    if (g.mul(el, el) != e) throw std::invalid_argument(std::string(name) + "^2 != 1");
  }
  if (g.commutator(x, y) != e) throw std::invalid_argument("[x,y] != 1");
  const std::array<int, 3> gens{x, y, a};
  if (!g.generates(gens)) throw std::invalid_argument("not generating");
  const std::array<int, 2> h{x, y};
  RegularMapPair out;
  out.coset = coset_graph(g, h, a);
  if (out.coset.subgroup.size() != 4) throw std::invalid_argument("<x,y> does not have order 4");
  if (!out.coset.graph.is_regular(4) || out.coset.double_coset_valency != 4) {
    throw std::invalid_argument("coset graph is not tetravalent");
  }

  const auto& cos = out.coset;
  const int start = cos.coset_of[e];
  const std::array<int, 3> steps{g.mul(a, x), g.mul(a, y), g.mul(a, g.mul(x, y))};
  for (int k = 0; k < 3; ++k) {
    const int s = steps[k];
    std::vector<int> cyc;
    int w = e;
    do {
      cyc.push_back(cos.coset_of[w]);
      w = g.mul(w, s);
    } while (cos.coset_of[w] != start);
    if (cyc.size() < 3) throw std::invalid_argument("orbit cycle has fewer than 3 vertices");

    std::set<std::vector<int>> cycles;
    for (int t = 0; t < static_cast<int>(g.order()); ++t) {
      std::vector<int> image;
      image.reserve(cyc.size());
      for (int v : cyc) image.push_back(cos.coset_of[g.mul(cos.representative[v], t)]);
      cycles.insert(normalize_cycle(std::move(image)));
    }
    CycleDecomposition d{{cycles.begin(), cycles.end()}};
    const auto check = validate_cycle_decomposition(cos.graph, d);
    if (!check.valid) throw std::logic_error("orbit decomposition invalid: " + check.diagnostic);
    if (!preserves_decomposition(d, cos.right_action)) {
      throw std::logic_error("orbit decomposition not invariant");
    }
    out.decompositions[k] = std::move(d);
  }
  return out;
}

MarkedQuotient parse_marked_quotient(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  MarkedQuotient q;
  bool header = false;
  std::vector<std::pair<std::string, std::string>> raw;
  const auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header) {
      std::istringstream ls(line);
      std::string word, rest;
      int row = 0;
      if (!(ls >> word >> row) || word != "quotient" || row < 1 || (ls >> rest)) {
        fail("expected 'quotient <row>'");
      }
      q.row = row;
      header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'name = <cycles>'");
    std::string name = line.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (name.empty()) fail("missing generator name");
    for (const auto& [n, _] : raw) {
      if (n == name) fail("generator '" + name + "' given twice");
    }
    std::string cycles = line.substr(eq + 1);
    while (!cycles.empty() && std::isspace(static_cast<unsigned char>(cycles.back()))) cycles.pop_back();
    raw.emplace_back(std::move(name), std::move(cycles));
  }
  if (!header) throw std::invalid_argument("missing 'quotient <row>' header");
  if (raw.empty()) throw std::invalid_argument("no generator images");

  std::size_t degree = 1;
  for (const auto& [name, cycles] : raw) {
    int value = -1;
    for (char ch : cycles) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        value = (value < 0 ? 0 : value * 10) + (ch - '0');
      } else {
        if (value >= 0) degree = std::max<std::size_t>(degree, static_cast<std::size_t>(value) + 1);
        value = -1;
      }
    }
    if (value >= 0) degree = std::max<std::size_t>(degree, static_cast<std::size_t>(value) + 1);
  }
  std::vector<Permutation> perms;
  for (const auto& [name, cycles] : raw) {
    try {
      perms.push_back(Permutation::from_cycles(cycles, degree));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("generator '" + name + "': " + e.what());
    }
  }
  q.group = group_from_generators(perms, "quotient " + std::to_string(q.row));
  for (std::size_t i = 0; i < raw.size(); ++i) q.images[raw[i].first] = *q.group.index_of(perms[i]);
  return q;
}

MarkedQuotient read_marked_quotient(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_marked_quotient(buf.str());
}

std::string write_marked_quotient(const MarkedQuotient& q, std::span<const std::string> order) {
  if (!q.group.has_realization()) throw std::invalid_argument("quotient group has no permutation realisation");
  std::ostringstream os;
  os << "quotient " << q.row << '\n';
  for (const auto& name : order) {
    os << name << " = " << q.group.realization(q.images.at(name)).to_cycles() << '\n';
  }
  return os.str();
}

QuotientCheck verify_quotient(const Presentation& p, const MarkedQuotient& q) {
  for (const auto& [name, _] : q.images) {
    if (p.generator_index(name) < 0) throw std::invalid_argument("unknown generator '" + name + "'");
  }
  std::vector<int> images;
  for (const auto& name : p.generator_names) {
    const auto it = q.images.find(name);
    if (it == q.images.end()) throw std::invalid_argument("no image for generator '" + name + "'");
    if (it->second < 0 || it->second >= static_cast<int>(q.group.order())) {
      throw std::invalid_argument("image of '" + name + "' out of range");
    }
    images.push_back(it->second);
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (evaluate_word(q.group, p.relators[i], images) != q.group.identity()) {
      return {false, "relator " + p.relator_text[i] + " fails"};
    }
  }
  if (!q.group.generates(images)) return {false, "images do not generate the group"};
  std::vector<int> local;
  for (const auto& name : p.local_generator_names) local.push_back(q.images.at(name));
  const auto local_order = q.group.subgroup(local).size();
  if (local_order != static_cast<std::size_t>(p.local_order)) {
    return {false, "local subgroup has order " + std::to_string(local_order) + ", expected " +
                       std::to_string(p.local_order)};
  }
  return {true, {}};
}

CosetGraph quotient_coset_graph(const Presentation& p, const MarkedQuotient& q) {
  std::vector<int> local;
  for (const auto& name : p.local_generator_names) local.push_back(q.images.at(name));
  return coset_graph(q.group, local, q.images.at(p.arc_generator));
}

bool element_order_bound_check(std::span<const Permutation> gens, std::size_t n, int p,
                               std::uint64_t cap) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("p must be prime");
  }
  if (gens.empty()) return true;
  const std::size_t degree = gens.front().degree();
  PermGroup group(degree, std::vector<Permutation>(gens.begin(), gens.end()));
  const std::uint64_t order = group.order();
  if (order > cap) throw LimitExceeded("group too large for element order check");
  const auto reps = orbit_representatives(gens, degree);
  for (std::size_t v = 0; v < degree; ++v) {
    if (reps[v] != static_cast<int>(v)) continue;
    std::uint64_t stab = order / group.orbit(static_cast<int>(v)).size();
    while (stab % static_cast<std::uint64_t>(p) == 0) stab /= static_cast<std::uint64_t>(p);
    if (stab != 1) {
      throw std::invalid_argument("stabiliser of point " + std::to_string(v) + " is not a p-group");
    }
  }
  bool ok = true;
  group.for_each_element([&](const Permutation& e) {
    if (e.order() > n) ok = false;
  }, cap);
  return ok;
}

}  // namespace cvt
