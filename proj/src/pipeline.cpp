#include "cvt/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "cvt/cayley.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/merge_split.hpp"

namespace cvt {

unsigned workers_from_env(unsigned fallback) {
  if (const char* env = std::getenv("CVT_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, fallback);
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

CatalogIngest ingest_catalog_entries(const std::vector<CatalogEntry>& entries, unsigned workers) {
  CatalogIngest out;
  if (entries.empty()) {
    out.warnings.push_back("catalog is empty");
    return out;
  }
  std::vector<FiniteGroup> built(entries.size());
  parallel_for(entries.size(), workers, [&](std::size_t i) { built[i] = build_group(entries[i]); });

  std::vector<std::vector<int>> profiles;
  for (auto& g : built) {
    const auto profile = g.order_profile();
    bool duplicate = false;
    for (std::size_t k = 0; k < out.groups.size() && !duplicate; ++k) {
      const auto& h = out.groups[k];
      if (h.order() != g.order() || g.order() > 64 || profiles[k] != profile) continue;
      if (abelianization(h) == abelianization(g) && groups_isomorphic(h, g)) {
        out.warnings.push_back("group " + g.label() + " duplicates " + h.label() + "; dropped");
        duplicate = true;
      }
    }
    if (!duplicate) {
      profiles.push_back(profile);
      out.groups.push_back(std::move(g));
    }
  }
  return out;
}

CatalogIngest ingest_catalog(const std::string& path, unsigned workers) {
  constexpr std::string_view prefix = "builtin:";
  if (path.starts_with(prefix)) {
    return ingest_catalog_entries(builtin_catalog(std::string_view(path).substr(prefix.size())), workers);
  }
  return ingest_catalog_entries(parse_catalog(read_text(path)), workers);
}

bool CensusStore::add(const Graph& g, std::string_view provenance) {
  if (!g.is_regular(3) || !g.is_connected()) throw std::invalid_argument("census graphs must be connected cubic");
  auto lab = canonical_labeling(g);
  return add_canonical(lab.form, g.relabel(lab.labeling), provenance);
}

bool CensusStore::add_canonical(const CanonicalForm& form, const Graph& canonical, std::string_view provenance) {
  if (provenance.empty()) throw std::invalid_argument("empty provenance");
  const Key key{canonical.order(), form.bytes};
  auto [it, inserted] = records_.try_emplace(key);
  if (inserted) {
    index_.emplace(form.bytes, key);
    it->second.graph = canonical;
    it->second.classification.canonical = form;
    it->second.classification.order = canonical.order();
  }
  it->second.provenance.emplace(provenance);
  return inserted;
}

void CensusStore::merge(const CensusStore& other) {
  for (const auto& [key, rec] : other.records_) {
    auto [it, inserted] = records_.try_emplace(key, rec);
    if (inserted) index_.emplace(key.second, key);
    if (!inserted) {
      it->second.provenance.insert(rec.provenance.begin(), rec.provenance.end());
      if (!it->second.classified && rec.classified) {
        it->second.classification = rec.classification;
        it->second.classified = true;
      }
    }
  }
  exhaustive_orders.insert(other.exhaustive_orders.begin(), other.exhaustive_orders.end());
}

void CensusStore::classify_all(unsigned workers) {
  std::vector<CensusRecord*> todo;
  for (auto& [key, rec] : records_) {
    if (!rec.classified) todo.push_back(&rec);
  }
  parallel_for(todo.size(), workers, [&](std::size_t i) {
    todo[i]->classification = classify(todo[i]->graph);
    todo[i]->classified = true;
  });
}

bool CensusStore::contains(const CanonicalForm& form) const { return find(form) != nullptr; }

const CensusRecord* CensusStore::find(const CanonicalForm& form) const {
  const auto it = index_.find(form.bytes);
  return it == index_.end() ? nullptr : &records_.at(it->second);
}

void CensusStore::set_classification(const CanonicalForm& form, const ClassificationRecord& c) {
  const auto it = index_.find(form.bytes);
  if (it == index_.end()) throw std::out_of_range("no such record");
  auto& rec = records_.at(it->second);
  rec.classification = c;
  rec.classified = true;
}

std::vector<const CensusRecord*> CensusStore::records() const {
  std::vector<const CensusRecord*> out;
  out.reserve(records_.size());
  for (const auto& [key, rec] : records_) out.push_back(&rec);
  return out;
}

std::vector<const CensusRecord*> CensusStore::records_of_order(std::size_t n) const {
  std::vector<const CensusRecord*> out;
  for (auto it = records_.lower_bound(Key{n, {}}); it != records_.end() && it->first.first == n; ++it) {
    out.push_back(&it->second);
  }
  return out;
}

namespace {

struct Candidate {
  Graph graph;
  std::string provenance;
};

std::vector<SplitSource> regular_map_sources(const FiniteGroup& g, std::size_t max_lambda) {
  std::vector<SplitSource> out;
  if (g.order() % 4 != 0 || g.order() / 4 > max_lambda) return out;
  const auto inv = g.involutions();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      const int x = inv[i];
      const int y = inv[j];
      if (g.commutator(x, y) != g.identity()) continue;
      for (int a : inv) {
        if (a == x || a == y || a == g.mul(x, y)) continue;
        const std::array<int, 3> gens{x, y, a};
        if (!g.generates(gens)) continue;
        try {
          auto pair = regular_map_pair(g, x, y, a);
          for (auto& d : pair.decompositions) {
            out.push_back({pair.coset.graph, std::move(d), pair.coset.right_action, "regular map in " + g.label()});
          }
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
  return out;
}

std::vector<SplitSource> arc_transitive_sources(const Graph& lambda, const std::string& origin) {
  std::vector<SplitSource> out;
  for (auto& d : arc_transitive_decompositions(lambda)) {
    out.push_back({lambda, std::move(d.decomposition), std::move(d.stabilizer), origin});
  }
  return out;
}

using SplitItem = std::function<std::vector<SplitSource>()>;

// Work items of the split route; inputs that fail their checks are reported in `rejected`.
std::vector<SplitItem> split_items(const CensusOptions& options, std::vector<std::string>& rejected) {
  const std::size_t max_lambda = options.max_order / 2;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<SplitItem> items;

  const int oracle_top = std::min<int>(options.tetravalent_oracle_max, static_cast<int>(max_lambda));
  for (int k = 5; k <= oracle_top; ++k) {
    for (auto& lambda : all_connected_tetravalent_graphs(k, workers)) {
      if (arc_orbit_count_any(lambda, graph_automorphisms(lambda).generators) != 1) continue;
      items.emplace_back([lambda, k] { return arc_transitive_sources(lambda, "tetravalent order " + std::to_string(k)); });
    }
  }

  for (std::size_t i = 0; i < options.at_graphs.size(); ++i) {
    const Graph& g = options.at_graphs[i];
    if (!g.is_regular(4) || !g.is_connected() || g.order() > max_lambda) continue;
    const std::string tag = "input graph " + std::to_string(i + 1);
    if (arc_orbit_count_any(g, graph_automorphisms(g).generators) != 1) {
      rejected.push_back(tag + ": tetravalent but not arc-transitive");
      continue;
    }
    items.emplace_back([&g, tag] { return arc_transitive_sources(g, tag); });
  }

  const auto& table = amalgam_table();
  for (std::size_t i = 0; i < options.quotients.size(); ++i) {
    const auto& q = options.quotients[i];
    const std::string tag = "quotient " + std::to_string(i + 1);
    if (q.row < 1 || q.row > static_cast<int>(table.size())) {
      rejected.push_back(tag + ": no table row " + std::to_string(q.row));
      continue;
    }
    const auto& p = table[q.row - 1];
    const auto check = verify_quotient(p, q);
    if (!check.valid) {
      rejected.push_back(tag + ": " + check.diagnostic);
      continue;
    }
    items.emplace_back([&p, &q, max_lambda, tag] {
      std::vector<SplitSource> out;
      auto cg = quotient_coset_graph(p, q);
      if (cg.graph.order() > max_lambda || cg.multi_edge_collapse || !cg.graph.is_regular(4)) return out;
      auto d = local_block_decomposition(cg.graph, cg.right_action);
      out.push_back({std::move(cg.graph), std::move(d), std::move(cg.right_action), tag});
      return out;
    });
  }

  for (const auto& g : options.catalog) {
    if (g.order() > options.regular_map_group_max || g.order() % 4 != 0 || g.order() / 4 > max_lambda) continue;
    items.emplace_back([&g, max_lambda] { return regular_map_sources(g, max_lambda); });
  }
  return items;
}

}  // namespace

CensusRun run_census(const CensusOptions& options) {
  const std::size_t max_order = options.max_order;
  if (max_order == 0 || max_order % 2 != 0) throw std::invalid_argument("max_order must be even and positive");
  const unsigned workers = std::max(1u, options.workers);
  const std::size_t max_lambda = max_order / 2;
  CensusRun run;

  // Work items; each produces candidates independently.
  std::vector<std::function<std::vector<Candidate>()>> items;

  for (const auto& g : options.catalog) {
    if (g.order() > max_order || g.order() < 4 || g.order() % 2 != 0 || !cubic_cayley_filter(g)) continue;
    items.emplace_back([&g] {
      std::vector<Candidate> out;
      for (auto& e : cayley_graphs_for_group(g)) out.push_back({std::move(e.graph), std::string(provenance::kCayley)});
      return out;
    });
  }

  if (options.ladders) {
    items.emplace_back([max_order] {
      std::vector<Candidate> out;
      for (std::size_t n = 2; 2 * n <= max_order; ++n) {
        out.push_back({ladder(static_cast<int>(n), LadderKind::Moebius), std::string(provenance::kLadder)});
        if (n >= 3) out.push_back({ladder(static_cast<int>(n), LadderKind::Circular), std::string(provenance::kLadder)});
      }
      return out;
    });
  }

  for (auto& item : split_items(options, run.rejected)) {
    items.emplace_back([item = std::move(item)] {
      std::vector<Candidate> out;
      for (const auto& src : item()) out.push_back({split(src.lambda, src.decomposition).graph, std::string(provenance::kSplit)});
      return out;
    });
  }

  for (std::size_t i = 0; i < options.at_graphs.size(); ++i) {
    const Graph& g = options.at_graphs[i];
    const std::string tag = "input graph " + std::to_string(i + 1);
    if (!g.is_connected()) {
      run.rejected.push_back(tag + ": disconnected");
      continue;
    }
    if (g.is_regular(4)) continue;  // split route
    if (!g.is_regular(3)) {
      run.rejected.push_back(tag + ": neither cubic nor tetravalent");
      continue;
    }
    if (g.order() > max_order) continue;
    const auto aut = graph_automorphisms(g);
    if (orbit_count(aut.generators, g.order()) != 1) {
      run.rejected.push_back(tag + ": not vertex-transitive");
      continue;
    }
    if (arc_orbit_count_any(g, aut.generators) != 1) run.warnings.push_back(tag + ": vertex- but not arc-transitive");
    items.emplace_back([&g] { return std::vector<Candidate>{{g, std::string(provenance::kExternal)}}; });
  }

  std::vector<std::vector<Candidate>> produced(items.size());
  parallel_for(items.size(), workers, [&](std::size_t i) { produced[i] = items[i](); });

  // Canonical forms in parallel, insertion in item order.
  std::vector<Candidate*> flat;
  for (auto& batch : produced) {
    for (auto& c : batch) flat.push_back(&c);
  }
  std::vector<CanonicalLabeling> labels(flat.size());
  parallel_for(flat.size(), workers, [&](std::size_t i) { labels[i] = canonical_labeling(flat[i]->graph); });
  for (std::size_t i = 0; i < flat.size(); ++i) {
    ++run.route_hits[flat[i]->provenance];
    run.store.add_canonical(labels[i].form, flat[i]->graph.relabel(labels[i].labeling), flat[i]->provenance);
  }
  run.store.classify_all(workers);

  const int oracle_top = std::min<int>(options.tetravalent_oracle_max, static_cast<int>(max_lambda));
  for (std::size_t n = 4; n <= max_order; n += 2) {
    const bool catalog_ok = n <= options.catalog_complete_up_to;
    const bool at_ok = n / 2 < 5 || static_cast<int>(n / 2) <= oracle_top;
    if (catalog_ok && at_ok && n <= options.arc_transitive_covered_up_to) run.store.exhaustive_orders.insert(n);
  }
  return run;
}

std::vector<SplitSource> split_route_sources(const CensusOptions& options) {
  if (options.max_order == 0 || options.max_order % 2 != 0) {
    throw std::invalid_argument("max_order must be even and positive");
  }
  std::vector<std::string> rejected;
  auto items = split_items(options, rejected);
  std::vector<std::vector<SplitSource>> produced(items.size());
  parallel_for(items.size(), std::max(1u, options.workers), [&](std::size_t i) { produced[i] = items[i](); });
  std::vector<SplitSource> out;
  for (auto& batch : produced) {
    for (auto& s : batch) out.push_back(std::move(s));
  }
  return out;
}

std::vector<CanonicalForm> oracle_vertex_transitive(int n, unsigned workers) {
  const auto graphs = all_connected_cubic_graphs(n, workers);
  std::vector<std::optional<CanonicalForm>> forms(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) {
    auto lab = canonical_labeling(graphs[i]);
    if (orbit_count(lab.automorphisms, graphs[i].order()) == 1) forms[i] = lab.form;
  });
  std::vector<CanonicalForm> out;
  for (auto& f : forms) {
    if (f) out.push_back(std::move(*f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleReport oracle_crosscheck(const CensusStore& store, int n, unsigned workers) {
  if (n < 4 || n > 14 || n % 2 != 0) throw std::invalid_argument("oracle cross-check needs even n in [4, 14]");
  OracleReport r;
  r.order = static_cast<std::size_t>(n);
  const auto oracle = oracle_vertex_transitive(n, workers);
  r.oracle_count = oracle.size();
  std::vector<CanonicalForm> have;
  for (const auto* rec : store.records_of_order(r.order)) have.push_back(rec->classification.canonical);
  std::sort(have.begin(), have.end());
  r.store_count = have.size();
  std::set_difference(oracle.begin(), oracle.end(), have.begin(), have.end(), std::back_inserter(r.missing));
  std::set_difference(have.begin(), have.end(), oracle.begin(), oracle.end(), std::back_inserter(r.extra));
  return r;
}

std::size_t cubic_moore_bound(int d) { return 3 * (std::size_t{1} << d) - 2; }

ExtremalTables extremal_tables(const CensusStore& store) {
  ExtremalTables t;
  // Every even order from 4 to n is exhaustive.
  const auto covered = [&](std::size_t n) {
    for (std::size_t k = 4; k <= n; k += 2) {
      if (!store.exhaustive_orders.contains(k)) return false;
    }
    return true;
  };
  for (const auto* rec : store.records()) {
    const auto& c = rec->classification;
    if (!rec->classified) continue;
    const auto smallest = [&](std::map<int, ExtremalEntry>& m) {
      auto [it, inserted] = m.try_emplace(c.girth, ExtremalEntry{c.order, c.canonical, false});
      if (!inserted && c.order < it->second.order) it->second = {c.order, c.canonical, false};
    };
    const auto largest = [&](std::map<int, ExtremalEntry>& m) {
      auto [it, inserted] = m.try_emplace(c.diameter, ExtremalEntry{c.order, c.canonical, false});
      if (!inserted && c.order > it->second.order) it->second = {c.order, c.canonical, false};
    };
    smallest(t.n_vt_girth);
    largest(t.m_vt_diam);
    if (c.is_cayley) {
      smallest(t.n_cay_girth);
      largest(t.m_cay_diam);
    }
  }
  for (auto* m : {&t.n_vt_girth, &t.n_cay_girth}) {
    for (auto& [g, e] : *m) e.exact = covered(e.order);
  }
  for (auto* m : {&t.m_vt_diam, &t.m_cay_diam}) {
    for (auto& [d, e] : *m) e.exact = covered(cubic_moore_bound(d));
  }
  return t;
}

std::string format_tables(const ExtremalTables& t) {
  std::ostringstream os;
  const auto cell = [](const std::map<int, ExtremalEntry>& m, int key) {
    const auto it = m.find(key);
    if (it == m.end()) return std::string("-");
    return std::to_string(it->second.order) + (it->second.exact ? "" : "*");
  };
  std::set<int> girths, diameters;
  for (const auto& [g, e] : t.n_vt_girth) girths.insert(g);
  for (const auto& [d, e] : t.m_vt_diam) diameters.insert(d);
  os << "girth  n_cay  n_vt\n";
  for (int g : girths) os << g << "  " << cell(t.n_cay_girth, g) << "  " << cell(t.n_vt_girth, g) << '\n';
  os << "diameter  m_cay  m_vt  moore\n";
  for (int d : diameters) {
    os << d << "  " << cell(t.m_cay_diam, d) << "  " << cell(t.m_vt_diam, d) << "  " << cubic_moore_bound(d) << '\n';
  }
  os << "(* = not proven extremal: census not exhaustive far enough)\n";
  return os.str();
}

namespace {

std::string join_provenance(const std::set<std::string>& p) {
  std::string out;
  for (const auto& s : p) {
    if (!out.empty()) out += ';';
    out += s;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << data;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error("bad boolean '" + s + "'");
}

}  // namespace

std::string census_csv(const CensusStore& store) {
  std::ostringstream os;
  os << kCensusCsvHeader << '\n';
  const auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto* rec : store.records()) {
    const auto& c = rec->classification;
    if (!rec->classified) throw std::logic_error("unclassified record in store");
    os << c.order << ',' << c.canonical.bytes << ',' << c.m_full << ',' << b(c.is_cayley) << ',' << b(c.is_grr)
       << ',' << b(c.is_dihedrant) << ',' << c.girth << ',' << c.diameter << ',' << b(c.hamiltonian) << ','
       << join_provenance(rec->provenance) << '\n';
  }
  return os.str();
}

void emit(const CensusStore& store, EmitFormat format, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  if (format != EmitFormat::Graph6) write_file(dir / "census.csv", census_csv(store));
  if (format != EmitFormat::Csv) {
    std::string g6;
    for (const auto* rec : store.records()) g6 += graph6_encode(rec->graph) + '\n';
    write_file(dir / "graphs.g6", g6);
  }
  nlohmann::json meta;
  meta["records"] = store.size();
  std::map<std::string, std::size_t> per_order, per_route;
  for (const auto* rec : store.records()) {
    ++per_order[std::to_string(rec->classification.order)];
    for (const auto& p : rec->provenance) ++per_route[p];
  }
  meta["orders"] = per_order;
  meta["provenance"] = per_route;
  meta["exhaustive_orders"] = std::vector<std::size_t>(store.exhaustive_orders.begin(), store.exhaustive_orders.end());
  write_file(dir / "meta.json", meta.dump(2) + '\n');
}

CensusStore load_store(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path base(dir);
  CensusStore store;
  std::istringstream in(read_text((base / "census.csv").string()));
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCensusCsvHeader) throw std::runtime_error("census.csv: unexpected header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    const std::string where = "census.csv line " + std::to_string(line_no) + ": ";
    if (f.size() != 10) throw std::runtime_error(where + "expected 10 fields");
    try {
      const Graph g = graph6_decode(f[1]);
      const auto form = canonical_form(g);
      if (form.bytes != f[1]) throw std::runtime_error("graph6 is not canonical");
      ClassificationRecord c;
      c.canonical = form;
      c.order = std::stoul(f[0]);
      if (c.order != g.order()) throw std::runtime_error("order mismatch");
      c.m_full = std::stoi(f[2]);
      c.is_cayley = parse_bool(f[3]);
      c.is_grr = parse_bool(f[4]);
      c.is_dihedrant = parse_bool(f[5]);
      c.girth = std::stoi(f[6]);
      c.diameter = std::stoi(f[7]);
      c.hamiltonian = parse_bool(f[8]);
      std::stringstream ps(f[9]);
      std::string p;
      bool any = false;
      while (std::getline(ps, p, ';')) {
        store.add_canonical(form, g, p);
        any = true;
      }
      if (!any) throw std::runtime_error("empty provenance");
      store.set_classification(form, c);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  const auto meta_path = base / "meta.json";
  if (fs::exists(meta_path)) {
    const auto meta = nlohmann::json::parse(read_text(meta_path.string()));
    for (std::size_t n : meta.value("exhaustive_orders", std::vector<std::size_t>{})) store.exhaustive_orders.insert(n);
  }
  return store;
}

}  // namespace cvt
