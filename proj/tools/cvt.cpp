#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cvt/canonical.hpp"
#include "cvt/catalog.hpp"
#include "cvt/coset_amalgam.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/pipeline.hpp"
#include "cvt/transitivity.hpp"

namespace {

using namespace cvt;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string csv_row(const ClassificationRecord& c, const std::string& provenance) {
  const auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << c.order << ',' << c.canonical.bytes << ',' << c.m_full << ',' << b(c.is_cayley) << ',' << b(c.is_grr) << ','
     << b(c.is_dihedrant) << ',' << c.girth << ',' << c.diameter << ',' << b(c.hamiltonian) << ',' << provenance;
  return os.str();
}

struct CensusArgs {
  std::string config;
  std::string catalog;
  std::size_t max_order = 0;
  std::string at_graphs;
  std::vector<std::string> quotients;
  std::string out;
  std::string format = "both";
  unsigned workers = 0;
  int tetravalent_max = 10;
  long catalog_complete = -1;
};

int run_census_command(CLI::App& cmd, CensusArgs a) {
  // Config values only fill options not given on the command line.
  if (!a.config.empty()) {
    const auto cfg = nlohmann::json::parse(read_text(a.config));
    const auto fill = [&](const char* flag, const char* key, auto& target) {
      if (cmd.count(flag) == 0 && cfg.contains(key)) cfg.at(key).get_to(target);
    };
    fill("--catalog", "catalog", a.catalog);
    fill("--max-order", "max_order", a.max_order);
    fill("--at-graphs", "at_graphs", a.at_graphs);
    fill("--quotients", "quotients", a.quotients);
    fill("--out", "out", a.out);
    fill("--format", "format", a.format);
    fill("--workers", "workers", a.workers);
    fill("--tetravalent-max", "tetravalent_max", a.tetravalent_max);
    fill("--catalog-complete-up-to", "catalog_complete_up_to", a.catalog_complete);
  }
  if (a.max_order == 0) throw CLI::ValidationError("--max-order", "required (flag or config)");
  if (a.out.empty()) throw CLI::ValidationError("--out", "required (flag or config)");

  CensusOptions opt;
  opt.max_order = a.max_order;
  opt.workers = a.workers ? a.workers : workers_from_env(1);
  opt.tetravalent_oracle_max = a.tetravalent_max;
  if (!a.catalog.empty()) {
    auto ingest = ingest_catalog(a.catalog, opt.workers);
    for (const auto& w : ingest.warnings) std::cerr << "warning: " << w << '\n';
    opt.catalog = std::move(ingest.groups);
  }
  if (a.catalog_complete >= 0) {
    opt.catalog_complete_up_to = static_cast<std::size_t>(a.catalog_complete);
  } else if (a.catalog == "builtin:small14") {
    opt.catalog_complete_up_to = 14;
  }
  if (!a.at_graphs.empty()) opt.at_graphs = read_graph6_file(a.at_graphs);
  for (const auto& q : a.quotients) opt.quotients.push_back(read_marked_quotient(q));

  const EmitFormat format = a.format == "csv" ? EmitFormat::Csv : a.format == "graph6" ? EmitFormat::Graph6 : EmitFormat::Both;
  auto run = run_census(opt);
  for (const auto& w : run.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& r : run.rejected) std::cerr << "rejected: " << r << '\n';
  emit(run.store, format, a.out);

  std::map<std::size_t, std::size_t> per_order;
  for (const auto* rec : run.store.records()) ++per_order[rec->classification.order];
  std::cout << "records: " << run.store.size() << '\n';
  for (const auto& [n, count] : per_order) {
    std::cout << "  order " << n << ": " << count << (run.store.exhaustive_orders.contains(n) ? "" : " (best effort)")
              << '\n';
  }
  return 0;
}

Graph single_graph(const std::string& path) {
  const auto graphs = read_graph6_file(path);
  if (graphs.size() != 1) throw std::runtime_error(path + ": expected exactly one graph");
  return graphs.front();
}

std::vector<Permutation> group_reference(const std::string& ref, const Graph& g) {
  if (ref == "aut") return graph_automorphisms(g).generators;
  const auto entries = parse_catalog(read_text(ref));
  if (entries.empty()) throw std::runtime_error(ref + ": no group stanza");
  if (entries.front().degree != g.order()) throw std::runtime_error(ref + ": group degree differs from graph order");
  return entries.front().generators;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census toolkit for cubic vertex-transitive graphs"};
  app.require_subcommand(1);

  CensusArgs census;
  auto* c = app.add_subcommand("census", "Build a census and write census.csv, graphs.g6 and meta.json");
  c->add_option("--config", census.config, "JSON file with defaults for the options below")->check(CLI::ExistingFile);
  c->add_option("--catalog", census.catalog, "Group catalog file or builtin:<name>");
  c->add_option("--max-order", census.max_order, "Largest graph order (even)");
  c->add_option("--at-graphs", census.at_graphs, "graph6 file of arc-transitive cubic or tetravalent graphs");
  c->add_option("--quotients", census.quotients, "Marked quotient files");
  c->add_option("--out", census.out, "Output directory");
  c->add_option("--format", census.format, "csv, graph6 or both")->check(CLI::IsMember({"csv", "graph6", "both"}));
  c->add_option("--workers", census.workers, "Worker threads (default: CVT_WORKERS or 1)");
  c->add_option("--tetravalent-max", census.tetravalent_max, "Largest order for generated tetravalent inputs")
      ->check(CLI::Range(0, 12));
  c->add_option("--catalog-complete-up-to", census.catalog_complete,
                "Orders up to which the catalog lists every group");

  int oracle_order = 0;
  std::string oracle_out;
  auto* o = app.add_subcommand("oracle", "Exhaustive generation of connected cubic graphs of one order");
  o->add_option("--order", oracle_order, "Even order 4..14")->required();
  o->add_option("--out", oracle_out, "Write the vertex-transitive ones as graph6");

  std::string classify_in;
  auto* k = app.add_subcommand("classify", "Classify connected cubic vertex-transitive graphs");
  k->add_option("--in", classify_in, "graph6 file")->required()->check(CLI::ExistingFile);

  std::string merge_in, merge_group;
  auto* m = app.add_subcommand("merge", "Contract the partner matching of a locally Z2^[3] pair");
  m->add_option("--in", merge_in, "graph6 file with one cubic graph")->required()->check(CLI::ExistingFile);
  m->add_option("--group", merge_group, "'aut' or a catalog file whose first group acts on the vertices")->required();

  std::string split_in, split_cycles;
  auto* s = app.add_subcommand("split", "Split a tetravalent graph along a cycle decomposition");
  s->add_option("--in", split_in, "graph6 file with one tetravalent graph")->required()->check(CLI::ExistingFile);
  s->add_option("--cycles", split_cycles, "Cycle decomposition file")->required()->check(CLI::ExistingFile);

  std::string tables_store;
  auto* t = app.add_subcommand("tables", "Extremal girth and diameter tables of a stored census");
  t->add_option("--store", tables_store, "Directory written by census")->required()->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return run_census_command(*c, census);

    if (o->parsed()) {
      const unsigned workers = workers_from_env(1);
      const auto all = all_connected_cubic_graphs(oracle_order, workers);
      const auto vt = oracle_vertex_transitive(oracle_order, workers);
      std::cout << "order " << oracle_order << ": connected cubic " << all.size() << ", vertex-transitive "
                << vt.size() << '\n';
      if (!oracle_out.empty()) {
        std::vector<Graph> graphs;
        for (const auto& f : vt) graphs.push_back(graph6_decode(f.bytes));
        write_graph6_file(oracle_out, graphs);
      }
      return 0;
    }

    if (k->parsed()) {
      std::cout << kCensusCsvHeader << '\n';
      for (const auto& g : read_graph6_file(classify_in)) std::cout << csv_row(classify(g), "input") << '\n';
      return 0;
    }

    if (m->parsed()) {
      const Graph g = single_graph(merge_in);
      const auto gens = group_reference(merge_group, g);
      const auto r = merge(g, gens);
      std::cout << graph6_encode(r.quotient) << '\n' << write_cycles(r.decomposition, r.quotient.order());
      return 0;
    }

    if (s->parsed()) {
      const Graph g = single_graph(split_in);
      const auto [cycles, n] = parse_cycles(read_text(split_cycles));
      if (n != g.order()) throw std::runtime_error("cycle file order differs from graph order");
      std::cout << graph6_encode(split(g, cycles).graph) << '\n';
      return 0;
    }

    if (t->parsed()) {
      std::cout << format_tables(extremal_tables(load_store(tables_store)));
      return 0;
    }
  } catch (const DegeneratePairError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
