#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "cvt/canonical.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/pipeline.hpp"

using namespace cvt;
namespace fs = std::filesystem;
namespace nm = cvt::named;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("cvt_test_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const CensusRecord* record_of(const CensusStore& store, const Graph& g) { return store.find(canonical_form(g)); }

CensusRun small_census(std::size_t max_order, unsigned workers = 2) {
  CensusOptions opt;
  opt.max_order = max_order;
  opt.catalog = ingest_catalog("builtin:small14").groups;
  opt.catalog_complete_up_to = 14;
  opt.workers = workers;
  return run_census(opt);
}

}  // namespace

TEST_CASE("parallel_for visits every index and rethrows") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 4, [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("catalog ingestion") {
  const auto small = ingest_catalog("builtin:small14");
  CHECK(small.groups.size() == 27);
  CHECK(small.warnings.empty());
  std::map<std::size_t, int> per_order;
  for (const auto& g : small.groups) ++per_order[g.order()];
  CHECK(per_order[8] == 5);
  CHECK(per_order[12] == 5);

  const auto dir = scratch_dir("ingest");
  std::ofstream(dir / "dup.txt") << "group A degree 4 order 4\n(0 1 2 3)\n\ngroup B degree 5 order 4\n(1 2 3 4)\n\n"
                                    "group C degree 4 order 4\n(0 1)(2 3)\n(0 2)(1 3)\n";
  const auto dup = ingest_catalog((dir / "dup.txt").string());
  CHECK(dup.groups.size() == 2);
  REQUIRE(dup.warnings.size() == 1);
  CHECK(dup.warnings[0].find("duplicates") != std::string::npos);

  std::ofstream(dir / "bad.txt") << "group A degree 3 order 3\n(0 1\n";
  try {
    ingest_catalog((dir / "bad.txt").string());
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::ofstream(dir / "empty.txt") << "";
  const auto empty = ingest_catalog((dir / "empty.txt").string());
  CHECK(empty.groups.empty());
  CHECK(empty.warnings.size() == 1);
  CHECK_THROWS(ingest_catalog("builtin:nope"));
  fs::remove_all(dir);
}

TEST_CASE("census with no catalog holds only ladders") {
  CensusOptions opt;
  opt.max_order = 6;
  const auto run = run_census(opt);
  CHECK(run.store.size() == 3);
  for (const auto* r : run.store.records()) CHECK(r->provenance == std::set<std::string>{"ladder"});
  opt.max_order = 7;
  CHECK_THROWS_AS(run_census(opt), std::invalid_argument);
  opt.max_order = 0;
  CHECK_THROWS_AS(run_census(opt), std::invalid_argument);
}

TEST_CASE("census to order 10 with an arc-transitive input") {
  CensusOptions opt;
  opt.max_order = 10;
  opt.catalog = ingest_catalog("builtin:small14").groups;
  opt.catalog_complete_up_to = 14;
  opt.tetravalent_oracle_max = 0;
  opt.at_graphs = {nm::complete(5), nm::path(3), nm::cube(3)};
  const auto run = run_census(opt);
  CHECK(run.rejected.size() == 1);
  for (const auto& g : {nm::complete(4), nm::complete_bipartite(3, 3), ladder(3, LadderKind::Circular), nm::cube(3),
                        ladder(4, LadderKind::Moebius), ladder(5, LadderKind::Moebius), nm::petersen()}) {
    CHECK(record_of(run.store, g) != nullptr);
  }
  const auto* p = record_of(run.store, nm::petersen());
  REQUIRE(p != nullptr);
  CHECK(p->provenance == std::set<std::string>{"split"});
  CHECK_FALSE(p->classification.is_cayley);
  CHECK(record_of(run.store, nm::cube(3))->provenance.contains("external-AT"));
  for (int n = 4; n <= 10; n += 2) CHECK(oracle_crosscheck(run.store, n).exact());
}

TEST_CASE("oracle cross-check") {
  const auto run = small_census(14, 4);
  for (int n = 4; n <= 14; n += 2) {
    const auto r = oracle_crosscheck(run.store, n, 2);
    CAPTURE(n);
    CHECK(r.exact());
    CHECK(r.oracle_count == r.store_count);
    CHECK(run.store.exhaustive_orders.contains(static_cast<std::size_t>(n)));
  }
  CHECK(oracle_crosscheck(run.store, 4).oracle_count == 1);
  CHECK(oracle_crosscheck(run.store, 6).oracle_count == 2);
  // A store missing everything reports every oracle graph.
  CensusStore empty;
  const auto r = oracle_crosscheck(empty, 10);
  CHECK(r.missing.size() == r.oracle_count);
  CHECK_FALSE(r.exact());
}

TEST_CASE("store records re-verify and respect the structural constraints") {
  const auto run = small_census(14, 4);
  int non_cayley_m3 = 0;
  for (const auto* rec : run.store.records()) {
    CHECK_FALSE(rec->provenance.empty());
    const auto g = graph6_decode(rec->classification.canonical.bytes);
    CHECK(canonical_form(g) == rec->classification.canonical);
    const auto again = classify(g);
    CHECK(again.m_full == rec->classification.m_full);
    CHECK(again.is_cayley == rec->classification.is_cayley);
    CHECK(again.girth == rec->classification.girth);
    CHECK(again.diameter == rec->classification.diameter);
    CHECK(again.hamiltonian == rec->classification.hamiltonian);
    non_cayley_m3 += rec->classification.m_full == 3 && !rec->classification.is_cayley;
  }
  CHECK(non_cayley_m3 == 0);
}

TEST_CASE("split records merge back to an arc-transitive input") {
  const auto run = small_census(14, 4);
  std::set<CanonicalForm> inputs;
  for (int k = 5; k <= 7; ++k)
    for (const auto& g : all_connected_tetravalent_graphs(k))
      if (arc_orbit_count_any(g, graph_automorphisms(g).generators) == 1) inputs.insert(canonical_form(g));
  int merged = 0;
  for (const auto* rec : run.store.records()) {
    if (!rec->provenance.contains("split")) continue;
    const auto gens = graph_automorphisms(rec->graph).generators;
    if (arc_orbit_count(rec->graph, gens) != 2) continue;
    if (local_action(rec->graph, gens, 0).type != LocalType::Z2Fix1) continue;
    if (is_degenerate(rec->graph, gens).degenerate) continue;
    CHECK(inputs.contains(canonical_form(merge(rec->graph, gens).quotient)));
    ++merged;
  }
  CHECK(merged > 0);
}

TEST_CASE("extremal tables") {
  const auto run = small_census(14, 4);
  const auto t = extremal_tables(run.store);
  CHECK(t.n_vt_girth.at(3).order == 4);
  CHECK(t.n_vt_girth.at(4).order == 6);
  CHECK(t.n_vt_girth.at(5).order == 10);
  CHECK(t.n_vt_girth.at(6).order == 14);
  CHECK(t.n_vt_girth.at(6).exact);
  CHECK(t.m_vt_diam.at(2).order == 10);
  CHECK(t.m_vt_diam.at(2).exact);
  CHECK(t.m_vt_diam.at(3).order == 14);
  CHECK_FALSE(t.m_vt_diam.at(3).exact);
  CHECK_FALSE(t.n_cay_girth.contains(5));
  for (const auto& [g, e] : t.n_cay_girth) CHECK(t.n_vt_girth.at(g).order <= e.order);
  for (const auto& [d, e] : t.m_cay_diam) CHECK(t.m_vt_diam.at(d).order >= e.order);
  for (const auto& [d, e] : t.m_vt_diam) CHECK(e.order <= cubic_moore_bound(d));
  CHECK(cubic_moore_bound(2) == 10);
  CHECK(cubic_moore_bound(3) == 22);
  const auto text = format_tables(t);
  CHECK(text.find("14*") != std::string::npos);

  const auto none = extremal_tables(CensusStore{});
  CHECK(none.n_vt_girth.empty());
  CHECK(none.m_vt_diam.empty());
  CHECK(none.n_cay_girth.empty());
  CHECK(none.m_cay_diam.empty());
}

TEST_CASE("emission") {
  CensusStore k4;
  k4.add(nm::complete(4), "ladder");
  k4.classify_all();
  const auto csv = census_csv(k4);
  CHECK(csv == std::string(kCensusCsvHeader) + "\n4,C~,1,true,false,true,3,1,true,ladder\n");

  CensusStore pet;
  pet.add(nm::petersen(), "split");
  pet.classify_all();
  const auto row = census_csv(pet).substr(kCensusCsvHeader.size() + 1);
  CHECK(row.find(",1,false,false,false,5,2,false,split") != std::string::npos);

  const auto run = small_census(12);
  const auto a = scratch_dir("emit_a");
  const auto b = scratch_dir("emit_b");
  emit(run.store, EmitFormat::Both, a.string());
  emit(run.store, EmitFormat::Both, b.string());
  CHECK(slurp(a / "census.csv") == slurp(b / "census.csv"));
  CHECK(slurp(a / "graphs.g6") == slurp(b / "graphs.g6"));
  CHECK(line_count(slurp(a / "census.csv")) == run.store.size() + 1);
  CHECK(line_count(slurp(a / "graphs.g6")) == run.store.size());

  const auto back = load_store(a.string());
  CHECK(back.size() == run.store.size());
  CHECK(back.exhaustive_orders == run.store.exhaustive_orders);
  CHECK(census_csv(back) == census_csv(run.store));

  // Idempotent union.
  CensusStore merged = back;
  merged.merge(run.store);
  merged.merge(back);
  CHECK(census_csv(merged) == census_csv(run.store));

  // A non-canonical graph6 key is caught.
  const auto prism = ladder(3, LadderKind::Circular);
  const auto key = canonical_form(prism).bytes;
  std::string other;
  for (int k = 1; k < 5 && other.empty(); ++k) {
    const auto moved = graph6_encode(prism.relabel(Permutation::from_cycles("(0 " + std::to_string(k) + " 5)", 6)));
    if (moved != key) other = moved;
  }
  REQUIRE_FALSE(other.empty());
  auto text = slurp(a / "census.csv");
  const auto pos = text.find("\n6," + key + ",");
  REQUIRE(pos != std::string::npos);
  text.replace(pos + 3, key.size(), other);
  std::ofstream(a / "census.csv", std::ios::binary) << text;
  CHECK_THROWS_AS(load_store(a.string()), std::runtime_error);

  const auto c = scratch_dir("emit_c");
  emit(run.store, EmitFormat::Graph6, c.string());
  CHECK_FALSE(fs::exists(c / "census.csv"));
  CHECK(fs::exists(c / "graphs.g6"));
  CHECK(fs::exists(c / "meta.json"));
  for (const auto& d : {a, b, c}) fs::remove_all(d);
}

TEST_CASE("census output does not depend on the worker count") {
  const auto one = small_census(12, 1);
  const auto four = small_census(12, 4);
  CHECK(census_csv(one.store) == census_csv(four.store));
  const auto a = scratch_dir("det_a");
  const auto b = scratch_dir("det_b");
  emit(one.store, EmitFormat::Both, a.string());
  emit(four.store, EmitFormat::Both, b.string());
  CHECK(slurp(a / "graphs.g6") == slurp(b / "graphs.g6"));
  CHECK(slurp(a / "meta.json") == slurp(b / "meta.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("command line") {
  const std::string cli = CVT_CLI_PATH;
  const auto dir = scratch_dir("cli");
  const auto run = [&](const std::string& args) {
    return WEXITSTATUS(std::system((cli + " " + args + " > " + (dir / "stdout.txt").string() + " 2> " +
                                    (dir / "stderr.txt").string())
                                       .c_str()));
  };
  CHECK(run("census --catalog builtin:small14 --max-order 10 --out " + (dir / "store").string()) == 0);
  CHECK(fs::exists(dir / "store" / "census.csv"));
  CHECK(run("tables --store " + (dir / "store").string()) == 0);
  CHECK(slurp(dir / "stdout.txt").find("10") != std::string::npos);

  std::ofstream(dir / "cfg.json") << R"({"catalog": "builtin:small14", "max_order": 8, "out": ")" +
                                         (dir / "cfg_store").string() + R"(", "format": "csv"})";
  CHECK(run("census --config " + (dir / "cfg.json").string() + " --max-order 6") == 0);
  CHECK(line_count(slurp(dir / "cfg_store" / "census.csv")) == 4);  // flags win: orders 4 and 6 only
  CHECK_FALSE(fs::exists(dir / "cfg_store" / "graphs.g6"));

  std::ofstream(dir / "prism.g6") << graph6_encode(ladder(3, LadderKind::Circular)) << '\n';
  CHECK(run("merge --in " + (dir / "prism.g6").string() + " --group aut") == 3);
  CHECK(slurp(dir / "stderr.txt").find("circular ladder") != std::string::npos);

  std::ofstream(dir / "tk4.g6") << graph6_encode(truncation(nm::complete(4))) << '\n';
  CHECK(run("merge --in " + (dir / "tk4.g6").string() + " --group aut") == 0);
  const auto merged = slurp(dir / "stdout.txt");
  const auto first_line = merged.substr(0, merged.find('\n'));
  CHECK(are_isomorphic(graph6_decode(first_line), nm::complete_multipartite(3, 2)));
  CHECK(merged.find("cycles 4 over 6") != std::string::npos);

  std::ofstream(dir / "k5.g6") << graph6_encode(nm::complete(5)) << '\n';
  std::ofstream(dir / "k5.cycles") << "cycles 2 over 5\n0 1 2 3 4\n0 2 4 1 3\n";
  CHECK(run("split --in " + (dir / "k5.g6").string() + " --cycles " + (dir / "k5.cycles").string()) == 0);
  auto out = slurp(dir / "stdout.txt");
  CHECK(are_isomorphic(graph6_decode(out.substr(0, out.find('\n'))), nm::petersen()));

  std::ofstream(dir / "pet.g6") << graph6_encode(nm::petersen()) << '\n';
  CHECK(run("classify --in " + (dir / "pet.g6").string()) == 0);
  CHECK(slurp(dir / "stdout.txt").find("10,") != std::string::npos);

  CHECK(run("oracle --order 8") == 0);
  CHECK(slurp(dir / "stdout.txt").find("vertex-transitive 2") != std::string::npos);
  CHECK(run("oracle --order 7") == 2);
  CHECK(run("census --max-order 9 --out " + (dir / "x").string()) == 2);
  CHECK(run("frobnicate") != 0);
  fs::remove_all(dir);
}
