#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cvt/canonical.hpp"
#include "cvt/catalog.hpp"
#include "cvt/coset_amalgam.hpp"
#include "cvt/graph.hpp"
#include "cvt/group.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/transitivity.hpp"

namespace cvt {

/// Worker count from CVT_WORKERS, else `fallback` (at least 1).
unsigned workers_from_env(unsigned fallback = 1);

/// Runs fn(0..count-1) on up to `workers` threads. Exceptions are rethrown
/// (the one from the lowest index wins).
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

struct CatalogIngest {
  std::vector<FiniteGroup> groups;
  std::vector<std::string> warnings;
};

/// Reads a catalog file, or a built-in catalog given as "builtin:<name>".
/// Isomorphic duplicates (orders <= 64) are dropped with a warning.
CatalogIngest ingest_catalog(const std::string& path, unsigned workers = 1);
CatalogIngest ingest_catalog_entries(const std::vector<CatalogEntry>& entries, unsigned workers = 1);

namespace provenance {
inline constexpr std::string_view kCayley = "cayley";
inline constexpr std::string_view kSplit = "split";
inline constexpr std::string_view kExternal = "external-AT";
inline constexpr std::string_view kLadder = "ladder";
}  // namespace provenance

struct CensusRecord {
  Graph graph;  // canonically labelled
  ClassificationRecord classification;
  std::set<std::string> provenance;
  bool classified = false;
};

/// Records keyed by canonical form, iterated by (order, form).
class CensusStore {
 public:
  /// Adds a connected cubic graph; returns false when it was already present
  /// (the provenance is merged either way).
  bool add(const Graph& g, std::string_view provenance);
  /// Adds an already canonical graph with its form.
  bool add_canonical(const CanonicalForm& form, const Graph& canonical, std::string_view provenance);
  /// Idempotent union.
  void merge(const CensusStore& other);
  /// Overwrites the classification of an existing record.
  void set_classification(const CanonicalForm& form, const ClassificationRecord& c);
  /// Classifies every unclassified record.
  void classify_all(unsigned workers = 1);

  std::size_t size() const { return records_.size(); }
  bool contains(const CanonicalForm& form) const;
  const CensusRecord* find(const CanonicalForm& form) const;
  /// Records in (order, form) order.
  std::vector<const CensusRecord*> records() const;
  std::vector<const CensusRecord*> records_of_order(std::size_t n) const;

  /// Orders for which the store is known to be complete.
  std::set<std::size_t> exhaustive_orders;

 private:
  using Key = std::pair<std::size_t, std::string>;
  std::map<Key, CensusRecord> records_;
  std::map<std::string, Key> index_;
};

struct CensusOptions {
  std::size_t max_order = 0;
  std::vector<FiniteGroup> catalog;
  /// The catalog contains every group of each order up to this bound.
  std::size_t catalog_complete_up_to = 0;
  /// Extra arc-transitive inputs: cubic graphs go to the external route,
  /// tetravalent ones to the split route.
  std::vector<Graph> at_graphs;
  std::vector<MarkedQuotient> quotients;
  /// Tetravalent arc-transitive graphs from the exhaustive generator up to
  /// this order feed the split route.
  int tetravalent_oracle_max = 10;
  /// Regular-map triples are searched in catalog groups up to this order.
  std::size_t regular_map_group_max = 64;
  /// Orders up to which every arc-transitive cubic graph is known to arise
  /// from the other routes (checked against the exhaustive generator).
  std::size_t arc_transitive_covered_up_to = 14;
  bool ladders = true;
  unsigned workers = 1;
};

struct CensusRun {
  CensusStore store;
  std::vector<std::string> warnings;
  std::vector<std::string> rejected;  // external graphs that failed checks
  std::map<std::string, std::size_t> route_hits;
};

/// Throws std::invalid_argument on odd or zero max_order.
CensusRun run_census(const CensusOptions& options);

/// A tetravalent graph with an arc-transitive cycle decomposition and a
/// group (on its vertices) that is arc-transitive and preserves it.
struct SplitSource {
  Graph lambda;
  CycleDecomposition decomposition;
  std::vector<Permutation> group;
  std::string origin;
};

/// The inputs of the split route of run_census, in the same order.
std::vector<SplitSource> split_route_sources(const CensusOptions& options);

struct OracleReport {
  std::size_t order = 0;
  std::size_t oracle_count = 0;
  std::size_t store_count = 0;
  std::vector<CanonicalForm> missing;  // in the oracle, not in the store
  std::vector<CanonicalForm> extra;    // in the store, not in the oracle
  bool exact() const { return missing.empty() && extra.empty(); }
};

/// Canonical forms of the vertex-transitive connected cubic graphs of order
/// n, from the exhaustive generator.
std::vector<CanonicalForm> oracle_vertex_transitive(int n, unsigned workers = 1);
OracleReport oracle_crosscheck(const CensusStore& store, int n, unsigned workers = 1);

struct ExtremalEntry {
  std::size_t order = 0;
  CanonicalForm witness;
  bool exact = false;
};

struct ExtremalTables {
  std::map<int, ExtremalEntry> n_cay_girth;  // girth -> smallest Cayley order
  std::map<int, ExtremalEntry> n_vt_girth;
  std::map<int, ExtremalEntry> m_cay_diam;   // diameter -> largest Cayley order
  std::map<int, ExtremalEntry> m_vt_diam;
};

/// Moore bound 3 * 2^d - 2 for cubic graphs of diameter d.
std::size_t cubic_moore_bound(int d);

ExtremalTables extremal_tables(const CensusStore& store);
std::string format_tables(const ExtremalTables& t);

enum class EmitFormat { Csv, Graph6, Both };

inline constexpr std::string_view kCensusCsvHeader =
    "order,canonical_graph6,m,is_cayley,is_grr,is_dihedrant,girth,diameter,hamiltonian,provenance";

/// census.csv and/or graphs.g6 plus meta.json in out_dir.
void emit(const CensusStore& store, EmitFormat format, const std::string& out_dir);
std::string census_csv(const CensusStore& store);
/// Re-reads an emitted directory; every graph is decoded and its canonical
/// form checked against the stored key (throws std::runtime_error on mismatch).
CensusStore load_store(const std::string& dir);

}  // namespace cvt
