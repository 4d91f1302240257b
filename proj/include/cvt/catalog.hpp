#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cvt/group.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

/// One stanza of a group catalog: a label and permutation generators.
struct CatalogEntry {
  std::string label;
  std::size_t degree = 0;
  std::size_t declared_order = 0;
  std::vector<Permutation> generators;
};

/// Error while reading a catalog; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the stanza format:
///
///     group <label> degree <d> order <n>
///     (0 1 2)(3 4)
///     ...
///     <blank line>
///
/// Lines starting with '#' are comments.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::string write_catalog(const std::vector<CatalogEntry>& entries);

/// Builds the group of an entry and checks its declared order.
FiniteGroup build_group(const CatalogEntry& entry, std::size_t cap = kDefaultGroupOrderCap);

namespace families {

CatalogEntry cyclic(int n);
/// Dihedral group of order 2n (n >= 1; n = 1 gives Z2, n = 2 gives Z2^2).
CatalogEntry dihedral(int n);
/// <a, b | a^m, b^s = a^t, b a b^-1 = a^r> acting regularly on m*s points.
/// Requires r^s = 1 and r*t = t (mod m).
CatalogEntry metacyclic(std::string label, int m, int s, int t, int r);
CatalogEntry dicyclic(int n);     // order 4n
CatalogEntry semidihedral(int k);  // order 2^k, k >= 4
CatalogEntry modular(int k);       // order 2^k, k >= 4
CatalogEntry alternating4();
CatalogEntry symmetric(int n);
/// Direct product acting on the disjoint union of the two point sets.
CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b);
CatalogEntry elementary_abelian2(int rank);

}  // namespace families

/// Names accepted by builtin_catalog().
std::vector<std::string> builtin_catalog_names();

/// Built-in catalogs:
///   "small14"      every group of order <= 14, one per isomorphism class
///   "two_groups64" assorted 2-groups of order <= 64
///   "families64"   cyclic, dihedral, dicyclic and small products up to 64
/// Throws std::invalid_argument for unknown names.
std::vector<CatalogEntry> builtin_catalog(std::string_view name);

}  // namespace cvt
