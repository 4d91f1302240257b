#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvt/catalog.hpp"
#include "cvt/group.hpp"
#include "cvt/permutation.hpp"

namespace testsupport {

inline cvt::FiniteGroup catalog_group(const std::string& catalog, const std::string& label) {
  for (const auto& e : cvt::builtin_catalog(catalog)) {
    if (e.label == label) return cvt::build_group(e);
  }
  throw std::invalid_argument("no group " + label + " in " + catalog);
}

inline cvt::FiniteGroup perm_group(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<cvt::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(cvt::Permutation::from_cycles(c, degree));
  return cvt::group_from_generators(gens);
}

inline cvt::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return cvt::Permutation(std::move(images));
}

}  // namespace testsupport
