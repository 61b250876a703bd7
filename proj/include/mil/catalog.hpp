#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mil/order.hpp"

namespace mil {

struct CatalogEntry {
  std::string name;
  FiniteSemilattice sl;
  bool distributive = false;
  std::optional<ImpWitness> imp;

  bool implicative() const { return imp.has_value(); }
};

// Named structures plus every semilattice of size <= 5, one representative
// per isomorphism class, in a deterministic order (by size, then canonical
// form). Built once and cached.
const std::vector<CatalogEntry>& catalog();

// Entries with carrier <= max_size, optionally restricted to implicative
// ones, skipping entries isomorphic to an earlier one.
std::vector<const CatalogEntry*> catalog_upto(int max_size,
                                              bool implicative_only);

const CatalogEntry& catalog_named(const std::string& name);

// All semilattices with exactly n elements (n <= 5), one canonical labeled
// representative per isomorphism class.
std::vector<FiniteSemilattice> all_semilattices(int n);

// Canonical relabeling: the permutation image of the up-mask matrix that is
// lexicographically least.
std::vector<Mask> canonical_up_masks(const FinitePoset& p);

FiniteSemilattice make_chain(int n);
FiniteSemilattice make_diamond();
FiniteSemilattice make_m3();
FiniteSemilattice make_n5();
FiniteSemilattice make_free_semilattice(int generators);  // 2 or 3

}  // namespace mil
