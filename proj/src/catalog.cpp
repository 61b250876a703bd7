#include "mil/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mil {

FiniteSemilattice make_chain(int n) {
  std::vector<Mask> up(n);
  for (int i = 0; i < n; i++) up[i] = mask_full(n) & ~(mask_bit(i) - 1);
  return validate_semilattice(FinitePoset::from_up_masks(std::move(up)), n - 1);
}

FiniteSemilattice make_diamond() {
  // 0 < 1, 2 < 3
  FinitePoset p = FinitePoset::from_pairs(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  return validate_semilattice(p, 3);
}

FiniteSemilattice make_m3() {
  // bottom 0, atoms 1,2,3, top 4
  FinitePoset p = FinitePoset::from_pairs(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  return validate_semilattice(p, 4);
}

FiniteSemilattice make_n5() {
  // pentagon: 0 < 1 < 2 < 4, 0 < 3 < 4
  FinitePoset p = FinitePoset::from_pairs(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}});
  return validate_semilattice(p, 4);
}

FiniteSemilattice make_free_semilattice(int generators) {
  if (generators < 1 || generators > 5)
    throw std::invalid_argument("free semilattice generators out of range");
  // Elements are subsets of the generator set; meet is union, so the order
  // is reverse inclusion and the top is the empty subset.
  const int n = 1 << generators;
  std::vector<Mask> up(n, 0);
  for (int s = 0; s < n; s++)
    for (int t = 0; t < n; t++)
      if ((t & ~s) == 0) up[s] |= mask_bit(t);  // s <= t iff t subset of s
  return validate_semilattice(FinitePoset::from_up_masks(std::move(up)), 0);
}

std::vector<Mask> canonical_up_masks(const FinitePoset& p) {
  // Lexicographically greatest relabeling; orients chains as 0 < 1 < ...
  const int n = p.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i;
  std::vector<Mask> best;
  std::vector<Mask> cur(n);
  do {
    for (int i = 0; i < n; i++) {
      Mask m = 0;
      for (int j : mask_elements(p.up(i))) m |= mask_bit(perm[j]);
      cur[perm[i]] = m;
    }
    if (best.empty() || best < cur) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteSemilattice> all_semilattices(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("brute-force enumeration supports n <= 5");
  std::vector<FiniteSemilattice> out;
  if (n == 1) {
    out.push_back(make_chain(1));
    return out;
  }
  // Strict-order bits for ordered pairs (i, j), i != j.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (i != j) pairs.emplace_back(i, j);
  const int bits = static_cast<int>(pairs.size());
  std::set<std::vector<Mask>> seen;
  for (std::uint64_t code = 0; code < (1ull << bits); code++) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; i++) up[i] = mask_bit(i);
    bool anti_ok = true;
    for (int b = 0; b < bits && anti_ok; b++) {
      if ((code >> b) & 1) {
        auto [i, j] = pairs[b];
        up[i] |= mask_bit(j);
        if (mask_has(up[j], i)) anti_ok = false;
      }
    }
    if (!anti_ok || !is_partial_order(up)) continue;
    FinitePoset p = FinitePoset::from_up_masks(std::move(up));
    auto sl = try_semilattice(p);
    if (!sl) continue;
    auto canon = canonical_up_masks(p);
    if (!seen.insert(canon).second) continue;
    auto canon_sl =
        try_semilattice(FinitePoset::from_up_masks(std::move(canon)));
    out.push_back(std::move(*canon_sl));
  }
  return out;
}

namespace {

CatalogEntry make_entry(std::string name, FiniteSemilattice sl) {
  CatalogEntry e;
  e.name = std::move(name);
  e.distributive = is_distributive(sl);
  e.imp = implicative_witness(sl);
  e.sl = std::move(sl);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 5; n++) {
    auto all = all_semilattices(n);
    for (std::size_t k = 0; k < all.size(); k++) {
      out.push_back(make_entry(
          "sl" + std::to_string(n) + "_" + std::to_string(k), all[k]));
    }
  }
  for (int n = 1; n <= 6; n++)
    out.push_back(make_entry("chain" + std::to_string(n), make_chain(n)));
  out.push_back(make_entry("diamond", make_diamond()));
  out.push_back(make_entry("m3", make_m3()));
  out.push_back(make_entry("n5", make_n5()));
  out.push_back(make_entry("free2", make_free_semilattice(2)));
  out.push_back(make_entry("free3", make_free_semilattice(3)));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<const CatalogEntry*> catalog_upto(int max_size,
                                              bool implicative_only) {
  std::vector<const CatalogEntry*> out;
  std::set<std::vector<Mask>> seen;
  for (const auto& e : catalog()) {
    if (e.sl.size() > max_size) continue;
    if (implicative_only && !e.implicative()) continue;
    if (!seen.insert(canonical_up_masks(e.sl.poset)).second) continue;
    out.push_back(&e);
  }
  return out;
}

const CatalogEntry& catalog_named(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry named " + name);
}

}  // namespace mil
