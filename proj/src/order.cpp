#include "mil/order.hpp"

#include <bit>

namespace mil {

int mask_count(Mask m) { return std::popcount(m); }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

bool is_partial_order(const std::vector<Mask>& up) {
  const int n = static_cast<int>(up.size());
  for (int i = 0; i < n; i++) {
    if (!mask_has(up[i], i)) return false;
    if (up[i] & ~mask_full(n)) return false;
  }
  for (int i = 0; i < n; i++) {
    for (int j : mask_elements(up[i])) {
      if (i != j && mask_has(up[j], i)) return false;  // antisymmetry
      if (!mask_subset(up[j], up[i])) return false;    // transitivity
    }
  }
  return true;
}

FinitePoset FinitePoset::from_up_masks(std::vector<Mask> up) {
  const int n = static_cast<int>(up.size());
  if (n > kMaxCarrier)
    throw OrderError(OrderError::Code::TooLarge, "carrier larger than 64");
  for (int i = 0; i < n; i++) {
    if (!mask_has(up[i], i))
      throw OrderError(OrderError::Code::NotReflexive,
                       "relation is not reflexive at " + std::to_string(i), i);
  }
  for (int i = 0; i < n; i++) {
    for (int j : mask_elements(up[i])) {
      if (i != j && mask_has(up[j], i))
        throw OrderError(OrderError::Code::NotAntisymmetric,
                         "antisymmetry fails on (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         i, j);
      if (!mask_subset(up[j], up[i]))
        throw OrderError(OrderError::Code::NotTransitive,
                         "transitivity fails through (" + std::to_string(i) +
                             "," + std::to_string(j) + ")",
                         i, j);
    }
  }
  FinitePoset p;
  p.up_ = std::move(up);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; i++)
    for (int j : mask_elements(p.up_[i])) p.down_[j] |= mask_bit(i);
  return p;
}

FinitePoset FinitePoset::from_pairs(
    int size, const std::vector<std::pair<int, int>>& pairs) {
  if (size < 1 || size > kMaxCarrier)
    throw OrderError(OrderError::Code::TooLarge, "bad carrier size");
  std::vector<Mask> up(size, 0);
  for (int i = 0; i < size; i++) up[i] |= mask_bit(i);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= size || j >= size)
      throw OrderError(OrderError::Code::TooLarge, "pair index out of range");
    up[i] |= mask_bit(j);
  }
  return from_up_masks(std::move(up));
}

int FiniteSemilattice::meet_all(Mask m) const {
  int acc = top;
  for (int i : mask_elements(m)) acc = meet(acc, i);
  return acc;
}

int FiniteSemilattice::bottom() const { return meet_all(mask_full(size())); }

namespace {

// Greatest element of a non-empty mask if it exists: the g in m with
// m subset down(g).
int greatest_of(const FinitePoset& p, Mask m) {
  for (int g : mask_elements(m))
    if (mask_subset(m, p.down(g))) return g;
  return -1;
}

}  // namespace

FiniteSemilattice validate_semilattice(const FinitePoset& p, int top) {
  const int n = p.size();
  if (top < 0 || top >= n || p.down(top) != mask_full(n))
    throw OrderError(OrderError::Code::NoTop,
                     "designated top is not the maximum", top);
  FiniteSemilattice A;
  A.poset = p;
  A.top = top;
  A.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      Mask lower = p.down(i) & p.down(j);
      int g = lower ? greatest_of(p, lower) : -1;
      if (g < 0)
        throw OrderError(OrderError::Code::MissingMeet,
                         "no greatest lower bound for (" + std::to_string(i) +
                             "," + std::to_string(j) + ")",
                         i, j);
      A.meet_table[i * n + j] = g;
    }
  }
  return A;
}

std::optional<FiniteSemilattice> try_semilattice(const FinitePoset& p) {
  const int n = p.size();
  int top = -1;
  for (int i = 0; i < n; i++)
    if (p.down(i) == mask_full(n)) top = i;
  if (top < 0) return std::nullopt;
  FiniteSemilattice A;
  A.poset = p;
  A.top = top;
  A.meet_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      int g = greatest_of(p, p.down(i) & p.down(j));
      if (g < 0) return std::nullopt;
      A.meet_table[i * n + j] = g;
    }
  }
  return A;
}

bool is_distributive(const FiniteSemilattice& A) {
  const int n = A.size();
  for (int a = 0; a < n; a++) {
    for (int b = 0; b < n; b++) {
      Mask cs = A.up(A.meet(a, b));
      for (int c : mask_elements(cs)) {
        bool found = false;
        for (int a2 : mask_elements(A.up(a))) {
          for (int b2 : mask_elements(A.up(b))) {
            if (A.meet(a2, b2) == c) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::optional<ImpWitness> implicative_witness(const FiniteSemilattice& A) {
  const int n = A.size();
  ImpWitness w;
  w.size = n;
  w.table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int y = 0; y < n; y++) {
    for (int z = 0; z < n; z++) {
      Mask candidates = 0;
      for (int x = 0; x < n; x++)
        if (A.leq(A.meet(x, y), z)) candidates |= mask_bit(x);
      int g = greatest_of(A.poset, candidates);
      if (g < 0) return std::nullopt;
      w.table[y * n + z] = g;
    }
  }
  return w;
}

bool is_filter(const FiniteSemilattice& A, Mask s) {
  if (s == 0) return false;
  for (int x : mask_elements(s)) {
    if (!mask_subset(A.up(x), s)) return false;
    for (int y : mask_elements(s))
      if (!mask_has(s, A.meet(x, y))) return false;
  }
  return true;
}

int filter_generator(const FiniteSemilattice& A, Mask filter) {
  for (int g : mask_elements(filter))
    if (mask_subset(filter, A.up(g))) return g;
  return -1;
}

std::vector<Mask> enumerate_filters(const FiniteSemilattice& A) {
  std::vector<Mask> out;
  out.reserve(A.size());
  for (int g = 0; g < A.size(); g++) out.push_back(A.up(g));
  return out;
}

Mask filter_closure(const FiniteSemilattice& A, Mask seed) {
  if (seed == 0)
    throw OrderError(OrderError::Code::EmptySeed, "empty filter seed");
  Mask closed = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : mask_elements(closed)) {
      for (int y : mask_elements(closed)) {
        int m = A.meet(x, y);
        if (!mask_has(closed, m)) {
          closed |= mask_bit(m);
          changed = true;
        }
      }
    }
  }
  Mask result = closed;
  for (int x : mask_elements(closed)) result |= A.up(x);
  return result;
}

std::optional<Mask> try_filter_join(const FiniteSemilattice& A, Mask p,
                                    Mask q) {
  Mask r = 0;
  for (int a : mask_elements(p))
    for (int b : mask_elements(q)) r |= mask_bit(A.meet(a, b));
  if (!is_filter(A, r)) return std::nullopt;
  return r;
}

Mask filter_join(const FiniteSemilattice& A, Mask p, Mask q) {
  auto r = try_filter_join(A, p, q);
  if (!r)
    throw OrderError(OrderError::Code::NotDistributive,
                     "pointwise-meet set is not a filter");
  return *r;
}

std::optional<Mask> try_filter_implication(const FiniteSemilattice& A, Mask a,
                                           Mask b) {
  Mask r = 0;
  for (int x = 0; x < A.size(); x++)
    if (mask_subset(A.up(x) & a, b)) r |= mask_bit(x);
  if (!is_filter(A, r)) return std::nullopt;
  return r;
}

Mask filter_implication(const FiniteSemilattice& A, Mask a, Mask b) {
  auto r = try_filter_implication(A, a, b);
  if (!r)
    throw OrderError(OrderError::Code::NotDistributive,
                     "implication set is not a filter");
  return *r;
}

int FilterAlgebra::index_of(const FiniteSemilattice& base, Mask filter) const {
  return filter_generator(base, filter);
}

FilterAlgebra build_filter_semilattice(const FiniteSemilattice& A) {
  FilterAlgebra FA;
  FA.filters = enumerate_filters(A);
  const int n = static_cast<int>(FA.filters.size());
  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (mask_subset(FA.filters[i], FA.filters[j])) up[i] |= mask_bit(j);
  FinitePoset poset = FinitePoset::from_up_masks(std::move(up));
  int top = -1;
  for (int i = 0; i < n; i++)
    if (FA.filters[i] == mask_full(A.size())) top = i;
  FA.sl = validate_semilattice(poset, top);
  // Meets must be intersections; the table from validate_semilattice already
  // is, because intersection of principal filters is principal.
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      int m = FA.sl.meet(i, j);
      if (FA.filters[m] != (FA.filters[i] & FA.filters[j]))
        throw OrderError(OrderError::Code::MissingMeet,
                         "filter intersection is not principal", i, j);
    }
  return FA;
}

Mask eta(const FiniteSemilattice& A, int a) {
  Mask out = 0;
  for (int g = 0; g < A.size(); g++)
    if (mask_has(A.up(g), a)) out |= mask_bit(g);
  return out;
}

bool is_prime_downset(const FiniteSemilattice& A, Mask d) {
  if (mask_has(d, A.top)) return false;  // nullary primality: top stays out
  for (int x : mask_elements(d))
    if (!mask_subset(A.down(x), d)) return false;
  for (int a = 0; a < A.size(); a++)
    for (int b = 0; b < A.size(); b++)
      if (mask_has(d, A.meet(a, b)) && !mask_has(d, a) && !mask_has(d, b))
        return false;
  return true;
}

}  // namespace mil
