#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mil {

// Carriers are indexed 0..size-1 and capped at 64 so element sets and
// filter sets fit in one machine word.
using Mask = std::uint64_t;
constexpr int kMaxCarrier = 64;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask mask_full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
int mask_count(Mask m);
std::vector<int> mask_elements(Mask m);

struct OrderError : std::runtime_error {
  enum class Code {
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    NoTop,
    MissingMeet,
    EmptySeed,
    NotDistributive,
    TooLarge,
  };
  Code code;
  int x = -1, y = -1;
  OrderError(Code c, const std::string& msg, int xx = -1, int yy = -1)
      : std::runtime_error(msg), code(c), x(xx), y(yy) {}
};

class FinitePoset {
public:
  FinitePoset() = default;  // the empty poset

  // `up[i]` is the mask of elements j with i <= j. Throws OrderError unless
  // the relation is reflexive, antisymmetric and transitive.
  static FinitePoset from_up_masks(std::vector<Mask> up);
  // Pairs (i, j) meaning i <= j; the reflexive pairs may be omitted.
  static FinitePoset from_pairs(int size,
                                const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return mask_has(up_[i], j); }
  Mask up(int i) const { return up_[i]; }
  Mask down(int i) const { return down_[i]; }
  const std::vector<Mask>& up_masks() const { return up_; }

  bool operator==(const FinitePoset& o) const { return up_ == o.up_; }

private:
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// Checks reflexivity/antisymmetry/transitivity without throwing.
bool is_partial_order(const std::vector<Mask>& up);

struct FiniteSemilattice {
  FinitePoset poset;
  int top = 0;
  std::vector<int> meet_table;  // row-major size x size

  int size() const { return poset.size(); }
  bool leq(int i, int j) const { return poset.leq(i, j); }
  int meet(int i, int j) const { return meet_table[i * size() + j]; }
  Mask up(int i) const { return poset.up(i); }
  Mask down(int i) const { return poset.down(i); }
  // Meet of a non-empty element set; the empty set gives top.
  int meet_all(Mask m) const;
  int bottom() const;

  bool operator==(const FiniteSemilattice& o) const {
    return poset == o.poset && top == o.top && meet_table == o.meet_table;
  }
};

// Builds the meet table, verifying that `top` is the maximum and every pair
// has a greatest lower bound. Throws OrderError{NoTop|MissingMeet}.
FiniteSemilattice validate_semilattice(const FinitePoset& p, int top);

// Non-throwing variant that also locates the top element itself.
std::optional<FiniteSemilattice> try_semilattice(const FinitePoset& p);

// a&b <= c implies c = a'&b' for some a' >= a, b' >= b.
bool is_distributive(const FiniteSemilattice& A);

struct ImpWitness {
  std::vector<int> table;  // row-major: table[y*n+z] = y -> z
  int size = 0;
  int of(int y, int z) const { return table[y * size + z]; }
};

// Residuated implication x <= imp(y,z) iff x&y <= z, when it exists.
std::optional<ImpWitness> implicative_witness(const FiniteSemilattice& A);

// --- filters -----------------------------------------------------------

bool is_filter(const FiniteSemilattice& A, Mask s);
// Least element of a filter given as a mask.
int filter_generator(const FiniteSemilattice& A, Mask filter);

// All filters; entry g is the principal up-set of generator g, so the list
// is indexed by generator and covers every filter of a finite semilattice.
std::vector<Mask> enumerate_filters(const FiniteSemilattice& A);

// Least filter containing `seed`: meet-closure followed by up-closure.
// Throws OrderError{EmptySeed} when seed is empty.
Mask filter_closure(const FiniteSemilattice& A, Mask seed);

// Pointwise-meet set {a&b | a in p, b in q}; the least filter containing
// p and q when A is distributive. nullopt when the result is not a filter.
std::optional<Mask> try_filter_join(const FiniteSemilattice& A, Mask p, Mask q);
Mask filter_join(const FiniteSemilattice& A, Mask p, Mask q);  // throws

// {x | for all y >= x, y in a implies y in b}; a filter when A is
// distributive.
std::optional<Mask> try_filter_implication(const FiniteSemilattice& A, Mask a,
                                           Mask b);
Mask filter_implication(const FiniteSemilattice& A, Mask a, Mask b);  // throws

// The semilattice of filters ordered by inclusion, with intersection as
// meet and the whole carrier as top. Element i is the filter generated by
// element i of A, so the index map is the identity on generators.
struct FilterAlgebra {
  FiniteSemilattice sl;
  std::vector<Mask> filters;  // filters[i] = element mask of filter i

  int size() const { return sl.size(); }
  // Index of a filter given by its element mask.
  int index_of(const FiniteSemilattice& base, Mask filter) const;
};

FilterAlgebra build_filter_semilattice(const FiniteSemilattice& A);

// {p in FA | a in p} as a mask over filter indices of build_filter_semilattice.
Mask eta(const FiniteSemilattice& A, int a);

// Test helper predicate: down-closed and a&b in d implies a in d or b in d.
bool is_prime_downset(const FiniteSemilattice& A, Mask d);

}  // namespace mil
