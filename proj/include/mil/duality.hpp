#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mil/order.hpp"
#include "mil/semantics.hpp"

namespace mil {

// Implicative semilattice with a meet-preserving unary operator.
struct Islo {
  FiniteSemilattice sl;
  ImpWitness imp;
  std::vector<int> box;

  int size() const { return sl.size(); }
};

// Implicative semilattice with a monotone operator: mon(a & b) <= mon(a).
struct MonAlgebra {
  FiniteSemilattice sl;
  ImpWitness imp;
  std::vector<int> mon;

  int size() const { return sl.size(); }
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Islo make_islo(FiniteSemilattice sl, std::vector<int> box);
MonAlgebra make_mon_algebra(FiniteSemilattice sl, std::vector<int> mon);
bool box_table_ok(const FiniteSemilattice& sl, const std::vector<int>& box);
bool mon_table_ok(const FiniteSemilattice& sl, const std::vector<int>& mon);

// {x | R[x] subset of p}; always a filter on a box frame.
Mask m_box(const Frame& f, Mask p);

// Algebra of filters of a box frame: meet is intersection, implication is
// filter_implication, box is m_box.
Islo complex_algebra(const Frame& box_frame);

// Algebra of filters of a mon frame: mon sends p to {x | p in nbhd(x)}.
MonAlgebra complex_algebra_mon(const Frame& mon_frame);

// Frame of filters of an ISLO under inclusion; p R q iff every a with
// box(a) in p lies in q.
Frame dual_frame(const Islo& a);

struct IsoReport {
  bool iso = true;
  std::string failure;
  std::vector<int> witness;  // the canonical map, defined even on failure
  explicit operator bool() const { return iso; }
};

// complex_algebra(dual_frame(a)) is isomorphic to a via x ~> {p | x in p}.
IsoReport duality_roundtrip_algebra(const Islo& a);

// dual_frame(complex_algebra(f)) is isomorphic to f via the same map.
IsoReport duality_roundtrip_frame(const Frame& f);

// Filters over the box-term algebra are determined by their generator
// trace {a | box a in U}, itself a filter of A. Verifies, for every a,
// that tau(U) lands inside {p | a in p} exactly when a is in the trace.
bool rho_flat_box_identity(const FiniteSemilattice& A, Mask trace);

// {p in FA | trace subset of p} as a mask over filter indices.
Mask tau_box(const FiniteSemilattice& A, Mask trace);

struct MonTau {
  Mask collection = 0;   // over the filter ids of the filter algebra
  bool tiers_agree = false;
  bool identity = false;  // mon-trace recovered: a in trace iff clopen-of-a in
};

// The three-tier construction (clopen, closed, arbitrary filters) for a
// monotone trace, which is an up-closed subset of A. At finite scale every
// filter is clopen and the tiers collapse; `tiers_agree` records that.
MonTau tau_mon(const FiniteSemilattice& A, Mask upset_trace);

struct Extension {
  Frame frame;
  std::vector<int> eta;  // old world -> new world
};

// Frame of filters-of-filters with the transported modal structure; eta is
// an embedding and, at finite scale, an isomorphism.
Extension filter_extension(const Frame& f);

// Valuation transported along the extension: a letter interpreted by the
// filter v goes to {q | v in q}.
Model transport_model(const Model& m, const Extension& ext);

struct BehEqResult {
  bool equivalent = false;
  bool bound_limited = false;  // search exhausted; absence is not a proof
  int target_index = -1;       // witness target in the enumeration order
  std::vector<int> h1, h2;
  explicit operator bool() const { return equivalent; }
};

// True iff some catalog frame with at most `bound` worlds admits morphisms
// h1, h2 from the two models, compatible with a common valuation, with
// h1(x1) = h2(x2).
BehEqResult behavioural_equivalence(const Model& m1, const Model& m2, int x1,
                                    int x2, int bound);

struct LogEqResult {
  bool equivalent = true;
  Formula witness;  // meaningful when not equivalent
};

// Same formulas satisfied up to the given height over the models' letters.
LogEqResult logical_equivalence(const Model& m1, const Model& m2, int x1,
                                int x2, int depth);

}  // namespace mil
