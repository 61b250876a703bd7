#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mil/formula.hpp"
#include "mil/hilbert.hpp"
#include "mil/order.hpp"

namespace mil {

struct SemanticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An implicative semilattice used as a Kripke frame: worlds are the
// elements, the accessibility order is <=.
struct IFrame {
  FiniteSemilattice sl;
  ImpWitness imp;

  int size() const { return sl.size(); }
};

IFrame make_iframe(FiniteSemilattice sl);  // throws if not implicative

enum class FrameKind { I, Box, Mon };

std::string frame_kind_name(FrameKind k);
std::optional<FrameKind> frame_kind_from_name(const std::string& s);
FrameKind frame_kind_for(System sys);

// rel[x] is the successor set of world x (Box only). nbhd[x] is an
// up-closed collection of filters given as a mask over filter ids, where
// filter id g denotes the principal filter of generator g (Mon only).
struct Frame {
  FrameKind kind = FrameKind::I;
  IFrame base;
  std::vector<Mask> rel;
  std::vector<Mask> nbhd;

  int size() const { return base.size(); }
  const FiniteSemilattice& sl() const { return base.sl; }
};

using Valuation = std::map<std::string, Mask>;

struct Model {
  Frame frame;
  Valuation val;
};

struct FrameCheck {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
  std::string to_string() const;
};

// B1: TRx iff x = T, and xRT for all x. B2: xRy <= z implies xRz.
// B3: xRy and x'Ry' imply (x & x')R(y & y'). B4: (x & x')Rz splits as
// z = y & y' with xRy, x'Ry'. Also checks the equivalent map form (every
// R[x] a filter, R[T] = {T}, R[x & y] = R[x] join R[y]) and that the two
// characterisations agree.
FrameCheck check_box_frame(const IFrame& base, const std::vector<Mask>& rel);
FrameCheck check_mon_frame(const IFrame& base, const std::vector<Mask>& nbhd);

Frame make_i_frame(IFrame base);
Frame make_box_frame(IFrame base, std::vector<Mask> rel);     // throws
Frame make_mon_frame(IFrame base, std::vector<Mask> nbhd);    // throws

// Filter assigned to a letter; unlisted letters get the unit filter {top}.
Mask letter_value(const Model& m, const std::string& name);

// Denotation {x | m, x |= f}. Throws SemanticsError on a modality the
// frame does not interpret.
Mask eval(const Model& m, const Formula& f);

// Variant interpreting box through the composite (<= ; R): x |= []f iff
// every y with x (<= ; R) y satisfies f. Agrees with eval on box frames.
Mask eval_composite_box(const Model& m, const Formula& f);

struct ValidityResult {
  bool valid = true;
  Valuation countervaluation;
  int world = -1;
};

// Sweeps every valuation of the listed letters (letters lexicographic,
// filters by generator index) and reports the first failure.
ValidityResult frame_validates(const Frame& fr, const Formula& f,
                               const std::vector<std::string>& letters);

struct ConditionReport {
  std::vector<std::pair<std::string, bool>> conditions;
  bool all() const;
};

// Relation laws every box frame satisfies: R = (<= ; R ; <=),
// (>= ; R) included in (R ; >=), (<= ; R) included in (R ; <=),
// strict condensation, the Plotkin-Stirling pair, and agreement of the
// composite box clause with the plain one.
ConditionReport derived_frame_conditions(const Frame& f);

struct MorphReport {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// h maps source worlds to target worlds. Checks top/meet preservation,
// order boundedness, and the modal condition of the frame kind.
MorphReport check_morphism(const Frame& src, const Frame& dst,
                           const std::vector<int>& h);

bool valuations_compatible(const Model& src, const Model& dst,
                           const std::vector<int>& h);

struct TruthPresReport {
  bool ok = true;
  Formula witness;
  int world = -1;
};

// Verifies x |= f iff h(x) |= f for every world and pool formula;
// preconditions: check_morphism holds and the valuations are compatible.
TruthPresReport truth_preservation_check(const std::vector<int>& h,
                                         const Model& src, const Model& dst,
                                         const std::vector<Formula>& pool);

}  // namespace mil
