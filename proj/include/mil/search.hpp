#pragma once

#include <optional>
#include <vector>

#include "mil/formula.hpp"
#include "mil/hilbert.hpp"
#include "mil/semantics.hpp"

namespace mil {

struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchSpec {
  System system = System::MI;
  Formula target;
  int max_worlds = 3;
  std::vector<std::string> letters;  // empty: use the target's letters
};

// All box structures on a base, as successor masks per world, generated
// from meet-preserving endomorphisms (world to generator of its successor
// filter). Deterministic order.
std::vector<std::vector<Mask>> enumerate_box_gammas(const IFrame& base);

// Brute force over all 2^(n^2) relations, keeping those that pass
// check_box_frame. Guarded to n <= 4.
std::vector<std::vector<Mask>> enumerate_box_relations_bruteforce(
    const IFrame& base);

// All valid neighbourhood assignments on a base (n <= 6).
std::vector<std::vector<Mask>> enumerate_mon_nbhds(const IFrame& base);

// All catalog frames of the kind with at most max_worlds worlds
// (max_worlds <= 6; the catalog is exhaustive up to 5 worlds and carries
// the six-element chain beyond that). Deterministic order: bases by
// catalog order, structures by enumeration order.
const std::vector<Frame>& enumerate_frames(FrameKind kind, int max_worlds);

struct Countermodel {
  Model model;
  int world = -1;
};

// First frame/valuation/world (in canonical order) where the target fails;
// absence only means "no countermodel within the bound".
std::optional<Countermodel> find_countermodel(const SearchSpec& spec);

struct ConservativityReport {
  bool agreement = false;
  std::optional<Countermodel> i_witness;
  std::optional<Countermodel> box_witness;
};

// For a modality-free formula, countermodel search over I-frames and over
// box frames must agree within the bound.
ConservativityReport conservativity_probe(const Formula& f, int bound);

}  // namespace mil
