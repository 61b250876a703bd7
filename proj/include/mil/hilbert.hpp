#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mil/formula.hpp"

namespace mil {

enum class System { MI, MIBox, MIMon };

std::string system_name(System s);
std::optional<System> system_from_name(const std::string& name);

struct AxiomSchema {
  std::string id;
  Formula schema;
};

// MI: H1..H6. MIBox adds B1, B2 and the congruence rule for []. MIMon adds
// M1 and the congruence rule for <m>. The biconditionals of B1/B2 are
// expanded into conjunctions of two implications.
const std::vector<AxiomSchema>& axiom_schemas(System sys);
const Formula* find_schema(System sys, const std::string& id);

enum class HRule { Ass, Ax, Mp, Cong };
enum class Modality { Box, Mon };

// Immutable derivation tree. Contexts are sorted duplicate-free formula
// lists; Mp children carry the same context as their parent.
class Proof {
public:
  struct Node {
    HRule rule;
    std::vector<Formula> ctx;
    Formula conclusion;
    std::string axiom_id;  // Ax
    Substitution sub;      // Ax
    Modality modality = Modality::Box;  // Cong
    std::vector<Proof> kids;
  };

  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  Proof() = default;

  const Node& node() const { return *node_; }
  HRule rule() const { return node_->rule; }
  const std::vector<Formula>& ctx() const { return node_->ctx; }
  const Formula& conclusion() const { return node_->conclusion; }
  const Proof& kid(std::size_t i) const { return node_->kids[i]; }
  std::size_t arity() const { return node_->kids.size(); }
  bool valid() const { return node_ != nullptr; }
  std::size_t node_count() const;

private:
  std::shared_ptr<const Node> node_;
};

// Canonical context handling.
std::vector<Formula> ctx_add(std::vector<Formula> ctx, const Formula& f);
std::vector<Formula> ctx_remove(std::vector<Formula> ctx, const Formula& f);
bool ctx_contains(const std::vector<Formula>& ctx, const Formula& f);
std::vector<Formula> ctx_normalize(std::vector<Formula> ctx);

struct ProofBuildError : std::logic_error {
  using std::logic_error::logic_error;
};

// Node builders. They normalise contexts and compute conclusions; shape
// violations (e.g. mp on a non-implication) throw ProofBuildError.
Proof ass(std::vector<Formula> ctx, const Formula& f);
Proof ax(std::vector<Formula> ctx, const std::string& axiom_id,
         const Substitution& sub);
Proof ax_raw(std::vector<Formula> ctx, const std::string& axiom_id,
             const Substitution& sub, const Formula& conclusion);
Proof mp(const Proof& minor, const Proof& major);
Proof cong(const Proof& child, Modality m);

struct CheckResult {
  bool ok = false;
  std::string path;    // child indices from the root, e.g. "0.1"
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

CheckResult check_proof(System sys, const Proof& p);

struct InvalidProofInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The five-step derivation of a -> a (two H1 instances, one H2 instance,
// two applications of mp).
Proof prove_identity(const Formula& a, std::vector<Formula> ctx = {});

// From a proof of Gamma |- b, a proof of Gamma |- c -> b via H1 and mp.
Proof prove_weakened_consequent(const Proof& p, const Formula& c);

// Adds `extra` to every context. Rejects proofs with Cong nodes (their
// side condition pins the context to be empty).
Proof weaken(const Proof& p, const Formula& extra);

// Gamma, a |- b  ~>  Gamma |- a -> b. `discharge` must occur in the context.
Proof deduction(const Proof& p, const Formula& discharge);

// Gamma |- a -> b  ~>  Gamma, a |- b.
Proof undeduction(const Proof& p);

// Gamma |- a, Gamma |- b  ~>  Gamma |- a & b  (H5 + mp twice).
Proof conj_intro(const Proof& pa, const Proof& pb);

// Gamma |- a & b  ~>  (Gamma |- a, Gamma |- b)  (H3/H4 + mp).
std::pair<Proof, Proof> conj_split(const Proof& p);

// Gamma, a, b |- c  ~>  Gamma, a & b |- c, and its inverse.
Proof conj_context(const Proof& p, const Formula& a, const Formula& b);
Proof conj_context_inv(const Proof& p, const Formula& a, const Formula& b);

// Combinator-style derivations with constant overhead; all inputs must
// share one context.
// Gamma |- a -> b and Gamma |- b -> c give Gamma |- a -> c.
Proof compose_imp(const Proof& ab, const Proof& bc);
// Gamma |- x -> (y -> z) and Gamma |- x -> y give Gamma |- x -> z.
Proof imp_apply(const Proof& xyz, const Proof& xy);
// Gamma |- x -> a and Gamma |- x -> b give Gamma |- x -> a & b.
Proof imp_pair(const Proof& xa, const Proof& xb);
// Gamma |- b -> c gives Gamma |- (a -> b) -> (a -> c).
Proof imp_postcompose(const Formula& a, const Proof& bc);

// Same transformations without the up-front validity check of the input.
// Callers guarantee that inputs check and contain no cong nodes; outputs
// are then valid by construction.
namespace unchecked {
Proof weaken(const Proof& p, const Formula& extra);
Proof deduction(const Proof& p, const Formula& discharge);
Proof undeduction(const Proof& p);
Proof conj_intro(const Proof& pa, const Proof& pb);
std::pair<Proof, Proof> conj_split(const Proof& p);
Proof conj_context(const Proof& p, const Formula& a, const Formula& b);
Proof conj_context_inv(const Proof& p, const Formula& a, const Formula& b);
}  // namespace unchecked

struct TheoremSet {
  std::vector<Formula> theorems;  // sorted by printed form
  bool complete = true;           // false when the budget cut saturation
};

// All axiom instances with substitutions drawn from the formula pool over
// `letters` (heights <= pool_height), saturated under mp (and cong for the
// modal systems) until a fixpoint or until `budget` theorems were produced.
TheoremSet enumerate_theorems(System sys,
                              const std::vector<std::string>& letters,
                              int pool_height, std::size_t budget);

struct ProvedTheorem {
  Formula formula;
  Proof proof;
};

struct ProvedTheoremSet {
  std::vector<ProvedTheorem> theorems;
  bool complete = true;
};

// Same enumeration carrying derivation certificates; derived theorems hold
// mp/cong proofs over the certificates of their premises.
ProvedTheoremSet enumerate_theorems_with_proofs(
    System sys, const std::vector<std::string>& letters, int pool_height,
    std::size_t budget);

}  // namespace mil
