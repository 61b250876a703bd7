#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mil/formula.hpp"
#include "mil/hilbert.hpp"
#include "mil/order.hpp"

namespace mil {

struct Equation {
  Formula lhs, rhs;
  bool operator==(const Equation& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
};

// a <= b abbreviates a & b = a.
Equation leq_equation(const Formula& a, const Formula& b);
std::string print(const Equation& e);
Equation parse_equation(std::string_view text);

enum class ERule {
  E1,  // a & (b & c) = (a & b) & c
  E2,  // a & b = b & a
  E3,  // a & a = a
  E4,  // a & T = a
  Ref,
  Sym,
  Trans,
  CongAnd,
  CongImp,
  ResUp,    // from a&b <= c conclude a <= b -> c
  ResDown,  // converse
};

std::string erule_name(ERule r);
std::optional<ERule> erule_from_name(const std::string& name);
const Equation& eq_axiom_schema(ERule r);  // E1..E4 only

class EqProof {
public:
  struct Node {
    ERule rule;
    Equation concl;
    Substitution sub;  // axiom nodes
    std::vector<EqProof> kids;
  };

  EqProof() = default;
  explicit EqProof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node& node() const { return *node_; }
  ERule rule() const { return node_->rule; }
  const Equation& conclusion() const { return node_->concl; }
  const EqProof& kid(std::size_t i) const { return node_->kids[i]; }
  std::size_t arity() const { return node_->kids.size(); }
  bool valid() const { return node_ != nullptr; }
  std::size_t node_count() const;

private:
  std::shared_ptr<const Node> node_;
};

// Builders; shape violations throw ProofBuildError.
EqProof e_axiom(ERule r, const Substitution& sub);
EqProof e_refl(const Formula& t);
EqProof e_sym(const EqProof& p);
EqProof e_trans(const EqProof& p, const EqProof& q);
EqProof e_cong_and(const EqProof& p, const EqProof& q);
EqProof e_cong_imp(const EqProof& p, const EqProof& q);
EqProof e_res_up(const EqProof& p);
EqProof e_res_down(const EqProof& p);

CheckResult check_eq_proof(const EqProof& p);

// --- lemma library -------------------------------------------------------

// a <= T (an E4 instance after unfolding).
EqProof leq_top(const Formula& a);
// From a <= b and b <= a conclude a = b.
EqProof eq_from_leq(const EqProof& ab, const EqProof& ba);
// From a = b conclude (a <= b, b <= a).
std::pair<EqProof, EqProof> leq_from_eq(const EqProof& p);
// a & b = (a & b) & (a -> b)
EqProof res3_first(const Formula& a, const Formula& b);
// a & b = a & (a -> b)
EqProof res3_second(const Formula& a, const Formula& b);

// --- translations --------------------------------------------------------

// E |- a = b  ~>  (H |- a -> b, H |- b -> a).
std::pair<Proof, Proof> eq_to_hilbert(const EqProof& p);

// H |- f (empty context, no modal rules)  ~>  E |- f = T.
EqProof hilbert_to_eq(const Proof& p);

// --- algebraic evaluation -------------------------------------------------

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interprets & as meet, -> as the residuated implication, T as top; modal
// operators require the corresponding unary table.
int eval_term(const FiniteSemilattice& A, const ImpWitness& imp,
              const std::vector<int>* box_table,
              const std::vector<int>* mon_table, const Formula& t,
              const std::map<std::string, int>& env);

bool eval_equation_in_algebra(const FiniteSemilattice& A, const ImpWitness& imp,
                              const Equation& e,
                              const std::map<std::string, int>& env,
                              const std::vector<int>* box_table = nullptr,
                              const std::vector<int>* mon_table = nullptr);

}  // namespace mil
