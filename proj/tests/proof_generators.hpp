#pragma once

// Deterministic random derivation generators shared by the unit and
// acceptance suites.

#include <random>
#include <vector>

#include "mil/equational.hpp"
#include "mil/hilbert.hpp"

namespace mil::testgen {

// Valid Hilbert derivations over a fixed context: leaves are assumptions
// and axiom instances, inner steps chain mp through H1/H3/H5 instances.
struct ProofGen {
  std::mt19937 rng;
  std::vector<Formula> ctx;
  std::vector<Formula> small;

  explicit ProofGen(unsigned seed) : rng(seed) {
    small = {parse("p"), parse("q"), parse("T"), parse("p -> q"),
             parse("p & q")};
    ctx = {parse("p"), parse("q"), parse("p -> q")};
  }

  std::size_t pick(std::size_t n) { return rng() % n; }
  const Formula& small_formula() { return small[pick(small.size())]; }

  Proof leaf() {
    if (pick(2) == 0) return ass(ctx, ctx[pick(ctx.size())]);
    const auto& schemas = axiom_schemas(System::MI);
    const auto& schema = schemas[pick(schemas.size())];
    Substitution sub;
    for (const auto& v : schema.schema.letters())
      sub.emplace(v, small_formula());
    return ax(ctx, schema.id, sub);
  }

  Proof gen(int depth) {
    if (depth == 0) return leaf();
    switch (pick(4)) {
      case 0: {
        Proof p = gen(depth - 1);
        return prove_weakened_consequent(p, small_formula());
      }
      case 1: {
        Proof p = gen(depth - 1);
        Proof q = gen(depth - 1);
        Proof h5 =
            ax(ctx, "H5", {{"p", p.conclusion()}, {"q", q.conclusion()}});
        return mp(q, mp(p, h5));
      }
      case 2: {
        Proof p = gen(depth - 1);
        if (p.conclusion().is(Conn::And)) {
          Proof h3 = ax(ctx, "H3",
                        {{"p", p.conclusion().lhs()},
                         {"q", p.conclusion().rhs()}});
          return mp(p, h3);
        }
        return prove_weakened_consequent(p, small_formula());
      }
      default: {
        Proof p = gen(depth - 1);
        Proof id = prove_identity(p.conclusion(), ctx);
        return mp(p, id);
      }
    }
  }
};

// Random equational derivations grown from axiom instances and closed
// under the rules whose shape constraints the current pool can satisfy.
struct EqGen {
  std::mt19937 rng;
  std::vector<Formula> terms;
  std::vector<EqProof> pool;

  explicit EqGen(unsigned seed) : rng(seed) {
    terms = {parse("p"), parse("q"), parse("T"), parse("p & q"),
             parse("p -> q")};
    for (ERule r : {ERule::E1, ERule::E2, ERule::E3, ERule::E4})
      pool.push_back(e_axiom(r, random_sub(r)));
    pool.push_back(e_refl(term()));
  }

  std::size_t pick(std::size_t n) { return rng() % n; }
  const Formula& term() { return terms[pick(terms.size())]; }

  Substitution random_sub(ERule r) {
    Substitution s;
    for (const auto& v : eq_axiom_schema(r).lhs.letters()) s.emplace(v, term());
    return s;
  }

  EqProof step() {
    switch (pick(8)) {
      case 0: {
        ERule r = static_cast<ERule>(pick(4));
        return e_axiom(r, random_sub(r));
      }
      case 1:
        return e_refl(term());
      case 2:
        return e_sym(pool[pick(pool.size())]);
      case 3: {
        for (int tries = 0; tries < 20; tries++) {
          const EqProof& a = pool[pick(pool.size())];
          const EqProof& b = pool[pick(pool.size())];
          if (a.conclusion().rhs == b.conclusion().lhs) return e_trans(a, b);
        }
        const EqProof& a = pool[pick(pool.size())];
        return e_trans(a, e_refl(a.conclusion().rhs));
      }
      case 4:
        return e_cong_and(pool[pick(pool.size())], pool[pick(pool.size())]);
      case 5:
        return e_cong_imp(pool[pick(pool.size())], pool[pick(pool.size())]);
      case 6: {
        for (int tries = 0; tries < 20; tries++) {
          const EqProof& a = pool[pick(pool.size())];
          const Equation& e = a.conclusion();
          if (e.lhs.is(Conn::And) && e.lhs.lhs() == e.rhs &&
              e.rhs.is(Conn::And))
            return e_res_up(a);
        }
        Formula x = term(), y = term();
        return e_res_up(e_axiom(ERule::E3, {{"a", Formula::conj(x, y)}}));
      }
      default: {
        for (int tries = 0; tries < 20; tries++) {
          const EqProof& a = pool[pick(pool.size())];
          const Equation& e = a.conclusion();
          if (e.lhs.is(Conn::And) && e.lhs.lhs() == e.rhs &&
              e.lhs.rhs().is(Conn::Imp))
            return e_res_down(a);
        }
        Formula x = term(), y = term();
        return e_res_down(e_axiom(ERule::E3, {{"a", Formula::imp(x, y)}}));
      }
    }
  }

  EqProof next() {
    EqProof p = step();
    if (p.node_count() <= 400) pool.push_back(p);
    if (pool.size() > 300) pool.erase(pool.begin(), pool.begin() + 100);
    return p;
  }
};

}  // namespace mil::testgen
