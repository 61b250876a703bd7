#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mil/hilbert.hpp"
#include "proof_generators.hpp"

using namespace mil;



TEST_CASE("axiom schemas") {
  CHECK(axiom_schemas(System::MI).size() == 6);
  CHECK(axiom_schemas(System::MIBox).size() == 8);
  CHECK(axiom_schemas(System::MIMon).size() == 7);
  CHECK(*find_schema(System::MI, "H1") == parse("p -> q -> p"));
  CHECK(*find_schema(System::MIMon, "M1") == parse("<m>(p & q) -> <m>p"));
  CHECK(find_schema(System::MI, "B1") == nullptr);
}

TEST_CASE("check_proof accepts the five-step identity derivation") {
  Proof p = prove_identity(parse("p"));
  CHECK(p.node_count() == 5);
  CHECK(check_proof(System::MI, p).ok);
  CHECK(p.conclusion() == parse("p -> p"));
  // The H2 instance of the first line.
  const Proof& major = p.kid(1);
  CHECK(major.kid(1).conclusion() ==
        parse("(p -> (p -> p) -> p) -> (p -> p -> p) -> p -> p"));

  CHECK(check_proof(System::MI, prove_identity(Formula::top())).ok);
  Proof pq = prove_identity(parse("p & q"));
  CHECK(check_proof(System::MI, pq).ok);
  CHECK(pq.conclusion() == parse("p & q -> p & q"));
}

TEST_CASE("check_proof on single axiom nodes") {
  CHECK(check_proof(System::MI, ax({}, "H6", {})).ok);
  Proof b2 = ax({}, "B2", {});
  CHECK(check_proof(System::MIBox, b2).ok);
  CHECK(!check_proof(System::MI, b2).ok);  // axiom not available
}

TEST_CASE("check_proof reports the failing node") {
  // An mp with a mismatched minor premise, assembled by hand.
  auto bad = std::make_shared<Proof::Node>();
  bad->rule = HRule::Mp;
  bad->ctx = {};
  bad->conclusion = parse("q");
  bad->kids = {ax({}, "H6", {}),
               ax({}, "H1", {{"p", parse("p")}, {"q", parse("q")}})};
  CheckResult r = check_proof(System::MI, Proof(bad));
  CHECK(!r.ok);
  CHECK(r.reason.find("mp") != std::string::npos);

  auto bad_ass = std::make_shared<Proof::Node>();
  bad_ass->rule = HRule::Ass;
  bad_ass->ctx = {parse("p")};
  bad_ass->conclusion = parse("q");
  CheckResult r2 = check_proof(System::MI, Proof(bad_ass));
  CHECK(!r2.ok);
  CHECK(r2.reason.find("context") != std::string::npos);
}

TEST_CASE("language restriction per system") {
  Proof boxed = ax({}, "H1", {{"p", parse("[]p")}, {"q", parse("q")}});
  CHECK(!check_proof(System::MI, boxed).ok);
  CHECK(check_proof(System::MIBox, boxed).ok);
  CHECK(!check_proof(System::MIMon, boxed).ok);
}

TEST_CASE("cong rule") {
  // p & q <-> q & p, then congruence under the box.
  Formula p = parse("p"), q = parse("q");
  Formula pq = parse("p & q"), qp = parse("q & p");
  Proof fwd = deduction(
      conj_context(conj_intro(ass({p, q}, q), ass({p, q}, p)), p, q), pq);
  Proof bwd = deduction(
      conj_context(conj_intro(ass({p, q}, p), ass({p, q}, q)), q, p), qp);
  Proof iff = conj_intro(fwd, bwd);
  Proof c = cong(iff, Modality::Box);
  CHECK(check_proof(System::MIBox, c).ok);
  CHECK(c.conclusion() ==
        Formula::iff(parse("[](p & q)"), parse("[](q & p)")));
  CHECK(!check_proof(System::MIMon, c).ok);
  Proof cm = cong(iff, Modality::Mon);
  CHECK(check_proof(System::MIMon, cm).ok);
  // Congruence under assumptions is rejected.
  Formula biimp = Formula::iff(p, q);
  CHECK_THROWS_AS(cong(ass({biimp}, biimp), Modality::Box), ProofBuildError);
}

TEST_CASE("weaken") {
  Proof p = ax({}, "H6", {});
  Proof w = weaken(p, parse("p"));
  CHECK(check_proof(System::MI, w).ok);
  CHECK(w.ctx() == std::vector<Formula>{parse("p")});

  Proof a = ass({parse("a")}, parse("a"));
  Proof wa = weaken(a, parse("b"));
  CHECK(check_proof(System::MI, wa).ok);
  CHECK(wa.ctx().size() == 2);

  Proof id = weaken(prove_identity(parse("p")), parse("q"));
  CHECK(check_proof(System::MI, id).ok);
  for (std::size_t i = 0; i < id.arity(); i++)
    CHECK(id.kid(i).ctx() == std::vector<Formula>{parse("q")});
}

TEST_CASE("deduction theorem on small inputs") {
  // Ass({a}, a) becomes the identity proof.
  Proof p1 = deduction(ass({parse("a")}, parse("a")), parse("a"));
  CHECK(check_proof(System::MI, p1).ok);
  CHECK(p1.conclusion() == parse("a -> a"));
  CHECK(p1.ctx().empty());

  // Ax({a}, T) becomes a -> T via H1 and mp.
  Proof p2 = deduction(ax({parse("a")}, "H6", {}), parse("a"));
  CHECK(check_proof(System::MI, p2).ok);
  CHECK(p2.conclusion() == parse("a -> T"));

  // {p, q} |- p & q discharged twice.
  std::vector<Formula> ctx = {parse("p"), parse("q")};
  Proof pq = conj_intro(ass(ctx, parse("p")), ass(ctx, parse("q")));
  Proof d1 = deduction(pq, parse("q"));
  Proof d2 = deduction(d1, parse("p"));
  CHECK(check_proof(System::MI, d2).ok);
  CHECK(d2.conclusion() == parse("p -> q -> p & q"));
  CHECK(d2.ctx().empty());

  CHECK_THROWS_AS(deduction(ax({}, "H6", {}), parse("a")), InvalidProofInput);
}

TEST_CASE("undeduction") {
  Proof h1 = ax({}, "H1", {{"p", parse("p")}, {"q", parse("q")}});
  Proof u = undeduction(h1);
  CHECK(check_proof(System::MI, u).ok);
  CHECK(u.conclusion() == parse("q -> p"));
  CHECK(u.ctx() == std::vector<Formula>{parse("p")});

  Proof u2 = undeduction(prove_identity(parse("p")));
  CHECK(check_proof(System::MI, u2).ok);
  CHECK(u2.conclusion() == parse("p"));
  CHECK(u2.ctx() == std::vector<Formula>{parse("p")});
}

TEST_CASE("conjunction helpers") {
  Proof t = ax({}, "H6", {});
  Proof both = conj_intro(t, t);
  CHECK(check_proof(System::MI, both).ok);
  CHECK(both.conclusion() == parse("T & T"));

  Proof a = ass({parse("p & q")}, parse("p & q"));
  auto [l, r] = conj_split(a);
  CHECK(check_proof(System::MI, l).ok);
  CHECK(l.conclusion() == parse("p"));
  CHECK(check_proof(System::MI, r).ok);
  CHECK(r.conclusion() == parse("q"));

  // Folding and unfolding a conjunction in the context round-trips.
  std::vector<Formula> ctx = {parse("p"), parse("q"), parse("r")};
  Proof body = conj_intro(ass(ctx, parse("p")), ass(ctx, parse("r")));
  Proof folded = conj_context(body, parse("p"), parse("q"));
  CHECK(check_proof(System::MI, folded).ok);
  CHECK(ctx_contains(folded.ctx(), parse("p & q")));
  Proof unfolded = conj_context_inv(folded, parse("p"), parse("q"));
  CHECK(check_proof(System::MI, unfolded).ok);
  CHECK(unfolded.conclusion() == body.conclusion());
  CHECK(unfolded.ctx() == body.ctx());

  // Degenerate fold with a == b.
  Proof dup =
      conj_context(ass({parse("p")}, parse("p")), parse("p"), parse("p"));
  CHECK(check_proof(System::MI, dup).ok);
  CHECK(ctx_contains(dup.ctx(), parse("p & p")));
}

TEST_CASE("generated derivations: deduction and undeduction invert") {
  testgen::ProofGen gen(20240811);
  int rounds = 0;
  for (int i = 0; i < 250; i++) {
    Proof p = gen.gen(1 + static_cast<int>(gen.pick(2)));
    REQUIRE(check_proof(System::MI, p).ok);
    Formula a = p.ctx()[gen.pick(p.ctx().size())];
    Proof d = deduction(p, a);
    REQUIRE(check_proof(System::MI, d).ok);
    CHECK(d.conclusion() == Formula::imp(a, p.conclusion()));
    CHECK(d.ctx() == ctx_remove(p.ctx(), a));
    Proof u = undeduction(d);
    REQUIRE(check_proof(System::MI, u).ok);
    CHECK(u.conclusion() == p.conclusion());
    CHECK(u.ctx() == p.ctx());
    rounds++;
  }
  CHECK(rounds == 250);
}

TEST_CASE("enumerate_theorems finds the expected theorems") {
  TheoremSet mi = enumerate_theorems(System::MI, {"p"}, 1, 20000);
  auto contains = [](const TheoremSet& ts, const Formula& f) {
    for (const auto& t : ts.theorems)
      if (t == f) return true;
    return false;
  };
  CHECK(contains(mi, parse("p -> p")));
  CHECK(contains(mi, parse("T")));

  TheoremSet mibox = enumerate_theorems(System::MIBox, {"p"}, 1, 20000);
  CHECK(contains(mibox, parse("[]T -> T")));

  TheoremSet mimon = enumerate_theorems(System::MIMon, {"p", "q"}, 1, 30000);
  CHECK(contains(mimon, parse("<m>(p & q) -> <m>p")));

  // Budget cut produces a flagged partial set.
  TheoremSet cut = enumerate_theorems(System::MI, {"p", "q"}, 1, 50);
  CHECK(!cut.complete);
  CHECK(cut.theorems.size() == 50);

  // Determinism.
  TheoremSet again = enumerate_theorems(System::MI, {"p"}, 1, 20000);
  CHECK(again.theorems.size() == mi.theorems.size());
  for (std::size_t i = 0; i < again.theorems.size(); i++)
    CHECK(again.theorems[i] == mi.theorems[i]);
}
