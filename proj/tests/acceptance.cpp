// Acceptance suite: runs every top-level requirement end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mil/catalog.hpp"
#include "mil/duality.hpp"
#include "mil/equational.hpp"
#include "mil/hilbert.hpp"
#include "mil/search.hpp"
#include "mil/semantics.hpp"
#include "proof_generators.hpp"

using namespace mil;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail) {
  std::printf("%-4s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) failures++;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- criterion 1: proof-system equivalence --------------------------------

void criterion_1() {
  bool ok = true;
  std::string detail;

  ProvedTheoremSet mi =
      enumerate_theorems_with_proofs(System::MI, {"p", "q"}, 1, 30000);
  int translated = 0;
  for (const auto& t : mi.theorems) {
    if (translated >= 500) break;
    EqProof e = hilbert_to_eq(t.proof);
    if (!check_eq_proof(e).ok ||
        !(e.conclusion() == Equation{t.formula, Formula::top()})) {
      ok = false;
      detail = "hilbert_to_eq failed on " + print(t.formula);
      break;
    }
    translated++;
  }
  if (translated < 200) {
    ok = false;
    detail = "only " + std::to_string(translated) + " theorems translated";
  }

  int eq_rounds = 0;
  testgen::EqGen gen(20250810);
  for (int i = 0; ok && i < 150; i++) {
    EqProof e = gen.next();
    if (!check_eq_proof(e).ok) {
      ok = false;
      detail = "generator produced an invalid e-proof";
      break;
    }
    auto [fwd, bwd] = eq_to_hilbert(e);
    const Equation& c = e.conclusion();
    if (!check_proof(System::MI, fwd).ok ||
        fwd.conclusion() != Formula::imp(c.lhs, c.rhs) ||
        !check_proof(System::MI, bwd).ok ||
        bwd.conclusion() != Formula::imp(c.rhs, c.lhs)) {
      ok = false;
      detail = "eq_to_hilbert failed on " + print(c);
      break;
    }
    eq_rounds++;
  }
  if (ok)
    detail = std::to_string(translated) + " theorems to E, " +
             std::to_string(eq_rounds) + " random E-trees to H";
  report(1, "Hilbert/equational system equivalence", ok, detail);
}

// --- criterion 2: deduction theorem ----------------------------------------

void criterion_2() {
  bool ok = true;
  std::string detail;
  testgen::ProofGen gen(424242);
  int rounds = 0;
  for (int i = 0; i < 250 && ok; i++) {
    Proof p = gen.gen(1 + static_cast<int>(gen.pick(2)));
    if (!check_proof(System::MI, p).ok) {
      ok = false;
      detail = "generator produced an invalid derivation";
      break;
    }
    Formula a = p.ctx()[gen.pick(p.ctx().size())];
    Proof d = deduction(p, a);
    if (!check_proof(System::MI, d).ok ||
        d.conclusion() != Formula::imp(a, p.conclusion()) ||
        d.ctx() != ctx_remove(p.ctx(), a)) {
      ok = false;
      detail = "deduction failed";
      break;
    }
    Proof u = undeduction(d);
    if (!check_proof(System::MI, u).ok || u.conclusion() != p.conclusion() ||
        u.ctx() != p.ctx()) {
      ok = false;
      detail = "undeduction did not invert the endsequent";
      break;
    }
    rounds++;
  }
  if (ok) detail = std::to_string(rounds) + " generated derivations";
  report(2, "deduction theorem as a transformation", ok, detail);
}

// --- criterion 3: Peirce refutation ----------------------------------------

void criterion_3() {
  bool ok = true;
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  SearchSpec spec{System::MI, parse("((p -> q) -> p) -> p"), 3, {}};
  auto cm = find_countermodel(spec);
  double dt = seconds_since(t0);
  if (!cm || cm->model.frame.size() > 3) {
    ok = false;
    detail = "no countermodel within three worlds";
  } else if (dt >= 1.0) {
    ok = false;
    detail = "search took " + std::to_string(dt) + "s";
  }
  for (const auto& schema : axiom_schemas(System::MI)) {
    if (!ok) break;
    SearchSpec ax_spec{System::MI, schema.schema, 4, {}};
    if (find_countermodel(ax_spec)) {
      ok = false;
      detail = "axiom " + schema.id + " was refuted";
    }
  }
  if (ok)
    detail = "countermodel on " + std::to_string(cm->model.frame.size()) +
             " worlds in " + std::to_string(dt) + "s; axioms safe at bound 4";
  report(3, "Peirce refuted, axioms never refuted", ok, detail);
}

// --- criterion 4: filter algebras of distributive semilattices -------------

void criterion_4() {
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (const auto* e : catalog_upto(5, false)) {
    if (!e->distributive) continue;
    auto fa = build_filter_semilattice(e->sl);
    if (!is_distributive(fa.sl) || !implicative_witness(fa.sl)) {
      ok = false;
      detail = "failed on " + e->name;
      break;
    }
    checked++;
  }
  if (ok) detail = std::to_string(checked) + " distributive semilattices";
  report(4, "filter algebras are distributive and implicative", ok, detail);
}

// --- criterion 5: the two box-frame enumerations agree ----------------------

void criterion_5() {
  bool ok = true;
  std::string detail;
  int bases = 0, structures = 0;
  for (const auto* e : catalog_upto(4, true)) {
    IFrame base{e->sl, *e->imp};
    auto gammas = enumerate_box_gammas(base);
    auto brute = enumerate_box_relations_bruteforce(base);
    std::set<std::vector<Mask>> a(gammas.begin(), gammas.end());
    std::set<std::vector<Mask>> b(brute.begin(), brute.end());
    if (a != b || a.size() != gammas.size()) {
      ok = false;
      detail = "mismatch on " + e->name;
      break;
    }
    bases++;
    structures += static_cast<int>(gammas.size());
  }
  if (ok)
    detail = std::to_string(structures) + " structures over " +
             std::to_string(bases) + " bases";
  report(5, "relation-based and map-based box frames coincide", ok, detail);
}

// --- criterion 6: duality round trips ---------------------------------------

void criterion_6() {
  bool ok = true;
  std::string detail;
  int algebras = 0;
  for (const auto* e : catalog_upto(4, true)) {
    std::vector<int> table(e->sl.size(), 0);
    while (ok) {
      if (box_table_ok(e->sl, table)) {
        Islo a{e->sl, *e->imp, table};
        if (!duality_roundtrip_algebra(a).iso) {
          ok = false;
          detail = "algebra round trip failed on " + e->name;
        }
        algebras++;
      }
      int k = e->sl.size();
      bool done = false;
      while (k > 0) {
        k--;
        if (++table[k] < e->sl.size()) break;
        table[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
    if (!ok) break;
  }
  int frames = 0;
  for (const Frame& f : enumerate_frames(FrameKind::Box, 4)) {
    if (!ok) break;
    if (!duality_roundtrip_frame(f).iso) {
      ok = false;
      detail = "frame round trip failed";
    }
    frames++;
  }
  if (ok)
    detail = std::to_string(algebras) + " algebras, " +
             std::to_string(frames) + " frames";
  report(6, "duality round trips are isomorphisms", ok, detail);
}

// --- criterion 7: rho-flat inverts tau (box and mon) ------------------------

void criterion_7() {
  bool ok = true;
  std::string detail;
  int box_traces = 0, mon_traces = 0;
  for (const auto* e : catalog_upto(5, false)) {
    const auto& A = e->sl;
    for (Mask trace : enumerate_filters(A)) {
      if (!rho_flat_box_identity(A, trace)) {
        ok = false;
        detail = "box trace failed on " + e->name;
        break;
      }
      box_traces++;
    }
    if (!ok) break;
    const Mask full = mask_full(A.size());
    for (Mask raw = 0;; raw++) {
      bool upset = true;
      for (int a : mask_elements(raw))
        if (!mask_subset(A.up(a), raw)) upset = false;
      if (upset) {
        MonTau t = tau_mon(A, raw);
        if (!t.identity || !t.tiers_agree) {
          ok = false;
          detail = "mon trace failed on " + e->name;
          break;
        }
        mon_traces++;
      }
      if (raw == full) break;
    }
    if (!ok) break;
  }
  if (ok)
    detail = std::to_string(box_traces) + " box traces, " +
             std::to_string(mon_traces) + " mon traces (cascade collapsed)";
  report(7, "rho-flat composed with tau is the identity", ok, detail);
}

// --- criterion 8: soundness sweep -------------------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail;
  long long checks = 0;
  struct Setup {
    System sys;
    FrameKind kind;
    std::size_t budget;
    int frame_bound;
  };
  for (const Setup& s :
       {Setup{System::MI, FrameKind::I, 20000, 5},
        Setup{System::MIBox, FrameKind::Box, 4000, 4},
        Setup{System::MIMon, FrameKind::Mon, 4000, 4}}) {
    TheoremSet ts = enumerate_theorems(s.sys, {"p", "q"}, 1, s.budget);
    const auto& frames = enumerate_frames(s.kind, s.frame_bound);
    for (const auto& f : ts.theorems) {
      auto letters = f.letters();
      for (const Frame& fr : frames) {
        ValidityResult r = frame_validates(fr, f, letters);
        checks++;
        if (!r.valid) {
          ok = false;
          detail = system_name(s.sys) + " theorem refuted: " + print(f);
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) detail = std::to_string(checks) + " theorem/frame validations";
  report(8, "every enumerated theorem is frame-valid", ok, detail);
}

// --- criterion 9: relation laws of box frames -------------------------------

void criterion_9() {
  bool ok = true;
  std::string detail;
  int frames = 0;
  for (const Frame& f : enumerate_frames(FrameKind::Box, 4)) {
    ConditionReport rep = derived_frame_conditions(f);
    if (!rep.all()) {
      ok = false;
      detail = "a relation law failed on a " + std::to_string(f.size()) +
               "-world frame";
      break;
    }
    frames++;
  }
  if (ok) detail = std::to_string(frames) + " frames, all laws hold";
  report(9, "box frames satisfy the derived relation laws", ok, detail);
}

// --- model catalog for criteria 10 and 11 -----------------------------------

std::vector<Model> model_catalog(FrameKind kind, int max_worlds) {
  std::vector<Model> out;
  for (const Frame& f : enumerate_frames(kind, max_worlds)) {
    auto filters = enumerate_filters(f.sl());
    for (Mask p : filters) {
      for (Mask q : filters) {
        Model m;
        m.frame = f;
        m.val["p"] = p;
        m.val["q"] = q;
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

// --- criterion 10: expressivity at finite scale -----------------------------

void criterion_10() {
  bool ok = true;
  std::string detail;
  long long pairs = 0;
  for (FrameKind kind : {FrameKind::I, FrameKind::Box, FrameKind::Mon}) {
    for (const Model& m : model_catalog(kind, 3)) {
      Extension ext = filter_extension(m.frame);
      Model em = transport_model(m, ext);
      for (int x1 = 0; x1 < m.frame.size() && ok; x1++) {
        for (int x2 = x1; x2 < m.frame.size() && ok; x2++) {
          bool logical = logical_equivalence(m, m, x1, x2, 2).equivalent;
          bool behavioural =
              behavioural_equivalence(em, em, ext.eta[x1], ext.eta[x2], 6)
                  .equivalent;
          pairs++;
          if (logical != behavioural) {
            ok = false;
            detail = "mismatch on a " + frame_kind_name(kind) + " model (" +
                     std::to_string(x1) + "," + std::to_string(x2) +
                     "): logical=" + (logical ? "yes" : "no");
          }
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) detail = std::to_string(pairs) + " state pairs";
  report(10,
         "logical equivalence matches behavioural equivalence of the "
         "filter-extension images",
         ok, detail);
}

// --- criterion 11: denotations are filters -----------------------------------

void criterion_11() {
  bool ok = true;
  std::string detail;
  long long evals = 0;
  for (FrameKind kind : {FrameKind::I, FrameKind::Box, FrameKind::Mon}) {
    auto pool = enumerate_formulas({"p", "q"}, 3, kind == FrameKind::Box,
                                   kind == FrameKind::Mon);
    for (const Model& m : model_catalog(kind, 3)) {
      // The pool is subformula-closed and lists children first, so one
      // bottom-up pass evaluates every formula with cached children.
      const FiniteSemilattice& A = m.frame.sl();
      const int n = A.size();
      std::unordered_map<Formula, Mask, FormulaHash> denot;
      denot.reserve(pool.size());
      for (const Formula& f : pool) {
        Mask d = 0;
        switch (f.conn()) {
          case Conn::Top:
            d = mask_full(n);
            break;
          case Conn::Letter:
            d = letter_value(m, f.letter_name());
            break;
          case Conn::And:
            d = denot.at(f.lhs()) & denot.at(f.rhs());
            break;
          case Conn::Imp: {
            Mask a = denot.at(f.lhs()), b = denot.at(f.rhs());
            for (int x = 0; x < n; x++)
              if (mask_subset(A.up(x) & a, b)) d |= mask_bit(x);
            break;
          }
          case Conn::Box: {
            Mask body = denot.at(f.body());
            for (int x = 0; x < n; x++)
              if (mask_subset(m.frame.rel[x], body)) d |= mask_bit(x);
            break;
          }
          case Conn::Mon: {
            int g = filter_generator(A, denot.at(f.body()));
            for (int x = 0; x < n; x++)
              if (g >= 0 && mask_has(m.frame.nbhd[x], g)) d |= mask_bit(x);
            break;
          }
        }
        denot.emplace(f, d);
        evals++;
        if (!is_filter(A, d)) {
          ok = false;
          detail = "non-filter denotation for " + print(f);
          break;
        }
      }
      // Spot-check the cached sweep against the plain evaluator.
      for (std::size_t i = 0; ok && i < pool.size(); i += 997)
        if (denot.at(pool[i]) != eval(m, pool[i])) {
          ok = false;
          detail = "cached sweep disagrees with eval on " + print(pool[i]);
        }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) detail = std::to_string(evals) + " evaluations";
  report(11, "every denotation satisfies the filter laws", ok, detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%s: %d of 11 criteria failed (%.1fs total)\n",
              failures == 0 ? "OK" : "NOT OK", failures, seconds_since(t0));
  return failures;
}
