#include "mil/equational.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace mil {

Equation leq_equation(const Formula& a, const Formula& b) {
  return Equation{Formula::conj(a, b), a};
}

std::size_t EqProof::node_count() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.node_count();
  return n;
}

std::string print(const Equation& e) {
  return print(e.lhs) + " = " + print(e.rhs);
}

Equation parse_equation(std::string_view text) {
  auto pos = text.find('=');
  if (pos == std::string_view::npos)
    throw ParseError("expected '=' in equation", text.size());
  return Equation{parse(text.substr(0, pos)), parse(text.substr(pos + 1))};
}

std::string erule_name(ERule r) {
  switch (r) {
    case ERule::E1: return "e1";
    case ERule::E2: return "e2";
    case ERule::E3: return "e3";
    case ERule::E4: return "e4";
    case ERule::Ref: return "ref";
    case ERule::Sym: return "sym";
    case ERule::Trans: return "trans";
    case ERule::CongAnd: return "cong&";
    case ERule::CongImp: return "cong->";
    case ERule::ResUp: return "res_up";
    case ERule::ResDown: return "res_down";
  }
  return "?";
}

std::optional<ERule> erule_from_name(const std::string& name) {
  static const std::vector<std::pair<std::string, ERule>> table = {
      {"e1", ERule::E1},         {"e2", ERule::E2},
      {"e3", ERule::E3},         {"e4", ERule::E4},
      {"ref", ERule::Ref},       {"sym", ERule::Sym},
      {"trans", ERule::Trans},   {"cong&", ERule::CongAnd},
      {"cong->", ERule::CongImp}, {"res_up", ERule::ResUp},
      {"res_down", ERule::ResDown},
  };
  for (const auto& [n, r] : table)
    if (n == name) return r;
  return std::nullopt;
}

const Equation& eq_axiom_schema(ERule r) {
  static const Equation e1{parse("a & (b & c)"), parse("(a & b) & c")};
  static const Equation e2{parse("a & b"), parse("b & a")};
  static const Equation e3{parse("a & a"), parse("a")};
  static const Equation e4{parse("a & T"), parse("a")};
  switch (r) {
    case ERule::E1: return e1;
    case ERule::E2: return e2;
    case ERule::E3: return e3;
    case ERule::E4: return e4;
    default:
      throw std::logic_error("eq_axiom_schema: not an axiom rule");
  }
}

namespace {

EqProof mk(ERule rule, Equation concl, Substitution sub,
           std::vector<EqProof> kids) {
  auto n = std::make_shared<EqProof::Node>();
  n->rule = rule;
  n->concl = std::move(concl);
  n->sub = std::move(sub);
  n->kids = std::move(kids);
  return EqProof(std::move(n));
}

// Decomposes a conclusion of shape  u & v = u  (that is, u <= v).
struct LeqView {
  Formula u, v;
};
std::optional<LeqView> as_leq(const Equation& e) {
  if (!e.lhs.is(Conn::And)) return std::nullopt;
  if (e.lhs.lhs() != e.rhs) return std::nullopt;
  return LeqView{e.rhs, e.lhs.rhs()};
}

}  // namespace

EqProof e_axiom(ERule r, const Substitution& sub) {
  const Equation& schema = eq_axiom_schema(r);
  return mk(r,
            Equation{apply_substitution(sub, schema.lhs),
                     apply_substitution(sub, schema.rhs)},
            sub, {});
}

EqProof e_refl(const Formula& t) {
  return mk(ERule::Ref, Equation{t, t}, {}, {});
}

EqProof e_sym(const EqProof& p) {
  return mk(ERule::Sym, Equation{p.conclusion().rhs, p.conclusion().lhs}, {},
            {p});
}

EqProof e_trans(const EqProof& p, const EqProof& q) {
  if (p.conclusion().rhs != q.conclusion().lhs)
    throw ProofBuildError("trans: middle terms differ: " +
                          print(p.conclusion().rhs) + " vs " +
                          print(q.conclusion().lhs));
  return mk(ERule::Trans, Equation{p.conclusion().lhs, q.conclusion().rhs}, {},
            {p, q});
}

EqProof e_cong_and(const EqProof& p, const EqProof& q) {
  return mk(ERule::CongAnd,
            Equation{Formula::conj(p.conclusion().lhs, q.conclusion().lhs),
                     Formula::conj(p.conclusion().rhs, q.conclusion().rhs)},
            {}, {p, q});
}

EqProof e_cong_imp(const EqProof& p, const EqProof& q) {
  return mk(ERule::CongImp,
            Equation{Formula::imp(p.conclusion().lhs, q.conclusion().lhs),
                     Formula::imp(p.conclusion().rhs, q.conclusion().rhs)},
            {}, {p, q});
}

EqProof e_res_up(const EqProof& p) {
  auto leq = as_leq(p.conclusion());
  if (!leq || !leq->u.is(Conn::And))
    throw ProofBuildError("res_up: premise is not of shape x & y <= v");
  Formula x = leq->u.lhs(), y = leq->u.rhs(), v = leq->v;
  return mk(ERule::ResUp, leq_equation(x, Formula::imp(y, v)), {}, {p});
}

EqProof e_res_down(const EqProof& p) {
  auto leq = as_leq(p.conclusion());
  if (!leq || !leq->v.is(Conn::Imp))
    throw ProofBuildError("res_down: premise is not of shape x <= y -> v");
  Formula x = leq->u, y = leq->v.lhs(), v = leq->v.rhs();
  return mk(ERule::ResDown, leq_equation(Formula::conj(x, y), v), {}, {p});
}

// ---------------------------------------------------------------------------
// Checking

namespace {

struct EqChecker {
  CheckResult failure;
  std::unordered_set<const EqProof::Node*> verified;

  bool fail(const std::string& path, const std::string& reason) {
    failure.ok = false;
    failure.path = path;
    failure.reason = reason;
    return false;
  }

  bool kids_ok(const EqProof& p, const std::string& path) {
    for (std::size_t i = 0; i < p.arity(); i++) {
      std::string sub = path.empty() ? std::to_string(i)
                                     : path + "." + std::to_string(i);
      if (!visit(p.kid(i), sub)) return false;
    }
    return true;
  }

  bool visit(const EqProof& p, const std::string& path) {
    if (!p.valid()) return fail(path, "missing node");
    if (verified.count(&p.node())) return true;
    if (!visit_inner(p, path)) return false;
    verified.insert(&p.node());
    return true;
  }

  bool visit_inner(const EqProof& p, const std::string& path) {
    const auto& n = p.node();
    auto arity_is = [&](std::size_t k) { return n.kids.size() == k; };
    switch (n.rule) {
      case ERule::E1:
      case ERule::E2:
      case ERule::E3:
      case ERule::E4: {
        if (!arity_is(0)) return fail(path, "axiom: must be a leaf");
        const Equation& schema = eq_axiom_schema(n.rule);
        Equation want{apply_substitution(n.sub, schema.lhs),
                      apply_substitution(n.sub, schema.rhs)};
        if (!(n.concl == want))
          return fail(path, "axiom: conclusion is not the stated instance");
        return true;
      }
      case ERule::Ref:
        if (!arity_is(0)) return fail(path, "ref: must be a leaf");
        if (n.concl.lhs != n.concl.rhs)
          return fail(path, "ref: sides differ");
        return true;
      case ERule::Sym: {
        if (!arity_is(1)) return fail(path, "sym: needs one child");
        const Equation& c = n.kids[0].conclusion();
        if (!(n.concl == Equation{c.rhs, c.lhs}))
          return fail(path, "sym: conclusion mismatch");
        return kids_ok(p, path);
      }
      case ERule::Trans: {
        if (!arity_is(2)) return fail(path, "trans: needs two children");
        const Equation& a = n.kids[0].conclusion();
        const Equation& b = n.kids[1].conclusion();
        if (a.rhs != b.lhs) return fail(path, "trans: middle terms differ");
        if (!(n.concl == Equation{a.lhs, b.rhs}))
          return fail(path, "trans: conclusion mismatch");
        return kids_ok(p, path);
      }
      case ERule::CongAnd:
      case ERule::CongImp: {
        if (!arity_is(2)) return fail(path, "cong: needs two children");
        const Equation& a = n.kids[0].conclusion();
        const Equation& b = n.kids[1].conclusion();
        Equation want =
            n.rule == ERule::CongAnd
                ? Equation{Formula::conj(a.lhs, b.lhs),
                           Formula::conj(a.rhs, b.rhs)}
                : Equation{Formula::imp(a.lhs, b.lhs),
                           Formula::imp(a.rhs, b.rhs)};
        if (!(n.concl == want)) return fail(path, "cong: conclusion mismatch");
        return kids_ok(p, path);
      }
      case ERule::ResUp: {
        if (!arity_is(1)) return fail(path, "res_up: needs one child");
        auto leq = as_leq(n.kids[0].conclusion());
        if (!leq || !leq->u.is(Conn::And))
          return fail(path, "res_up: premise is not x & y <= v");
        Equation want =
            leq_equation(leq->u.lhs(), Formula::imp(leq->u.rhs(), leq->v));
        if (!(n.concl == want))
          return fail(path, "res_up: conclusion mismatch");
        return kids_ok(p, path);
      }
      case ERule::ResDown: {
        if (!arity_is(1)) return fail(path, "res_down: needs one child");
        auto leq = as_leq(n.kids[0].conclusion());
        if (!leq || !leq->v.is(Conn::Imp))
          return fail(path, "res_down: premise is not x <= y -> v");
        Equation want = leq_equation(
            Formula::conj(leq->u, leq->v.lhs()), leq->v.rhs());
        if (!(n.concl == want))
          return fail(path, "res_down: conclusion mismatch");
        return kids_ok(p, path);
      }
    }
    return fail(path, "unknown rule");
  }
};

}  // namespace

CheckResult check_eq_proof(const EqProof& p) {
  EqChecker c;
  if (c.visit(p, "")) return CheckResult{true, "", ""};
  return c.failure;
}

// ---------------------------------------------------------------------------
// Lemma library

EqProof leq_top(const Formula& a) {
  // a <= T unfolds to a & T = a, which is E4.
  return e_axiom(ERule::E4, {{"a", a}});
}

EqProof eq_from_leq(const EqProof& ab, const EqProof& ba) {
  auto l1 = as_leq(ab.conclusion());
  auto l2 = as_leq(ba.conclusion());
  if (!l1 || !l2 || l1->u != l2->v || l1->v != l2->u)
    throw ProofBuildError("eq_from_leq: premises are not a <= b and b <= a");
  const Formula& a = l1->u;
  const Formula& b = l1->v;
  // a = a & b = b & a = b.
  EqProof s1 = e_sym(ab);                                // a = a & b
  EqProof s2 = e_axiom(ERule::E2, {{"a", a}, {"b", b}}); // a & b = b & a
  return e_trans(e_trans(s1, s2), ba);
}

std::pair<EqProof, EqProof> leq_from_eq(const EqProof& p) {
  const Formula& a = p.conclusion().lhs;
  const Formula& b = p.conclusion().rhs;
  // a & b = a & a = a.
  EqProof first = e_trans(e_cong_and(e_refl(a), e_sym(p)),
                          e_axiom(ERule::E3, {{"a", a}}));
  // b & a = b & b = b.
  EqProof second =
      e_trans(e_cong_and(e_refl(b), p), e_axiom(ERule::E3, {{"a", b}}));
  return {first, second};
}

namespace {

// T & x = x.
EqProof top_unit(const Formula& x) {
  return e_trans(e_axiom(ERule::E2, {{"a", Formula::top()}, {"b", x}}),
                 e_axiom(ERule::E4, {{"a", x}}));
}

// (a & b) & a = a & b.
EqProof absorb_left(const Formula& a, const Formula& b) {
  Formula ab = Formula::conj(a, b);
  EqProof s1 = e_axiom(ERule::E2, {{"a", ab}, {"b", a}});  // (a&b)&a = a&(a&b)
  EqProof s2 = e_axiom(ERule::E1, {{"a", a}, {"b", a}, {"c", b}});
  EqProof s3 = e_cong_and(e_axiom(ERule::E3, {{"a", a}}), e_refl(b));
  return e_trans(e_trans(s1, s2), s3);
}

// (a & b) & b = a & b.
EqProof absorb_right(const Formula& a, const Formula& b) {
  EqProof s1 = e_sym(e_axiom(ERule::E1, {{"a", a}, {"b", b}, {"c", b}}));
  EqProof s2 = e_cong_and(e_refl(a), e_axiom(ERule::E3, {{"a", b}}));
  return e_trans(s1, s2);
}

// (p & q) & r = (p & r) & q.
EqProof swap_inner(const Formula& p, const Formula& q, const Formula& r) {
  EqProof s1 = e_sym(e_axiom(ERule::E1, {{"a", p}, {"b", q}, {"c", r}}));
  EqProof s2 = e_cong_and(e_refl(p), e_axiom(ERule::E2, {{"a", q}, {"b", r}}));
  EqProof s3 = e_axiom(ERule::E1, {{"a", p}, {"b", r}, {"c", q}});
  return e_trans(e_trans(s1, s2), s3);
}

}  // namespace

EqProof res3_first(const Formula& a, const Formula& b) {
  Formula ab = Formula::conj(a, b);
  EqProof q1 = e_axiom(ERule::E3, {{"a", ab}});  // (a&b)&(a&b) = a&b
  EqProof q2 = e_axiom(ERule::E1, {{"a", ab}, {"b", a}, {"c", b}});
  EqProof q3 = e_trans(e_sym(q2), q1);  // ((a&b)&a)&b = a&b
  EqProof q4 = absorb_left(a, b);       // (a&b)&a = a&b
  EqProof q5 = e_trans(q3, e_sym(q4));  // ((a&b)&a)&b = (a&b)&a
  EqProof q6 = e_res_up(q5);            // (a&b) & (a->b) = a&b
  return e_sym(q6);
}

EqProof res3_second(const Formula& a, const Formula& b) {
  Formula atob = Formula::imp(a, b);
  EqProof r1 = e_axiom(ERule::E3, {{"a", atob}});  // (a->b)&(a->b) = a->b
  EqProof r2 = e_res_down(r1);                     // ((a->b)&a)&b = (a->b)&a
  // a & (a->b) = (a->b) & a = ((a->b)&a)&b = (a&(a->b))&b = (a&b)&(a->b)
  EqProof c1 = e_axiom(ERule::E2, {{"a", a}, {"b", atob}});
  EqProof c2 = e_sym(r2);
  EqProof c3 = e_cong_and(e_axiom(ERule::E2, {{"a", atob}, {"b", a}}),
                          e_refl(b));
  EqProof c4 = swap_inner(a, atob, b);
  EqProof goal = e_trans(e_trans(e_trans(c1, c2), c3), c4);
  return e_trans(res3_first(a, b), e_sym(goal));
}

// ---------------------------------------------------------------------------
// E to H

namespace {

using EToHCache =
    std::unordered_map<const EqProof::Node*, std::pair<Proof, Proof>>;

std::pair<Proof, Proof> eq_to_hilbert_rec(const EqProof& p, EToHCache& cache);

std::pair<Proof, Proof> eq_to_hilbert_memo(const EqProof& p,
                                           EToHCache& cache) {
  auto it = cache.find(&p.node());
  if (it != cache.end()) return it->second;
  auto result = eq_to_hilbert_rec(p, cache);
  cache.emplace(&p.node(), result);
  return result;
}

std::pair<Proof, Proof> eq_to_hilbert_rec(const EqProof& p, EToHCache& cache) {
  const Equation& e = p.conclusion();
  const Formula& L = e.lhs;
  const Formula& R = e.rhs;
  auto proj1 = [](const Formula& conj) {
    return ax({}, "H3", {{"p", conj.lhs()}, {"q", conj.rhs()}});
  };
  auto proj2 = [](const Formula& conj) {
    return ax({}, "H4", {{"p", conj.lhs()}, {"q", conj.rhs()}});
  };
  switch (p.rule()) {
    case ERule::E1: {
      // a & (b & c) = (a & b) & c: project out the parts, then repack.
      Proof la = proj1(L);                       // L -> a
      Proof lbc = proj2(L);                      // L -> b & c
      Proof lb = compose_imp(lbc, proj1(L.rhs()));
      Proof lc = compose_imp(lbc, proj2(L.rhs()));
      Proof fwd = imp_pair(imp_pair(la, lb), lc);
      Proof rab = proj1(R);
      Proof rc = proj2(R);
      Proof ra = compose_imp(rab, proj1(R.lhs()));
      Proof rb = compose_imp(rab, proj2(R.lhs()));
      Proof bwd = imp_pair(ra, imp_pair(rb, rc));
      return {fwd, bwd};
    }
    case ERule::E2: {
      Proof fwd = imp_pair(proj2(L), proj1(L));
      Proof bwd = imp_pair(proj2(R), proj1(R));
      return {fwd, bwd};
    }
    case ERule::E3: {
      Proof id = prove_identity(R);
      return {proj1(L), imp_pair(id, id)};
    }
    case ERule::E4: {
      Proof to_top = prove_weakened_consequent(ax({}, "H6", {}), R);
      return {proj1(L), imp_pair(prove_identity(R), to_top)};
    }
    case ERule::Ref:
      return {prove_identity(L), prove_identity(L)};
    case ERule::Sym: {
      auto kid = eq_to_hilbert_memo(p.kid(0), cache);
      return {kid.second, kid.first};
    }
    case ERule::Trans: {
      auto k1 = eq_to_hilbert_memo(p.kid(0), cache);
      auto k2 = eq_to_hilbert_memo(p.kid(1), cache);
      return {compose_imp(k1.first, k2.first),
              compose_imp(k2.second, k1.second)};
    }
    case ERule::CongAnd: {
      auto k1 = eq_to_hilbert_memo(p.kid(0), cache);  // a1 = a2
      auto k2 = eq_to_hilbert_memo(p.kid(1), cache);  // b1 = b2
      auto one_dir = [&](const Formula& from, const Proof& pa,
                         const Proof& pb) {
        return imp_pair(compose_imp(proj1(from), pa),
                        compose_imp(proj2(from), pb));
      };
      return {one_dir(L, k1.first, k2.first),
              one_dir(R, k1.second, k2.second)};
    }
    case ERule::CongImp: {
      auto k1 = eq_to_hilbert_memo(p.kid(0), cache);  // a1 = a2
      auto k2 = eq_to_hilbert_memo(p.kid(1), cache);  // b1 = b2
      auto one_dir = [](const Formula& from, const Proof& a_back,
                        const Proof& b_fwd) {
        // from = a1 -> b1; |- a2 -> a1 and |- b1 -> b2 give
        // |- (a1 -> b1) -> (a2 -> b2).
        const Formula& a2 = a_back.conclusion().lhs();
        const Formula& a1 = from.lhs();
        const Formula& b1 = from.rhs();
        // from -> (a2 -> from), shuffled into (a2 -> a1) -> (a2 -> b1).
        Proof lift = ax({}, "H1", {{"p", from}, {"q", a2}});
        Proof shuffle = ax({}, "H2", {{"p", a2}, {"q", a1}, {"r", b1}});
        Proof c1 = compose_imp(lift, shuffle);
        Proof c2 =
            imp_apply(c1, prove_weakened_consequent(a_back, from));
        Proof post = imp_postcompose(a2, b_fwd);
        return compose_imp(c2, post);
      };
      return {one_dir(L, k1.second, k2.first),
              one_dir(R, k1.first, k2.second)};
    }
    case ERule::ResUp: {
      // child: x & y <= v; conclusion: x <= y -> v.
      auto kid = eq_to_hilbert_memo(p.kid(0), cache);
      auto leq = as_leq(p.kid(0).conclusion());
      Formula x = leq->u.lhs(), y = leq->u.rhs(), v = leq->v;
      Proof fwd = ax({}, "H3", {{"p", x}, {"q", Formula::imp(y, v)}});
      // kid.second : |- x&y -> (x&y)&v, cut down to x&y -> v, then curried.
      Proof to_v = compose_imp(
          kid.second, ax({}, "H4", {{"p", leq->u}, {"q", v}}));
      Proof pairing = ax({}, "H5", {{"p", x}, {"q", y}});  // x -> y -> x&y
      Proof curried = compose_imp(pairing, imp_postcompose(y, to_v));
      Proof bwd = imp_pair(prove_identity(x), curried);
      return {fwd, bwd};
    }
    case ERule::ResDown: {
      // child: x <= y -> v; conclusion: x & y <= v.
      auto kid = eq_to_hilbert_memo(p.kid(0), cache);
      auto leq = as_leq(p.kid(0).conclusion());
      Formula x = leq->u, y = leq->v.lhs(), v = leq->v.rhs();
      Formula xy = Formula::conj(x, y);
      Proof fwd = ax({}, "H3", {{"p", xy}, {"q", v}});
      // kid.second : |- x -> x & (y->v), cut down and uncurried.
      Proof to_imp = compose_imp(
          kid.second, ax({}, "H4", {{"p", x}, {"q", Formula::imp(y, v)}}));
      Proof xy_imp = compose_imp(ax({}, "H3", {{"p", x}, {"q", y}}), to_imp);
      Proof xy_y = ax({}, "H4", {{"p", x}, {"q", y}});
      Proof to_v = imp_apply(xy_imp, xy_y);
      Proof bwd = imp_pair(prove_identity(xy), to_v);
      return {fwd, bwd};
    }
  }
  throw InvalidProofInput("eq_to_hilbert: unknown rule");
}

}  // namespace

std::pair<Proof, Proof> eq_to_hilbert(const EqProof& p) {
  CheckResult r = check_eq_proof(p);
  if (!r.ok)
    throw InvalidProofInput("eq_to_hilbert: input does not check (" +
                            r.reason + " at node " + r.path + ")");
  EToHCache cache;
  return eq_to_hilbert_memo(p, cache);
}

// ---------------------------------------------------------------------------
// H to E

namespace {

// T <= f together with leq_top(f) gives f = T.
EqProof close_top(const Formula& f, const EqProof& top_leq_f) {
  return eq_from_leq(leq_top(f), top_leq_f);
}

EqProof h_axiom_to_eq(const std::string& id, const Formula& concl,
                      const Substitution& sub) {
  Formula top = Formula::top();
  auto get = [&](const char* v) {
    return apply_substitution(sub, Formula::letter(v));
  };
  if (id == "H6") return e_refl(top);
  if (id == "H1") {
    Formula a = get("p"), b = get("q");
    // chain: (T&a)&b = ((T&a)&b)&a, then residuate twice.
    Formula ta = Formula::conj(top, a);
    EqProof c1 = e_cong_and(top_unit(a), e_refl(b));   // (T&a)&b = a&b
    EqProof c2 = e_axiom(ERule::E2, {{"a", a}, {"b", b}});
    EqProof c3 = e_cong_and(e_refl(b), e_sym(e_axiom(ERule::E3, {{"a", a}})));
    EqProof c4 = e_axiom(ERule::E1, {{"a", b}, {"b", a}, {"c", a}});
    EqProof c5 = e_cong_and(e_axiom(ERule::E2, {{"a", b}, {"b", a}}),
                            e_refl(a));                // (b&a)&a = (a&b)&a
    EqProof c6 = e_cong_and(e_sym(c1), e_refl(a));     // (a&b)&a = ((T&a)&b)&a
    EqProof chain =
        e_trans(e_trans(e_trans(e_trans(e_trans(c1, c2), c3), c4), c5), c6);
    EqProof step1 = e_res_up(e_sym(chain));  // T&a <= b -> a
    EqProof step2 = e_res_up(step1);         // T <= a -> (b -> a)
    return close_top(concl, step2);
  }
  if (id == "H2") {
    Formula a = get("p"), b = get("q"), c = get("r");
    Formula X = Formula::imp(a, Formula::imp(b, c));
    Formula Y = Formula::imp(a, b);
    Formula XY = Formula::conj(X, Y);
    Formula bc = Formula::conj(b, c);
    // CH: (X&Y)&a = a&(b&c)
    EqProof s1 = e_trans(e_axiom(ERule::E2, {{"a", XY}, {"b", a}}),
                         e_axiom(ERule::E1, {{"a", a}, {"b", X}, {"c", Y}}));
    EqProof s2 =
        e_cong_and(e_sym(res3_second(a, Formula::imp(b, c))), e_refl(Y));
    EqProof s3 = swap_inner(a, Formula::imp(b, c), Y);
    EqProof s4 = e_cong_and(e_sym(res3_second(a, b)),
                            e_refl(Formula::imp(b, c)));
    EqProof s5 = e_sym(
        e_axiom(ERule::E1, {{"a", a}, {"b", b}, {"c", Formula::imp(b, c)}}));
    EqProof s6 = e_cong_and(e_refl(a), e_sym(res3_second(b, c)));
    EqProof ch =
        e_trans(e_trans(e_trans(e_trans(e_trans(s1, s2), s3), s4), s5), s6);
    // d1: (a&(b&c))&c = a&(b&c)
    EqProof d1 = e_trans(
        e_sym(e_axiom(ERule::E1, {{"a", a}, {"b", bc}, {"c", c}})),
        e_cong_and(e_refl(a), absorb_right(b, c)));
    // d2: ((X&Y)&a)&c = (X&Y)&a
    EqProof d2 = e_trans(e_trans(e_cong_and(ch, e_refl(c)), d1), e_sym(ch));
    EqProof r1 = e_res_up(d2);  // X&Y <= a -> c
    EqProof r2 = e_res_up(r1);  // X <= Y -> (a -> c)
    Formula Z = Formula::imp(Y, Formula::imp(a, c));
    // w2: (T&X)&Z = T&X
    auto leqZ = as_leq(r2.conclusion());
    (void)leqZ;
    EqProof w2 = e_trans(
        e_trans(e_cong_and(top_unit(X), e_refl(Z)), r2),
        e_sym(top_unit(X)));
    EqProof r3 = e_res_up(w2);  // T <= X -> Z
    return close_top(concl, r3);
  }
  if (id == "H3" || id == "H4") {
    Formula a = get("p"), b = get("q");
    Formula ab = Formula::conj(a, b);
    Formula target = id == "H3" ? a : b;
    EqProof absorb = id == "H3" ? absorb_left(a, b) : absorb_right(a, b);
    // (T&(a&b))&target = T&(a&b)
    EqProof m3 = e_trans(
        e_trans(e_cong_and(top_unit(ab), e_refl(target)), absorb),
        e_sym(top_unit(ab)));
    EqProof step = e_res_up(m3);  // T <= (a&b) -> target
    return close_top(concl, step);
  }
  if (id == "H5") {
    Formula a = get("p"), b = get("q");
    Formula ab = Formula::conj(a, b);
    // k1: (T&a)&b = a&b
    EqProof k1 = e_cong_and(top_unit(a), e_refl(b));
    // k2: ((T&a)&b)&(a&b) = (T&a)&b
    EqProof k2 = e_trans(
        e_trans(e_cong_and(k1, e_refl(ab)), e_axiom(ERule::E3, {{"a", ab}})),
        e_sym(k1));
    EqProof step1 = e_res_up(k2);  // T&a <= b -> a&b
    EqProof step2 = e_res_up(step1);
    return close_top(concl, step2);
  }
  throw InvalidProofInput("hilbert_to_eq: modal axiom " + id +
                          " has no equational counterpart");
}

using HToECache = std::unordered_map<const Proof::Node*, EqProof>;

EqProof hilbert_to_eq_rec(const Proof& p, HToECache& cache);

EqProof hilbert_to_eq_memo(const Proof& p, HToECache& cache) {
  auto it = cache.find(&p.node());
  if (it != cache.end()) return it->second;
  EqProof result = hilbert_to_eq_rec(p, cache);
  cache.emplace(&p.node(), result);
  return result;
}

EqProof hilbert_to_eq_rec(const Proof& p, HToECache& cache) {
  const auto& n = p.node();
  switch (n.rule) {
    case HRule::Ass:
      throw InvalidProofInput("hilbert_to_eq: non-empty context");
    case HRule::Ax:
      return h_axiom_to_eq(n.axiom_id, n.conclusion, n.sub);
    case HRule::Mp: {
      EqProof ih_e = hilbert_to_eq_memo(n.kids[0], cache);    // e = T
      EqProof ih_imp = hilbert_to_eq_memo(n.kids[1], cache);  // (e -> f) = T
      const Formula& f = n.conclusion;
      Formula top = Formula::top();
      EqProof c1 = e_cong_imp(ih_e, e_refl(f));       // (e->f) = (T->f)
      EqProof c2 = e_trans(e_sym(ih_imp), c1);        // T = T->f
      EqProof c3 = leq_from_eq(c2).first;             // T & (T->f) = T
      EqProof c4 = e_res_down(c3);                    // (T&T)&f = T&T
      EqProof c5 = e_trans(
          e_trans(e_cong_and(e_sym(e_axiom(ERule::E3, {{"a", top}})),
                             e_refl(f)),
                  c4),
          e_axiom(ERule::E3, {{"a", top}}));          // T&f = T
      return close_top(f, c5);
    }
    case HRule::Cong:
      throw InvalidProofInput("hilbert_to_eq: cong nodes are not supported");
  }
  throw InvalidProofInput("hilbert_to_eq: unknown rule");
}

}  // namespace

EqProof hilbert_to_eq(const Proof& p) {
  CheckResult r = check_proof(System::MI, p);
  if (!r.ok)
    throw InvalidProofInput("hilbert_to_eq: input does not check under mi (" +
                            r.reason + " at node " + r.path + ")");
  if (!p.ctx().empty())
    throw InvalidProofInput(
        "hilbert_to_eq: non-empty context (apply deduction first)");
  HToECache cache;
  return hilbert_to_eq_memo(p, cache);
}

// ---------------------------------------------------------------------------
// Algebraic evaluation

int eval_term(const FiniteSemilattice& A, const ImpWitness& imp,
              const std::vector<int>* box_table,
              const std::vector<int>* mon_table, const Formula& t,
              const std::map<std::string, int>& env) {
  switch (t.conn()) {
    case Conn::Top:
      return A.top;
    case Conn::Letter: {
      auto it = env.find(t.letter_name());
      if (it == env.end())
        throw EvalError("unbound letter: " + t.letter_name());
      return it->second;
    }
    case Conn::And:
      return A.meet(eval_term(A, imp, box_table, mon_table, t.lhs(), env),
                    eval_term(A, imp, box_table, mon_table, t.rhs(), env));
    case Conn::Imp:
      return imp.of(eval_term(A, imp, box_table, mon_table, t.lhs(), env),
                    eval_term(A, imp, box_table, mon_table, t.rhs(), env));
    case Conn::Box:
      if (!box_table) throw EvalError("no box operator on this algebra");
      return (*box_table)[eval_term(A, imp, box_table, mon_table, t.body(),
                                    env)];
    case Conn::Mon:
      if (!mon_table) throw EvalError("no mon operator on this algebra");
      return (*mon_table)[eval_term(A, imp, box_table, mon_table, t.body(),
                                    env)];
  }
  throw EvalError("bad term");
}

bool eval_equation_in_algebra(const FiniteSemilattice& A, const ImpWitness& imp,
                              const Equation& e,
                              const std::map<std::string, int>& env,
                              const std::vector<int>* box_table,
                              const std::vector<int>* mon_table) {
  return eval_term(A, imp, box_table, mon_table, e.lhs, env) ==
         eval_term(A, imp, box_table, mon_table, e.rhs, env);
}

}  // namespace mil
