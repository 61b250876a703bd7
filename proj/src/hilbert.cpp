#include "mil/hilbert.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace mil {

std::string system_name(System s) {
  switch (s) {
    case System::MI:
      return "mi";
    case System::MIBox:
      return "mibox";
    case System::MIMon:
      return "mimon";
  }
  return "?";
}

std::optional<System> system_from_name(const std::string& name) {
  if (name == "mi") return System::MI;
  if (name == "mibox") return System::MIBox;
  if (name == "mimon") return System::MIMon;
  return std::nullopt;
}

namespace {

std::vector<AxiomSchema> base_schemas() {
  return {
      {"H1", parse("p -> q -> p")},
      {"H2", parse("(p -> q -> r) -> (p -> q) -> p -> r")},
      {"H3", parse("p & q -> p")},
      {"H4", parse("p & q -> q")},
      {"H5", parse("p -> q -> p & q")},
      {"H6", parse("T")},
  };
}

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas(System sys) {
  static const std::vector<AxiomSchema> mi = base_schemas();
  static const std::vector<AxiomSchema> mibox = [] {
    auto v = base_schemas();
    v.push_back({"B1", Formula::iff(parse("[](p & q)"), parse("[]p & []q"))});
    v.push_back({"B2", Formula::iff(parse("[]T"), parse("T"))});
    return v;
  }();
  static const std::vector<AxiomSchema> mimon = [] {
    auto v = base_schemas();
    v.push_back({"M1", parse("<m>(p & q) -> <m>p")});
    return v;
  }();
  switch (sys) {
    case System::MI:
      return mi;
    case System::MIBox:
      return mibox;
    case System::MIMon:
      return mimon;
  }
  return mi;
}

const Formula* find_schema(System sys, const std::string& id) {
  for (const auto& s : axiom_schemas(sys))
    if (s.id == id) return &s.schema;
  return nullptr;
}

namespace {

double logical_count(const Proof& p,
                     std::unordered_map<const Proof::Node*, double>& memo) {
  auto it = memo.find(&p.node());
  if (it != memo.end()) return it->second;
  double n = 1;
  for (std::size_t i = 0; i < p.arity(); i++)
    n += logical_count(p.kid(i), memo);
  memo.emplace(&p.node(), n);
  return n;
}

}  // namespace

std::size_t Proof::node_count() const {
  std::unordered_map<const Node*, double> memo;
  double n = logical_count(*this, memo);
  double cap = 1e18;
  return static_cast<std::size_t>(n < cap ? n : cap);
}

std::vector<Formula> ctx_normalize(std::vector<Formula> ctx) {
  std::sort(ctx.begin(), ctx.end());
  ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
  return ctx;
}

std::vector<Formula> ctx_add(std::vector<Formula> ctx, const Formula& f) {
  ctx.push_back(f);
  return ctx_normalize(std::move(ctx));
}

std::vector<Formula> ctx_remove(std::vector<Formula> ctx, const Formula& f) {
  ctx.erase(std::remove(ctx.begin(), ctx.end(), f), ctx.end());
  return ctx;
}

bool ctx_contains(const std::vector<Formula>& ctx, const Formula& f) {
  return std::binary_search(ctx.begin(), ctx.end(), f);
}

Proof ass(std::vector<Formula> ctx, const Formula& f) {
  auto n = std::make_shared<Proof::Node>();
  n->rule = HRule::Ass;
  n->ctx = ctx_normalize(std::move(ctx));
  if (!ctx_contains(n->ctx, f))
    throw ProofBuildError("ass: formula not in context: " + print(f));
  n->conclusion = f;
  return Proof(std::move(n));
}

static const Formula* any_schema(const std::string& id) {
  if (const Formula* s = find_schema(System::MIBox, id)) return s;
  return find_schema(System::MIMon, id);
}

Proof ax(std::vector<Formula> ctx, const std::string& axiom_id,
         const Substitution& sub) {
  const Formula* schema = any_schema(axiom_id);
  if (!schema) throw ProofBuildError("ax: unknown axiom " + axiom_id);
  return ax_raw(std::move(ctx), axiom_id, sub,
                apply_substitution(sub, *schema));
}

Proof ax_raw(std::vector<Formula> ctx, const std::string& axiom_id,
             const Substitution& sub, const Formula& conclusion) {
  auto n = std::make_shared<Proof::Node>();
  n->rule = HRule::Ax;
  n->ctx = ctx_normalize(std::move(ctx));
  n->axiom_id = axiom_id;
  n->sub = sub;
  n->conclusion = conclusion;
  return Proof(std::move(n));
}

Proof mp(const Proof& minor, const Proof& major) {
  if (!major.conclusion().is(Conn::Imp))
    throw ProofBuildError("mp: major premise is not an implication");
  if (major.conclusion().lhs() != minor.conclusion())
    throw ProofBuildError("mp: minor premise does not match antecedent");
  if (minor.ctx() != major.ctx())
    throw ProofBuildError("mp: contexts differ");
  auto n = std::make_shared<Proof::Node>();
  n->rule = HRule::Mp;
  n->ctx = minor.ctx();
  n->conclusion = major.conclusion().rhs();
  n->kids = {minor, major};
  return Proof(std::move(n));
}

namespace {

// Recognises (f -> g) & (g -> f), returning (f, g).
std::optional<std::pair<Formula, Formula>> split_iff(const Formula& c) {
  if (!c.is(Conn::And)) return std::nullopt;
  const Formula& l = c.lhs();
  const Formula& r = c.rhs();
  if (!l.is(Conn::Imp) || !r.is(Conn::Imp)) return std::nullopt;
  if (l.lhs() != r.rhs() || l.rhs() != r.lhs()) return std::nullopt;
  return std::make_pair(l.lhs(), l.rhs());
}

Formula apply_modality(Modality m, const Formula& f) {
  return m == Modality::Box ? Formula::box(f) : Formula::mon(f);
}

}  // namespace

Proof cong(const Proof& child, Modality m) {
  auto pair = split_iff(child.conclusion());
  if (!pair) throw ProofBuildError("cong: child is not a biconditional");
  if (!child.ctx().empty())
    throw ProofBuildError("cong: requires an empty context");
  auto n = std::make_shared<Proof::Node>();
  n->rule = HRule::Cong;
  n->modality = m;
  n->conclusion = Formula::iff(apply_modality(m, pair->first),
                               apply_modality(m, pair->second));
  n->kids = {child};
  return Proof(std::move(n));
}

// ---------------------------------------------------------------------------
// Checking

namespace {

bool in_language(System sys, const Formula& f) {
  switch (f.conn()) {
    case Conn::Top:
    case Conn::Letter:
      return true;
    case Conn::And:
    case Conn::Imp:
      return in_language(sys, f.lhs()) && in_language(sys, f.rhs());
    case Conn::Box:
      return sys == System::MIBox && in_language(sys, f.body());
    case Conn::Mon:
      return sys == System::MIMon && in_language(sys, f.body());
  }
  return false;
}

struct Checker {
  System sys;
  CheckResult failure;
  // Shared subtrees are checked once; node contents are self-contained and
  // the parent-child side conditions are verified at the parent.
  std::unordered_set<const Proof::Node*> verified;

  bool fail(const std::string& path, const std::string& reason) {
    failure.ok = false;
    failure.path = path;
    failure.reason = reason;
    return false;
  }

  bool visit(const Proof& p, const std::string& path) {
    if (!p.valid()) return fail(path, "missing node");
    if (verified.count(&p.node())) return true;
    if (!visit_inner(p, path)) return false;
    verified.insert(&p.node());
    return true;
  }

  bool visit_inner(const Proof& p, const std::string& path) {
    const auto& n = p.node();
    for (const auto& g : n.ctx)
      if (!in_language(sys, g))
        return fail(path, "context formula outside the system language: " +
                              print(g));
    if (!in_language(sys, n.conclusion))
      return fail(path, "conclusion outside the system language: " +
                            print(n.conclusion));
    switch (n.rule) {
      case HRule::Ass:
        if (!n.kids.empty()) return fail(path, "ass: must be a leaf");
        if (!ctx_contains(n.ctx, n.conclusion))
          return fail(path, "ass: conclusion not in context");
        return true;
      case HRule::Ax: {
        if (!n.kids.empty()) return fail(path, "ax: must be a leaf");
        const Formula* schema = find_schema(sys, n.axiom_id);
        if (!schema)
          return fail(path, "ax: axiom " + n.axiom_id + " not available in " +
                                system_name(sys));
        if (apply_substitution(n.sub, *schema) != n.conclusion)
          return fail(path,
                      "ax: conclusion is not the stated instance of " +
                          n.axiom_id);
        return true;
      }
      case HRule::Mp: {
        if (n.kids.size() != 2) return fail(path, "mp: needs two children");
        const Proof& minor = n.kids[0];
        const Proof& major = n.kids[1];
        if (minor.ctx() != n.ctx || major.ctx() != n.ctx)
          return fail(path, "mp: children must share the node's context");
        if (!major.conclusion().is(Conn::Imp))
          return fail(path, "mp: major premise is not an implication");
        if (major.conclusion().lhs() != minor.conclusion())
          return fail(path, "mp: minor premise does not match antecedent");
        if (major.conclusion().rhs() != n.conclusion)
          return fail(path, "mp: conclusion does not match consequent");
        return visit(minor, path.empty() ? "0" : path + ".0") &&
               visit(major, path.empty() ? "1" : path + ".1");
      }
      case HRule::Cong: {
        if (sys == System::MI)
          return fail(path, "cong: not available in mi");
        if (n.modality == Modality::Box && sys != System::MIBox)
          return fail(path, "cong: box congruence outside mibox");
        if (n.modality == Modality::Mon && sys != System::MIMon)
          return fail(path, "cong: mon congruence outside mimon");
        if (n.kids.size() != 1) return fail(path, "cong: needs one child");
        if (!n.ctx.empty() || !n.kids[0].ctx().empty())
          return fail(path, "cong: requires an empty context");
        auto pair = split_iff(n.kids[0].conclusion());
        if (!pair) return fail(path, "cong: child is not a biconditional");
        Formula want = Formula::iff(apply_modality(n.modality, pair->first),
                                    apply_modality(n.modality, pair->second));
        if (n.conclusion != want)
          return fail(path, "cong: conclusion mismatch");
        return visit(n.kids[0], path.empty() ? "0" : path + ".0");
      }
    }
    return fail(path, "unknown rule");
  }
};

}  // namespace

CheckResult check_proof(System sys, const Proof& p) {
  Checker c{sys, {}};
  if (c.visit(p, "")) return CheckResult{true, "", ""};
  return c.failure;
}

// ---------------------------------------------------------------------------
// Transformations

Proof prove_identity(const Formula& a, std::vector<Formula> ctx) {
  ctx = ctx_normalize(std::move(ctx));
  Formula aa = Formula::imp(a, a);
  // H2 with p := a, q := a -> a, r := a.
  Proof l1 = ax(ctx, "H2", {{"p", a}, {"q", aa}, {"r", a}});
  // H1 with p := a, q := a -> a.
  Proof l2 = ax(ctx, "H1", {{"p", a}, {"q", aa}});
  // H1 with p := a, q := a.
  Proof l3 = ax(ctx, "H1", {{"p", a}, {"q", a}});
  Proof l4 = mp(l2, l1);
  return mp(l3, l4);
}

Proof prove_weakened_consequent(const Proof& p, const Formula& c) {
  Proof h1 = ax(p.ctx(), "H1", {{"p", p.conclusion()}, {"q", c}});
  return mp(p, h1);
}

namespace {

bool has_cong_rec(const Proof& p,
                  std::unordered_set<const Proof::Node*>& seen) {
  if (!seen.insert(&p.node()).second) return false;
  if (p.rule() == HRule::Cong) return true;
  for (std::size_t i = 0; i < p.arity(); i++)
    if (has_cong_rec(p.kid(i), seen)) return true;
  return false;
}

bool has_cong(const Proof& p) {
  std::unordered_set<const Proof::Node*> seen;
  return has_cong_rec(p, seen);
}

void require_checked(const Proof& p, const char* who) {
  if (!p.valid()) throw InvalidProofInput(std::string(who) + ": empty proof");
  if (has_cong(p))
    throw InvalidProofInput(std::string(who) +
                            ": proofs with cong nodes are not supported");
  // Validity is checked against the weakest system covering the formulas
  // involved; axiom availability is what matters here.
  for (System s : {System::MI, System::MIBox, System::MIMon}) {
    if (check_proof(s, p).ok) return;
  }
  CheckResult r = check_proof(System::MI, p);
  throw InvalidProofInput(std::string(who) + ": input does not check (" +
                          r.reason + " at node " + r.path + ")");
}

// Shared subproofs transform to shared results; the caches are per
// top-level call, keyed by physical node, which is sound because the
// discharged/added formula is fixed along one transformation.
using TransformCache = std::unordered_map<const Proof::Node*, Proof>;

Proof weaken_rec(const Proof& p, const Formula& extra, TransformCache& cache) {
  auto hit = cache.find(&p.node());
  if (hit != cache.end()) return hit->second;
  const auto& n = p.node();
  std::vector<Formula> ctx = ctx_add(n.ctx, extra);
  Proof result;
  switch (n.rule) {
    case HRule::Ass:
      result = ass(ctx, n.conclusion);
      break;
    case HRule::Ax:
      result = ax_raw(ctx, n.axiom_id, n.sub, n.conclusion);
      break;
    case HRule::Mp:
      result = mp(weaken_rec(n.kids[0], extra, cache),
                  weaken_rec(n.kids[1], extra, cache));
      break;
    case HRule::Cong:
      throw InvalidProofInput("weaken: cong node");
  }
  cache.emplace(&p.node(), result);
  return result;
}

Proof weaken_rec(const Proof& p, const Formula& extra) {
  TransformCache cache;
  return weaken_rec(p, extra, cache);
}

Proof deduction_rec(const Proof& p, const Formula& a, TransformCache& cache) {
  auto hit = cache.find(&p.node());
  if (hit != cache.end()) return hit->second;
  const auto& n = p.node();
  std::vector<Formula> gamma = ctx_remove(n.ctx, a);
  Proof result;
  switch (n.rule) {
    case HRule::Ass:
      result = n.conclusion == a
                   ? prove_identity(a, gamma)
                   : prove_weakened_consequent(ass(gamma, n.conclusion), a);
      break;
    case HRule::Ax:
      result = prove_weakened_consequent(
          ax_raw(gamma, n.axiom_id, n.sub, n.conclusion), a);
      break;
    case HRule::Mp: {
      const Formula& c = n.kids[0].conclusion();
      const Formula& b = n.conclusion;
      Proof d_minor = deduction_rec(n.kids[0], a, cache);  // G |- a -> c
      Proof d_major = deduction_rec(n.kids[1], a, cache);  // G |- a -> (c->b)
      Proof h2 = ax(gamma, "H2", {{"p", a}, {"q", c}, {"r", b}});
      Proof step = mp(d_major, h2);  // (a -> c) -> (a -> b)
      result = mp(d_minor, step);
      break;
    }
    case HRule::Cong:
      throw InvalidProofInput("deduction: cong node");
  }
  cache.emplace(&p.node(), result);
  return result;
}

Proof deduction_rec(const Proof& p, const Formula& a) {
  TransformCache cache;
  return deduction_rec(p, a, cache);
}

}  // namespace

namespace unchecked {

Proof weaken(const Proof& p, const Formula& extra) {
  return weaken_rec(p, extra);
}

Proof deduction(const Proof& p, const Formula& discharge) {
  if (!ctx_contains(p.ctx(), discharge))
    throw InvalidProofInput("deduction: discharge formula not in context");
  return deduction_rec(p, discharge);
}

Proof undeduction(const Proof& p) {
  if (!p.conclusion().is(Conn::Imp))
    throw InvalidProofInput("undeduction: conclusion is not an implication");
  Formula a = p.conclusion().lhs();
  Proof widened = weaken_rec(p, a);
  Proof minor = ass(widened.ctx(), a);
  return mp(minor, widened);
}

Proof conj_intro(const Proof& pa, const Proof& pb) {
  if (pa.ctx() != pb.ctx())
    throw InvalidProofInput("conj_intro: contexts differ");
  Proof h5 =
      ax(pa.ctx(), "H5", {{"p", pa.conclusion()}, {"q", pb.conclusion()}});
  return mp(pb, mp(pa, h5));
}

std::pair<Proof, Proof> conj_split(const Proof& p) {
  if (!p.conclusion().is(Conn::And))
    throw InvalidProofInput("conj_split: conclusion is not a conjunction");
  const Formula& a = p.conclusion().lhs();
  const Formula& b = p.conclusion().rhs();
  Proof h3 = ax(p.ctx(), "H3", {{"p", a}, {"q", b}});
  Proof h4 = ax(p.ctx(), "H4", {{"p", a}, {"q", b}});
  return {mp(p, h3), mp(p, h4)};
}

Proof conj_context(const Proof& p, const Formula& a, const Formula& b) {
  if (!ctx_contains(p.ctx(), a) || !ctx_contains(p.ctx(), b))
    throw InvalidProofInput("conj_context: a or b not in context");
  Formula ab = Formula::conj(a, b);
  if (a == b) {
    // Gamma, a |- c  ~>  Gamma |- a -> c  ~>  Gamma, a&a |- c.
    Proof d = unchecked::deduction(p, a);
    std::vector<Formula> ctx = ctx_add(d.ctx(), ab);
    Proof pa = unchecked::conj_split(ass(ctx, ab)).first;
    return mp(pa, weaken_rec(d, ab));
  }
  // Gamma, a, b |- c  ~>  Gamma |- a -> (b -> c)  ~>  Gamma, a&b |- c.
  Proof d = unchecked::deduction(unchecked::deduction(p, b), a);
  std::vector<Formula> ctx = ctx_add(d.ctx(), ab);
  Proof d_w = weaken_rec(d, ab);
  Proof ass_ab = ass(ctx, ab);
  auto [pa, pb] = unchecked::conj_split(ass_ab);
  return mp(pb, mp(pa, d_w));
}

Proof conj_context_inv(const Proof& p, const Formula& a, const Formula& b) {
  Formula ab = Formula::conj(a, b);
  if (!ctx_contains(p.ctx(), ab))
    throw InvalidProofInput("conj_context_inv: a & b not in context");
  // Gamma, a&b |- c  ~>  Gamma |- a&b -> c  ~>  Gamma, a, b |- c.
  Proof d = unchecked::deduction(p, ab);
  std::vector<Formula> ctx = ctx_add(ctx_add(d.ctx(), a), b);
  Proof d_w = weaken_rec(weaken_rec(d, a), b);
  Proof both = unchecked::conj_intro(ass(ctx, a), ass(ctx, b));
  return mp(both, d_w);
}

}  // namespace unchecked

Proof imp_apply(const Proof& xyz, const Proof& xy) {
  const Formula& c = xyz.conclusion();
  if (!c.is(Conn::Imp) || !c.rhs().is(Conn::Imp))
    throw InvalidProofInput("imp_apply: major premise is not x -> (y -> z)");
  Proof s = ax(xyz.ctx(), "H2",
               {{"p", c.lhs()}, {"q", c.rhs().lhs()}, {"r", c.rhs().rhs()}});
  return mp(xy, mp(xyz, s));
}

Proof compose_imp(const Proof& ab, const Proof& bc) {
  if (!ab.conclusion().is(Conn::Imp) || !bc.conclusion().is(Conn::Imp))
    throw InvalidProofInput("compose_imp: premises must be implications");
  const Formula& a = ab.conclusion().lhs();
  // bc lifted under a, then applied to ab.
  Proof lifted = prove_weakened_consequent(bc, a);  // a -> (b -> c)
  return imp_apply(lifted, ab);
}

Proof imp_pair(const Proof& xa, const Proof& xb) {
  if (!xa.conclusion().is(Conn::Imp) || !xb.conclusion().is(Conn::Imp))
    throw InvalidProofInput("imp_pair: premises must be implications");
  const Formula& a = xa.conclusion().rhs();
  const Formula& b = xb.conclusion().rhs();
  Proof h5 = ax(xa.ctx(), "H5", {{"p", a}, {"q", b}});
  Proof step = compose_imp(xa, h5);  // x -> (b -> a & b)
  return imp_apply(step, xb);
}

Proof imp_postcompose(const Formula& a, const Proof& bc) {
  Proof lifted = prove_weakened_consequent(bc, a);  // a -> (b -> c)
  const Formula& c = bc.conclusion();
  Proof s = ax(bc.ctx(), "H2", {{"p", a}, {"q", c.lhs()}, {"r", c.rhs()}});
  return mp(lifted, s);
}

Proof weaken(const Proof& p, const Formula& extra) {
  require_checked(p, "weaken");
  return unchecked::weaken(p, extra);
}

Proof deduction(const Proof& p, const Formula& discharge) {
  require_checked(p, "deduction");
  return unchecked::deduction(p, discharge);
}

Proof undeduction(const Proof& p) {
  require_checked(p, "undeduction");
  return unchecked::undeduction(p);
}

Proof conj_intro(const Proof& pa, const Proof& pb) {
  require_checked(pa, "conj_intro");
  require_checked(pb, "conj_intro");
  return unchecked::conj_intro(pa, pb);
}

std::pair<Proof, Proof> conj_split(const Proof& p) {
  require_checked(p, "conj_split");
  return unchecked::conj_split(p);
}

Proof conj_context(const Proof& p, const Formula& a, const Formula& b) {
  require_checked(p, "conj_context");
  return unchecked::conj_context(p, a, b);
}

Proof conj_context_inv(const Proof& p, const Formula& a, const Formula& b) {
  require_checked(p, "conj_context_inv");
  return unchecked::conj_context_inv(p, a, b);
}

// ---------------------------------------------------------------------------
// Theorem enumeration

ProvedTheoremSet enumerate_theorems_with_proofs(
    System sys, const std::vector<std::string>& letters, int pool_height,
    std::size_t budget) {
  const bool with_box = sys == System::MIBox;
  const bool with_mon = sys == System::MIMon;
  std::vector<Formula> pool =
      enumerate_formulas(letters, pool_height, with_box, with_mon);

  std::unordered_map<Formula, Proof, FormulaHash> known;
  std::deque<Formula> queue;
  // Pending majors keyed by their antecedent.
  std::unordered_map<Formula, std::vector<Proof>, FormulaHash> pending;
  ProvedTheoremSet out;

  auto push = [&](const Formula& f, const Proof& certificate) {
    if (out.theorems.size() >= budget) {
      out.complete = false;
      return;
    }
    if (known.emplace(f, certificate).second) {
      out.theorems.push_back({f, certificate});
      queue.push_back(f);
    }
  };

  // Axiom instances, substitutions drawn from the pool in lexicographic
  // order of the schema's letters.
  for (const auto& schema : axiom_schemas(sys)) {
    if (!out.complete) break;
    std::vector<std::string> vars = schema.schema.letters();
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution sub;
      for (std::size_t i = 0; i < vars.size(); i++)
        sub.emplace(vars[i], pool[idx[i]]);
      push(apply_substitution(sub, schema.schema), ax({}, schema.id, sub));
      if (!out.complete || vars.empty()) break;
      std::size_t k = vars.size();
      while (k > 0) {
        k--;
        if (++idx[k] < pool.size()) break;
        idx[k] = 0;
        if (k == 0) goto done;
      }
      continue;
    done:
      break;
    }
  }

  // Saturation under mp (and cong for the modal systems).
  while (!queue.empty() && out.complete) {
    Formula f = queue.front();
    queue.pop_front();
    const Proof cert = known.at(f);
    if (f.is(Conn::Imp)) {
      const Formula& ante = f.lhs();
      const Formula& cons = f.rhs();
      auto hit = known.find(ante);
      if (hit != known.end()) {
        push(cons, mp(hit->second, cert));
      } else {
        pending[ante].push_back(cert);
      }
    }
    // f itself may unlock stored implications.
    auto it = pending.find(f);
    if (it != pending.end()) {
      for (const auto& major : it->second)
        push(major.conclusion().rhs(), mp(cert, major));
      pending.erase(it);
    }
    if (with_box || with_mon) {
      if (split_iff(f))
        push(cong(cert, with_box ? Modality::Box : Modality::Mon)
                 .conclusion(),
             cong(cert, with_box ? Modality::Box : Modality::Mon));
    }
  }

  std::sort(out.theorems.begin(), out.theorems.end(),
            [](const ProvedTheorem& a, const ProvedTheorem& b) {
              return print(a.formula) < print(b.formula);
            });
  return out;
}

TheoremSet enumerate_theorems(System sys,
                              const std::vector<std::string>& letters,
                              int pool_height, std::size_t budget) {
  ProvedTheoremSet proved =
      enumerate_theorems_with_proofs(sys, letters, pool_height, budget);
  TheoremSet out;
  out.complete = proved.complete;
  out.theorems.reserve(proved.theorems.size());
  for (const auto& t : proved.theorems) out.theorems.push_back(t.formula);
  return out;
}

}  // namespace mil
