#include "mil/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace mil {

IFrame make_iframe(FiniteSemilattice sl) {
  auto w = implicative_witness(sl);
  if (!w) throw SemanticsError("semilattice is not implicative");
  return IFrame{std::move(sl), std::move(*w)};
}

std::string frame_kind_name(FrameKind k) {
  switch (k) {
    case FrameKind::I: return "i";
    case FrameKind::Box: return "box";
    case FrameKind::Mon: return "mon";
  }
  return "?";
}

std::optional<FrameKind> frame_kind_from_name(const std::string& s) {
  if (s == "i") return FrameKind::I;
  if (s == "box") return FrameKind::Box;
  if (s == "mon") return FrameKind::Mon;
  return std::nullopt;
}

FrameKind frame_kind_for(System sys) {
  switch (sys) {
    case System::MI: return FrameKind::I;
    case System::MIBox: return FrameKind::Box;
    case System::MIMon: return FrameKind::Mon;
  }
  return FrameKind::I;
}

std::string FrameCheck::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); i++) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

namespace {

void violation(FrameCheck& c, std::string msg) {
  c.ok = false;
  c.violations.push_back(std::move(msg));
}

std::string w(int x) { return std::to_string(x); }

}  // namespace

FrameCheck check_box_frame(const IFrame& base, const std::vector<Mask>& rel) {
  FrameCheck c;
  const FiniteSemilattice& A = base.sl;
  const int n = A.size();
  if (static_cast<int>(rel.size()) != n) {
    violation(c, "relation has wrong arity");
    return c;
  }
  const int top = A.top;
  // B1
  if (rel[top] != mask_bit(top))
    violation(c, "B1: successors of top must be exactly {top}");
  for (int x = 0; x < n; x++)
    if (!mask_has(rel[x], top))
      violation(c, "B1: world " + w(x) + " misses an edge to top");
  // B2
  for (int x = 0; x < n; x++)
    for (int y : mask_elements(rel[x]))
      if (!mask_subset(A.up(y), rel[x]))
        violation(c, "B2: successor set of " + w(x) + " not up-closed at " +
                         w(y));
  // B3
  for (int x = 0; x < n; x++)
    for (int x2 = 0; x2 < n; x2++)
      for (int y : mask_elements(rel[x]))
        for (int y2 : mask_elements(rel[x2]))
          if (!mask_has(rel[A.meet(x, x2)], A.meet(y, y2))) {
            violation(c, "B3: fails for (" + w(x) + "," + w(y) + "), (" +
                             w(x2) + "," + w(y2) + ")");
            goto after_b3;
          }
after_b3:
  // B4
  for (int x = 0; x < n; x++)
    for (int x2 = 0; x2 < n; x2++) {
      int xm = A.meet(x, x2);
      for (int z : mask_elements(rel[xm])) {
        bool split = false;
        for (int y : mask_elements(rel[x])) {
          for (int y2 : mask_elements(rel[x2]))
            if (A.meet(y, y2) == z) {
              split = true;
              break;
            }
          if (split) break;
        }
        if (!split)
          violation(c, "B4: (" + w(x) + " & " + w(x2) + ") R " + w(z) +
                           " does not decompose");
      }
    }
  // Map form: every successor set a filter, gamma(top) = {top},
  // gamma(x & y) = gamma(x) join gamma(y).
  bool map_ok = true;
  for (int x = 0; x < n && map_ok; x++)
    if (!is_filter(A, rel[x])) {
      map_ok = false;
      violation(c, "map form: successor set of " + w(x) + " is not a filter");
    }
  if (map_ok && rel[top] != mask_bit(top)) map_ok = false;
  if (map_ok) {
    for (int x = 0; x < n && map_ok; x++)
      for (int y = 0; y < n && map_ok; y++) {
        auto join = try_filter_join(A, rel[x], rel[y]);
        if (!join || *join != rel[A.meet(x, y)]) {
          map_ok = false;
          violation(c, "map form: meets not preserved at (" + w(x) + "," +
                           w(y) + ")");
        }
      }
  }
  // The two characterisations must agree.
  bool b_ok = c.violations.empty();
  if (b_ok != map_ok)
    violation(c, "internal: B1-B4 and the dialgebra form disagree");
  return c;
}

FrameCheck check_mon_frame(const IFrame& base, const std::vector<Mask>& nbhd) {
  FrameCheck c;
  const FiniteSemilattice& A = base.sl;
  const int n = A.size();
  if (static_cast<int>(nbhd.size()) != n) {
    violation(c, "neighbourhood map has wrong arity");
    return c;
  }
  const Mask all = mask_full(n);  // all filter ids
  // Up-closure under filter inclusion: filter g is included in filter g'
  // iff g' <= g, so the mask must be down-closed in the element order.
  for (int x = 0; x < n; x++)
    for (int g : mask_elements(nbhd[x]))
      if (!mask_subset(A.down(g), nbhd[x]))
        violation(c, "neighbourhoods of " + w(x) +
                         " are not up-closed under filter inclusion");
  if (nbhd[A.top] != all)
    violation(c, "top world must see every filter");
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      if (nbhd[A.meet(x, y)] != (nbhd[x] & nbhd[y])) {
        violation(c, "neighbourhood map does not preserve meets at (" + w(x) +
                         "," + w(y) + ")");
        return c;
      }
  return c;
}

Frame make_i_frame(IFrame base) {
  Frame f;
  f.kind = FrameKind::I;
  f.base = std::move(base);
  return f;
}

Frame make_box_frame(IFrame base, std::vector<Mask> rel) {
  FrameCheck c = check_box_frame(base, rel);
  if (!c) throw SemanticsError("invalid box frame: " + c.to_string());
  Frame f;
  f.kind = FrameKind::Box;
  f.base = std::move(base);
  f.rel = std::move(rel);
  return f;
}

Frame make_mon_frame(IFrame base, std::vector<Mask> nbhd) {
  FrameCheck c = check_mon_frame(base, nbhd);
  if (!c) throw SemanticsError("invalid mon frame: " + c.to_string());
  Frame f;
  f.kind = FrameKind::Mon;
  f.base = std::move(base);
  f.nbhd = std::move(nbhd);
  return f;
}

Mask letter_value(const Model& m, const std::string& name) {
  auto it = m.val.find(name);
  if (it != m.val.end()) return it->second;
  return mask_bit(m.frame.sl().top);
}

namespace {

Mask eval_rec(const Model& m, const Formula& f, bool composite_box) {
  const FiniteSemilattice& A = m.frame.sl();
  const int n = A.size();
  switch (f.conn()) {
    case Conn::Top:
      return mask_full(n);
    case Conn::Letter:
      return letter_value(m, f.letter_name());
    case Conn::And:
      return eval_rec(m, f.lhs(), composite_box) &
             eval_rec(m, f.rhs(), composite_box);
    case Conn::Imp: {
      Mask a = eval_rec(m, f.lhs(), composite_box);
      Mask b = eval_rec(m, f.rhs(), composite_box);
      Mask out = 0;
      for (int x = 0; x < n; x++)
        if (mask_subset(A.up(x) & a, b)) out |= mask_bit(x);
      return out;
    }
    case Conn::Box: {
      if (m.frame.kind != FrameKind::Box)
        throw SemanticsError("box formula on a frame without a relation");
      Mask body = eval_rec(m, f.body(), composite_box);
      Mask out = 0;
      for (int x = 0; x < n; x++) {
        Mask succ = m.frame.rel[x];
        if (composite_box) {
          Mask comp = 0;
          for (int y : mask_elements(A.up(x))) comp |= m.frame.rel[y];
          succ = comp;
        }
        if (mask_subset(succ, body)) out |= mask_bit(x);
      }
      return out;
    }
    case Conn::Mon: {
      if (m.frame.kind != FrameKind::Mon)
        throw SemanticsError("mon formula on a frame without neighbourhoods");
      Mask body = eval_rec(m, f.body(), composite_box);
      int g = filter_generator(A, body);
      if (g < 0)
        throw SemanticsError("denotation is not a filter");  // cannot happen
      Mask out = 0;
      for (int x = 0; x < n; x++)
        if (mask_has(m.frame.nbhd[x], g)) out |= mask_bit(x);
      return out;
    }
  }
  throw SemanticsError("bad formula");
}

}  // namespace

Mask eval(const Model& m, const Formula& f) { return eval_rec(m, f, false); }

Mask eval_composite_box(const Model& m, const Formula& f) {
  return eval_rec(m, f, true);
}

ValidityResult frame_validates(const Frame& fr, const Formula& f,
                               const std::vector<std::string>& letters) {
  std::vector<std::string> ls = letters;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  const int n = fr.size();
  const Mask full = mask_full(n);
  std::vector<Mask> filters = enumerate_filters(fr.sl());
  std::vector<std::size_t> idx(ls.size(), 0);
  while (true) {
    Model m;
    m.frame = fr;
    for (std::size_t i = 0; i < ls.size(); i++) m.val[ls[i]] = filters[idx[i]];
    Mask denot = eval(m, f);
    if (denot != full) {
      ValidityResult r;
      r.valid = false;
      r.countervaluation = m.val;
      r.world = mask_elements(full & ~denot).front();
      return r;
    }
    if (ls.empty()) break;
    std::size_t k = ls.size();
    bool done = false;
    while (k > 0) {
      k--;
      if (++idx[k] < filters.size()) break;
      idx[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return ValidityResult{};
}

namespace {

using Rel = std::vector<Mask>;  // row x = successors of x

Rel compose(const Rel& r, const Rel& s) {
  Rel out(r.size(), 0);
  for (std::size_t x = 0; x < r.size(); x++)
    for (int y : mask_elements(r[x])) out[x] |= s[y];
  return out;
}

bool rel_subset(const Rel& r, const Rel& s) {
  for (std::size_t x = 0; x < r.size(); x++)
    if (!mask_subset(r[x], s[x])) return false;
  return true;
}

}  // namespace

ConditionReport derived_frame_conditions(const Frame& f) {
  if (f.kind != FrameKind::Box)
    throw SemanticsError("derived_frame_conditions expects a box frame");
  const FiniteSemilattice& A = f.sl();
  const int n = A.size();
  Rel leq(n, 0), geq(n, 0);
  for (int x = 0; x < n; x++) {
    leq[x] = A.up(x);
    geq[x] = A.down(x);
  }
  const Rel& R = f.rel;
  ConditionReport rep;
  Rel lRl = compose(leq, compose(R, leq));
  rep.conditions.emplace_back("R = (<= ; R ; <=)", lRl == R);
  rep.conditions.emplace_back("(>= ; R) included in (R ; >=)",
                              rel_subset(compose(geq, R), compose(R, geq)));
  rep.conditions.emplace_back("(<= ; R) included in (R ; <=)",
                              rel_subset(compose(leq, R), compose(R, leq)));
  rep.conditions.emplace_back("strictly condensed", lRl == R);
  rep.conditions.emplace_back("(R ; <=) included in (<= ; R)",
                              rel_subset(compose(R, leq), compose(leq, R)));
  // Composite box clause agreement, over every single-letter valuation.
  bool agree = true;
  Formula boxp = Formula::box(Formula::letter("p"));
  for (Mask filt : enumerate_filters(A)) {
    Model m;
    m.frame = f;
    m.val["p"] = filt;
    if (eval(m, boxp) != eval_composite_box(m, boxp)) {
      agree = false;
      break;
    }
  }
  rep.conditions.emplace_back("composite box clause agrees", agree);
  return rep;
}

bool ConditionReport::all() const {
  for (const auto& [name, ok] : conditions)
    if (!ok) return false;
  return true;
}

MorphReport check_morphism(const Frame& src, const Frame& dst,
                           const std::vector<int>& h) {
  if (src.kind != dst.kind) return {false, "frame kinds differ"};
  const FiniteSemilattice& A = src.sl();
  const FiniteSemilattice& B = dst.sl();
  if (static_cast<int>(h.size()) != A.size())
    return {false, "map has wrong arity"};
  for (int v : h)
    if (v < 0 || v >= B.size()) return {false, "map value out of range"};
  if (h[A.top] != B.top) return {false, "top not preserved"};
  for (int x = 0; x < A.size(); x++)
    for (int y = 0; y < A.size(); y++)
      if (h[A.meet(x, y)] != B.meet(h[x], h[y]))
        return {false, "meets not preserved"};
  // Order boundedness: h(x) <= y' implies some y >= x with h(y) = y'.
  for (int x = 0; x < A.size(); x++)
    for (int y2 : mask_elements(B.up(h[x]))) {
      bool found = false;
      for (int y : mask_elements(A.up(x)))
        if (h[y] == y2) {
          found = true;
          break;
        }
      if (!found) return {false, "not bounded as an order map"};
    }
  if (src.kind == FrameKind::Box) {
    for (int x = 0; x < A.size(); x++) {
      for (int y : mask_elements(src.rel[x]))
        if (!mask_has(dst.rel[h[x]], h[y]))
          return {false, "relation not preserved (forth)"};
      for (int y2 : mask_elements(dst.rel[h[x]])) {
        bool found = false;
        for (int y : mask_elements(src.rel[x]))
          if (h[y] == y2) {
            found = true;
            break;
          }
        if (!found) return {false, "relation not reflected (back)"};
      }
    }
  } else if (src.kind == FrameKind::Mon) {
    // nbhd'(h(x)) = {a' | preimage of a' under h is in nbhd(x)}.
    std::vector<Mask> dst_filters = enumerate_filters(B);
    for (int x = 0; x < A.size(); x++) {
      Mask expected = 0;
      for (int a2 = 0; a2 < B.size(); a2++) {
        Mask pre = 0;
        for (int v = 0; v < A.size(); v++)
          if (mask_has(dst_filters[a2], h[v])) pre |= mask_bit(v);
        if (!is_filter(A, pre)) continue;  // cannot happen for morphisms
        int g = filter_generator(A, pre);
        if (mask_has(src.nbhd[x], g)) expected |= mask_bit(a2);
      }
      if (dst.nbhd[h[x]] != expected)
        return {false, "neighbourhood square does not commute"};
    }
  }
  return {true, ""};
}

bool valuations_compatible(const Model& src, const Model& dst,
                           const std::vector<int>& h) {
  std::vector<std::string> letters;
  for (const auto& [k, v] : src.val) letters.push_back(k);
  for (const auto& [k, v] : dst.val) letters.push_back(k);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (const auto& l : letters) {
    Mask sv = letter_value(src, l);
    Mask dv = letter_value(dst, l);
    Mask pre = 0;
    for (int x = 0; x < src.frame.size(); x++)
      if (mask_has(dv, h[x])) pre |= mask_bit(x);
    if (pre != sv) return false;
  }
  return true;
}

TruthPresReport truth_preservation_check(const std::vector<int>& h,
                                         const Model& src, const Model& dst,
                                         const std::vector<Formula>& pool) {
  if (!check_morphism(src.frame, dst.frame, h).ok)
    throw SemanticsError("truth_preservation_check: not a morphism");
  if (!valuations_compatible(src, dst, h))
    throw SemanticsError("truth_preservation_check: incompatible valuations");
  for (const Formula& f : pool) {
    Mask s = eval(src, f);
    Mask d = eval(dst, f);
    for (int x = 0; x < src.frame.size(); x++) {
      if (mask_has(s, x) != mask_has(d, h[x])) {
        TruthPresReport r;
        r.ok = false;
        r.witness = f;
        r.world = x;
        return r;
      }
    }
  }
  return TruthPresReport{};
}

}  // namespace mil
