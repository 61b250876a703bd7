#include "mil/duality.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mil/search.hpp"

namespace mil {

bool box_table_ok(const FiniteSemilattice& sl, const std::vector<int>& box) {
  if (static_cast<int>(box.size()) != sl.size()) return false;
  for (int v : box)
    if (v < 0 || v >= sl.size()) return false;
  if (box[sl.top] != sl.top) return false;
  for (int a = 0; a < sl.size(); a++)
    for (int b = 0; b < sl.size(); b++)
      if (box[sl.meet(a, b)] != sl.meet(box[a], box[b])) return false;
  return true;
}

bool mon_table_ok(const FiniteSemilattice& sl, const std::vector<int>& mon) {
  if (static_cast<int>(mon.size()) != sl.size()) return false;
  for (int v : mon)
    if (v < 0 || v >= sl.size()) return false;
  for (int a = 0; a < sl.size(); a++)
    for (int b = 0; b < sl.size(); b++)
      if (!sl.leq(mon[sl.meet(a, b)], mon[a])) return false;
  return true;
}

Islo make_islo(FiniteSemilattice sl, std::vector<int> box) {
  auto w = implicative_witness(sl);
  if (!w) throw AlgebraError("carrier is not implicative");
  if (!box_table_ok(sl, box))
    throw AlgebraError("box table does not preserve meets and top");
  return Islo{std::move(sl), std::move(*w), std::move(box)};
}

MonAlgebra make_mon_algebra(FiniteSemilattice sl, std::vector<int> mon) {
  auto w = implicative_witness(sl);
  if (!w) throw AlgebraError("carrier is not implicative");
  if (!mon_table_ok(sl, mon))
    throw AlgebraError("mon table violates mon(a & b) <= mon(a)");
  return MonAlgebra{std::move(sl), std::move(*w), std::move(mon)};
}

Mask m_box(const Frame& f, Mask p) {
  if (f.kind != FrameKind::Box) throw AlgebraError("m_box needs a box frame");
  Mask out = 0;
  for (int x = 0; x < f.size(); x++)
    if (mask_subset(f.rel[x], p)) out |= mask_bit(x);
  return out;
}

Islo complex_algebra(const Frame& f) {
  if (f.kind != FrameKind::Box)
    throw AlgebraError("complex_algebra needs a box frame");
  const FiniteSemilattice& A = f.sl();
  FilterAlgebra FA = build_filter_semilattice(A);
  const int n = FA.size();
  ImpWitness imp;
  imp.size = n;
  imp.table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) {
      Mask r = filter_implication(A, FA.filters[a], FA.filters[b]);
      imp.table[a * n + b] = filter_generator(A, r);
    }
  std::vector<int> box(n);
  for (int a = 0; a < n; a++)
    box[a] = filter_generator(A, m_box(f, FA.filters[a]));
  Islo out{std::move(FA.sl), std::move(imp), std::move(box)};
  if (!box_table_ok(out.sl, out.box))
    throw AlgebraError("complex algebra box table is not an operator");
  return out;
}

MonAlgebra complex_algebra_mon(const Frame& f) {
  if (f.kind != FrameKind::Mon)
    throw AlgebraError("complex_algebra_mon needs a mon frame");
  const FiniteSemilattice& A = f.sl();
  FilterAlgebra FA = build_filter_semilattice(A);
  const int n = FA.size();
  ImpWitness imp;
  imp.size = n;
  imp.table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      imp.table[a * n + b] = filter_generator(
          A, filter_implication(A, FA.filters[a], FA.filters[b]));
  std::vector<int> mon(n);
  for (int a = 0; a < n; a++) {
    Mask r = 0;
    for (int x = 0; x < A.size(); x++)
      if (mask_has(f.nbhd[x], a)) r |= mask_bit(x);
    int g = filter_generator(A, r);
    if (g < 0 || !is_filter(A, r))
      throw AlgebraError("mon lifting produced a non-filter");
    mon[a] = g;
  }
  MonAlgebra out{std::move(FA.sl), std::move(imp), std::move(mon)};
  if (!mon_table_ok(out.sl, out.mon))
    throw AlgebraError("complex algebra mon table is not monotone");
  return out;
}

Frame dual_frame(const Islo& a) {
  FilterAlgebra FA = build_filter_semilattice(a.sl);
  const int n = FA.size();
  std::vector<Mask> rel(n, 0);
  for (int p = 0; p < n; p++) {
    Mask p_box = 0;  // {c | box(c) in p}, a filter of the carrier
    for (int c = 0; c < a.size(); c++)
      if (mask_has(FA.filters[p], a.box[c])) p_box |= mask_bit(c);
    for (int q = 0; q < n; q++)
      if (mask_subset(p_box, FA.filters[q])) rel[p] |= mask_bit(q);
  }
  return make_box_frame(make_iframe(FA.sl), std::move(rel));
}

namespace {

// Index of eta(x) = {p | x in p} inside the filter algebra of A: the filter
// of FA generated by the principal filter of x, which sits at index x.
std::vector<int> eta_witness(const FiniteSemilattice& A) {
  FilterAlgebra FA = build_filter_semilattice(A);
  std::vector<int> map(A.size(), -1);
  for (int x = 0; x < A.size(); x++)
    map[x] = filter_generator(FA.sl, eta(A, x));
  return map;
}

bool is_bijection(const std::vector<int>& h, int target_size) {
  std::vector<bool> hit(target_size, false);
  for (int v : h) {
    if (v < 0 || v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return static_cast<int>(h.size()) == target_size;
}

IsoReport iso_fail(std::vector<int> witness, std::string why) {
  IsoReport r;
  r.iso = false;
  r.failure = std::move(why);
  r.witness = std::move(witness);
  return r;
}

}  // namespace

IsoReport duality_roundtrip_algebra(const Islo& a) {
  Frame d = dual_frame(a);
  Islo c = complex_algebra(d);
  std::vector<int> h = eta_witness(a.sl);
  if (!is_bijection(h, c.size()))
    return iso_fail(h, "eta is not a bijection");
  if (h[a.sl.top] != c.sl.top) return iso_fail(h, "eta does not preserve top");
  for (int x = 0; x < a.size(); x++)
    for (int y = 0; y < a.size(); y++) {
      if (h[a.sl.meet(x, y)] != c.sl.meet(h[x], h[y]))
        return iso_fail(h, "eta does not preserve meets");
      if (h[a.imp.of(x, y)] != c.imp.of(h[x], h[y]))
        return iso_fail(h, "eta does not preserve implication");
    }
  for (int x = 0; x < a.size(); x++)
    if (h[a.box[x]] != c.box[h[x]])
      return iso_fail(h, "eta does not preserve the box operator");
  IsoReport r;
  r.witness = std::move(h);
  return r;
}

IsoReport duality_roundtrip_frame(const Frame& f) {
  if (f.kind != FrameKind::Box)
    throw AlgebraError("duality_roundtrip_frame needs a box frame");
  Islo c = complex_algebra(f);
  Frame d = dual_frame(c);
  std::vector<int> h = eta_witness(f.sl());
  if (!is_bijection(h, d.size()))
    return iso_fail(h, "principal-filter map is not a bijection");
  if (h[f.sl().top] != d.sl().top)
    return iso_fail(h, "top not preserved");
  for (int x = 0; x < f.size(); x++)
    for (int y = 0; y < f.size(); y++) {
      if (h[f.sl().meet(x, y)] != d.sl().meet(h[x], h[y]))
        return iso_fail(h, "meets not preserved");
      if (mask_has(f.rel[x], y) != mask_has(d.rel[h[x]], h[y]))
        return iso_fail(h, "relation not preserved");
    }
  IsoReport r;
  r.witness = std::move(h);
  return r;
}

bool rho_flat_box_identity(const FiniteSemilattice& A, Mask trace) {
  if (!is_filter(A, trace)) throw AlgebraError("trace must be a filter");
  std::vector<Mask> filters = enumerate_filters(A);
  for (int a = 0; a < A.size(); a++) {
    bool in_every = true;
    for (const Mask& p : filters)
      if (mask_subset(trace, p) && !mask_has(p, a)) {
        in_every = false;
        break;
      }
    if (in_every != mask_has(trace, a)) return false;
  }
  return true;
}

Mask tau_box(const FiniteSemilattice& A, Mask trace) {
  std::vector<Mask> filters = enumerate_filters(A);
  Mask out = 0;
  for (int q = 0; q < static_cast<int>(filters.size()); q++)
    if (mask_subset(trace, filters[q])) out |= mask_bit(q);
  return out;
}

MonTau tau_mon(const FiniteSemilattice& A, Mask upset_trace) {
  for (int a : mask_elements(upset_trace))
    if (!mask_subset(A.up(a), upset_trace))
      throw AlgebraError("mon trace must be an upset");
  const int n = A.size();
  FilterAlgebra FA = build_filter_semilattice(A);
  FilterAlgebra FFA = build_filter_semilattice(FA.sl);
  // Clopen filters of FA are the sets {p | a in p}; at finite scale the
  // filter of FA with least element p0 = up(a) is exactly that set.
  std::vector<Mask> clopens(n);  // clopens[a] over FA indices
  for (int a = 0; a < n; a++) clopens[a] = eta(A, a);

  auto clopen_index_of = [&](Mask u) -> int {
    for (int a = 0; a < n; a++)
      if (clopens[a] == u) return a;
    return -1;
  };

  const int m = FFA.size();
  std::vector<bool> tier1(m, false), is_clopen(m, false);
  std::vector<bool> tier2(m, false), is_closed(m, false);
  std::vector<bool> tier3(m, false);
  for (int i = 0; i < m; i++) {
    Mask u = FFA.filters[i];
    int a = clopen_index_of(u);
    if (a >= 0) {
      is_clopen[i] = true;
      tier1[i] = mask_has(upset_trace, a);
    }
  }
  for (int i = 0; i < m; i++) {
    Mask u = FFA.filters[i];
    Mask inter = mask_full(n);
    bool member = true;
    for (int a = 0; a < n; a++)
      if (mask_subset(u, clopens[a])) {
        inter &= clopens[a];
        if (!mask_has(upset_trace, a)) member = false;
      }
    is_closed[i] = inter == u;
    tier2[i] = is_closed[i] && member;
  }
  for (int i = 0; i < m; i++) {
    for (int j = 0; j < m; j++)
      if (is_closed[j] && tier2[j] && mask_subset(FFA.filters[j], FFA.filters[i])) {
        tier3[i] = true;
        break;
      }
  }
  MonTau out;
  out.tiers_agree = true;
  for (int i = 0; i < m; i++) {
    if (!is_clopen[i] || !is_closed[i]) out.tiers_agree = false;
    if (is_clopen[i] && (tier1[i] != tier3[i] || tier2[i] != tier3[i]))
      out.tiers_agree = false;
    if (tier3[i]) out.collection |= mask_bit(i);
  }
  out.identity = true;
  for (int a = 0; a < n; a++) {
    int i = filter_generator(FA.sl, clopens[a]);
    bool member = mask_has(out.collection, i);
    if (member != mask_has(upset_trace, a)) out.identity = false;
  }
  return out;
}

Extension filter_extension(const Frame& f) {
  const FiniteSemilattice& A = f.sl();
  const int n = A.size();
  FilterAlgebra FA = build_filter_semilattice(A);
  FilterAlgebra FFA = build_filter_semilattice(FA.sl);
  IFrame new_base = make_iframe(FFA.sl);
  Extension ext;
  ext.eta = eta_witness(A);
  switch (f.kind) {
    case FrameKind::I:
      ext.frame = make_i_frame(std::move(new_base));
      break;
    case FrameKind::Box: {
      const int m = FFA.size();
      std::vector<Mask> rel(m, mask_full(m));
      for (int p = 0; p < m; p++) {
        for (int a = 0; a < n; a++) {
          int ma = filter_generator(A, m_box(f, FA.filters[a]));
          if (mask_has(FFA.filters[p], ma)) rel[p] &= eta(FA.sl, a);
        }
      }
      ext.frame = make_box_frame(std::move(new_base), std::move(rel));
      break;
    }
    case FrameKind::Mon: {
      const int m = FFA.size();
      // Filters of the extension's base are principal, so they are indexed
      // by their generators, which are FFA indices again.
      std::vector<Mask> clopens(n);
      for (int a = 0; a < n; a++) clopens[a] = eta(FA.sl, a);
      std::vector<Mask> nbhd(m, 0);
      for (int p = 0; p < m; p++) {
        // Tier 1 membership for the clopen of each a in FA.
        std::vector<bool> tier1(n, false);
        for (int a = 0; a < n; a++) {
          Mask w = 0;  // {x | filter a in nbhd(x)}
          for (int x = 0; x < n; x++)
            if (mask_has(f.nbhd[x], a)) w |= mask_bit(x);
          int gw = filter_generator(A, w);
          tier1[a] = gw >= 0 && mask_has(FFA.filters[p], gw);
        }
        // Tiers 2 and 3 over all filters of the extension base.
        std::vector<Mask> ext_filters = enumerate_filters(FFA.sl);
        std::vector<bool> closed(m, false), tier2(m, false);
        for (int j = 0; j < m; j++) {
          Mask u = ext_filters[j];
          Mask inter = mask_full(m);
          bool member = true;
          for (int a = 0; a < n; a++)
            if (mask_subset(u, clopens[a])) {
              inter &= clopens[a];
              if (!tier1[a]) member = false;
            }
          closed[j] = inter == u;
          tier2[j] = closed[j] && member;
        }
        for (int j = 0; j < m; j++)
          for (int k = 0; k < m; k++)
            if (closed[k] && tier2[k] &&
                mask_subset(ext_filters[k], ext_filters[j])) {
              nbhd[p] |= mask_bit(j);
              break;
            }
      }
      ext.frame = make_mon_frame(std::move(new_base), std::move(nbhd));
      break;
    }
  }
  return ext;
}

Model transport_model(const Model& m, const Extension& ext) {
  const FiniteSemilattice& A = m.frame.sl();
  FilterAlgebra FA = build_filter_semilattice(A);
  Model out;
  out.frame = ext.frame;
  for (const auto& [letter, value] : m.val) {
    int gv = filter_generator(A, value);
    out.val[letter] = eta(FA.sl, gv);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Behavioural and logical equivalence

namespace {

std::string frame_key(const Frame& f) {
  std::ostringstream os;
  os << frame_kind_name(f.kind) << ':' << f.size() << ':';
  for (int x = 0; x < f.size(); x++) os << f.sl().up(x) << ',';
  os << f.sl().top << ':';
  for (Mask r : f.rel) os << r << ',';
  os << ':';
  for (Mask w : f.nbhd) os << w << ',';
  return os.str();
}

// All maps src -> dst passing check_morphism, in lexicographic order.
const std::vector<std::vector<int>>& morphisms_between(const Frame& src,
                                                       const Frame& dst) {
  static std::map<std::string, std::vector<std::vector<int>>> cache;
  std::string key = frame_key(src) + "|" + frame_key(dst);
  auto [it, inserted] = cache.try_emplace(key);
  if (!inserted) return it->second;
  const int sn = src.size();
  const int dn = dst.size();
  std::vector<int> h(sn, 0);
  while (true) {
    if (check_morphism(src, dst, h).ok) it->second.push_back(h);
    int k = sn;
    bool done = false;
    while (k > 0) {
      k--;
      if (++h[k] < dn) break;
      h[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return it->second;
}

std::vector<std::string> model_letters(const Model& a, const Model& b) {
  std::vector<std::string> ls;
  for (const auto& [k, v] : a.val) ls.push_back(k);
  for (const auto& [k, v] : b.val) ls.push_back(k);
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls;
}

}  // namespace

BehEqResult behavioural_equivalence(const Model& m1, const Model& m2, int x1,
                                    int x2, int bound) {
  if (m1.frame.kind != m2.frame.kind)
    throw AlgebraError("behavioural_equivalence: frame kinds differ");
  std::vector<std::string> letters = model_letters(m1, m2);
  const std::vector<Frame>& targets = enumerate_frames(m1.frame.kind, bound);
  std::vector<Mask> v1(letters.size()), v2(letters.size());
  for (std::size_t i = 0; i < letters.size(); i++) {
    v1[i] = letter_value(m1, letters[i]);
    v2[i] = letter_value(m2, letters[i]);
  }
  BehEqResult res;
  for (int t = 0; t < static_cast<int>(targets.size()); t++) {
    const Frame& target = targets[t];
    std::vector<Mask> target_filters = enumerate_filters(target.sl());
    const auto& hs1 = morphisms_between(m1.frame, target);
    const auto& hs2 = morphisms_between(m2.frame, target);
    if (hs1.empty() || hs2.empty()) continue;
    for (const auto& h1 : hs1) {
      for (const auto& h2 : hs2) {
        if (h1[x1] != h2[x2]) continue;
        // A single target valuation must pull back to both models.
        bool all_ok = true;
        for (std::size_t i = 0; i < letters.size() && all_ok; i++) {
          bool found = false;
          for (Mask w : target_filters) {
            Mask pre1 = 0, pre2 = 0;
            for (int x = 0; x < m1.frame.size(); x++)
              if (mask_has(w, h1[x])) pre1 |= mask_bit(x);
            for (int x = 0; x < m2.frame.size(); x++)
              if (mask_has(w, h2[x])) pre2 |= mask_bit(x);
            if (pre1 == v1[i] && pre2 == v2[i]) {
              found = true;
              break;
            }
          }
          all_ok = found;
        }
        if (all_ok) {
          res.equivalent = true;
          res.target_index = t;
          res.h1 = h1;
          res.h2 = h2;
          return res;
        }
      }
    }
  }
  res.bound_limited = true;
  return res;
}

LogEqResult logical_equivalence(const Model& m1, const Model& m2, int x1,
                                int x2, int depth) {
  if (m1.frame.kind != m2.frame.kind)
    throw AlgebraError("logical_equivalence: frame kinds differ");
  std::vector<std::string> letters = model_letters(m1, m2);
  std::vector<Formula> pool =
      enumerate_formulas(letters, depth, m1.frame.kind == FrameKind::Box,
                         m1.frame.kind == FrameKind::Mon);
  for (const Formula& f : pool) {
    bool a = mask_has(eval(m1, f), x1);
    bool b = mask_has(eval(m2, f), x2);
    if (a != b) return LogEqResult{false, f};
  }
  return LogEqResult{true, Formula::top()};
}

}  // namespace mil
