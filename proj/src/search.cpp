#include "mil/search.hpp"

#include <algorithm>
#include <map>

#include "mil/catalog.hpp"

namespace mil {

std::vector<std::vector<Mask>> enumerate_box_gammas(const IFrame& base) {
  const FiniteSemilattice& A = base.sl;
  const int n = A.size();
  std::vector<std::vector<Mask>> out;
  // g ranges over meet-preserving endomorphisms with g(top) = top;
  // the successor set of x is the up-set of g(x).
  std::vector<int> g(n, 0);
  while (true) {
    bool ok = g[A.top] == A.top;
    for (int x = 0; x < n && ok; x++)
      for (int y = 0; y < n && ok; y++)
        if (g[A.meet(x, y)] != A.meet(g[x], g[y])) ok = false;
    if (ok) {
      std::vector<Mask> rel(n);
      for (int x = 0; x < n; x++) rel[x] = A.up(g[x]);
      if (check_box_frame(base, rel).ok) out.push_back(std::move(rel));
    }
    int k = n;
    while (k > 0) {
      k--;
      if (++g[k] < n) break;
      g[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<std::vector<Mask>> enumerate_box_relations_bruteforce(
    const IFrame& base) {
  const int n = base.size();
  if (n > 4)
    throw SearchError("relation brute force is guarded to 4 worlds");
  const int bits = n * n;
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t code = 0; code < (1ull << bits); code++) {
    std::vector<Mask> rel(n, 0);
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++)
        if ((code >> (x * n + y)) & 1) rel[x] |= mask_bit(y);
    if (check_box_frame(base, rel).ok) out.push_back(std::move(rel));
  }
  return out;
}

namespace {

std::vector<Mask> all_downsets(const FiniteSemilattice& A) {
  const int n = A.size();
  std::vector<Mask> out;
  for (Mask m = 0; m <= mask_full(n); m++) {
    bool down = true;
    for (int x : mask_elements(m))
      if (!mask_subset(A.down(x), m)) {
        down = false;
        break;
      }
    if (down) out.push_back(m);
    if (m == mask_full(n)) break;
  }
  return out;
}

// Depth-first assignment over a linear extension processed top-down:
// meet-reducible elements are forced, meet-irreducible ones range over
// downsets below the already-assigned bounds.
struct MonEnumerator {
  const FiniteSemilattice& A;
  const IFrame& base;
  std::vector<Mask> downsets;
  std::vector<int> order;  // top-down linear extension
  std::vector<Mask> nbhd;
  std::vector<std::vector<Mask>>& out;

  MonEnumerator(const IFrame& b, std::vector<std::vector<Mask>>& o)
      : A(b.sl), base(b), out(o) {
    downsets = all_downsets(A);
    order.resize(A.size());
    for (int i = 0; i < A.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int c) {
      return mask_count(A.up(a)) < mask_count(A.up(c));
    });
    nbhd.assign(A.size(), 0);
  }

  void run() { step(0); }

  void step(std::size_t k) {
    if (k == order.size()) {
      if (check_mon_frame(base, nbhd).ok) out.push_back(nbhd);
      return;
    }
    int z = order[k];
    if (z == A.top) {
      nbhd[z] = mask_full(A.size());
      step(k + 1);
      return;
    }
    // Forced when z is a meet of two strictly larger, already-set elements.
    Mask above = A.up(z) & ~mask_bit(z);
    for (int x : mask_elements(above))
      for (int y : mask_elements(above))
        if (A.meet(x, y) == z) {
          nbhd[z] = nbhd[x] & nbhd[y];
          step(k + 1);
          return;
        }
    Mask bound = mask_full(A.size());
    for (int x : mask_elements(above)) bound &= nbhd[x];
    for (Mask d : downsets) {
      if (!mask_subset(d, bound)) continue;
      nbhd[z] = d;
      step(k + 1);
    }
    nbhd[z] = 0;
  }
};

}  // namespace

std::vector<std::vector<Mask>> enumerate_mon_nbhds(const IFrame& base) {
  std::vector<std::vector<Mask>> out;
  MonEnumerator e(base, out);
  e.run();
  return out;
}

const std::vector<Frame>& enumerate_frames(FrameKind kind, int max_worlds) {
  if (max_worlds < 1 || max_worlds > 6)
    throw SearchError("frame enumeration is guarded to 1..6 worlds");
  struct CacheKey {
    FrameKind kind;
    int bound;
    bool operator<(const CacheKey& o) const {
      return std::tie(kind, bound) < std::tie(o.kind, o.bound);
    }
  };
  static std::map<CacheKey, std::vector<Frame>> cache;
  auto [it, inserted] = cache.try_emplace(CacheKey{kind, max_worlds});
  if (!inserted) return it->second;
  std::vector<Frame>& frames = it->second;
  for (const CatalogEntry* e : catalog_upto(max_worlds, true)) {
    IFrame base{e->sl, *e->imp};
    switch (kind) {
      case FrameKind::I:
        frames.push_back(make_i_frame(base));
        break;
      case FrameKind::Box:
        for (auto& rel : enumerate_box_gammas(base))
          frames.push_back(make_box_frame(base, std::move(rel)));
        break;
      case FrameKind::Mon:
        for (auto& nb : enumerate_mon_nbhds(base))
          frames.push_back(make_mon_frame(base, std::move(nb)));
        break;
    }
  }
  return frames;
}

std::optional<Countermodel> find_countermodel(const SearchSpec& spec) {
  std::vector<std::string> letters =
      spec.letters.empty() ? spec.target.letters() : spec.letters;
  FrameKind kind = frame_kind_for(spec.system);
  for (const Frame& fr : enumerate_frames(kind, spec.max_worlds)) {
    ValidityResult r = frame_validates(fr, spec.target, letters);
    if (!r.valid) {
      Countermodel cm;
      cm.model.frame = fr;
      cm.model.val = r.countervaluation;
      cm.world = r.world;
      return cm;
    }
  }
  return std::nullopt;
}

ConservativityReport conservativity_probe(const Formula& f, int bound) {
  if (f.has_modality())
    throw SearchError("conservativity probe expects a modality-free formula");
  ConservativityReport rep;
  SearchSpec i_spec{System::MI, f, bound, {}};
  SearchSpec box_spec{System::MIBox, f, bound, {}};
  rep.i_witness = find_countermodel(i_spec);
  rep.box_witness = find_countermodel(box_spec);
  rep.agreement = rep.i_witness.has_value() == rep.box_witness.has_value();
  return rep;
}

}  // namespace mil
