#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mil/catalog.hpp"
#include "mil/order.hpp"

using namespace mil;

namespace {

// Brute-force filter enumeration for cross-checking the principal one.
std::vector<Mask> filters_by_subsets(const FiniteSemilattice& A) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= mask_full(A.size()); m++) {
    if (is_filter(A, m)) out.push_back(m);
    if (m == mask_full(A.size())) break;
  }
  return out;
}

}  // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 1}, {1, 0}}), OrderError);
  CHECK_THROWS_AS(
      FinitePoset::from_up_masks({mask_bit(0) | mask_bit(1), mask_bit(1),
                                  mask_bit(2) | mask_bit(0)}),
      OrderError);  // 2 <= 0 <= 1 but not 2 <= 1
  auto p = FinitePoset::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.leq(0, 2));
  CHECK(!p.leq(2, 0));
}

TEST_CASE("validate_semilattice on chains and the V-shape") {
  auto chain = make_chain(3);
  CHECK(chain.meet(0, 2) == 0);
  CHECK(chain.meet(1, 2) == 1);
  CHECK(chain.top == 2);

  // V-poset: x <= top, y <= top, no meet for (x, y).
  auto v = FinitePoset::from_pairs(3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(validate_semilattice(v, 2), OrderError);
  try {
    validate_semilattice(v, 2);
  } catch (const OrderError& e) {
    CHECK(e.code == OrderError::Code::MissingMeet);
  }
  CHECK_THROWS_AS(validate_semilattice(make_chain(3).poset, 1), OrderError);
}

TEST_CASE("diamond meets") {
  auto d = make_diamond();
  CHECK(d.meet(1, 2) == 0);
  CHECK(d.meet(1, 3) == 1);
  CHECK(d.top == 3);
}

TEST_CASE("semilattice laws hold across the catalog") {
  for (const auto& e : catalog()) {
    const auto& A = e.sl;
    for (int x = 0; x < A.size(); x++) {
      CHECK(A.meet(x, A.top) == x);
      CHECK(A.meet(x, x) == x);
      for (int y = 0; y < A.size(); y++) {
        CHECK(A.meet(x, y) == A.meet(y, x));
        CHECK((A.leq(x, y) == (A.meet(x, y) == x)));
        for (int z = 0; z < A.size(); z++)
          CHECK(A.meet(x, A.meet(y, z)) == A.meet(A.meet(x, y), z));
      }
    }
  }
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(make_chain(3)));
  CHECK(is_distributive(make_diamond()));
  CHECK(!is_distributive(make_m3()));
  CHECK(!is_distributive(make_n5()));
}

TEST_CASE("implicative witness and residuation") {
  auto chain = make_chain(3);
  auto w = implicative_witness(chain);
  REQUIRE(w.has_value());
  CHECK(w->of(1, 0) == 0);
  CHECK(w->of(0, 1) == 2);
  CHECK(!implicative_witness(make_m3()).has_value());

  for (const auto& e : catalog()) {
    if (!e.imp) continue;
    const auto& A = e.sl;
    for (int y = 0; y < A.size(); y++) {
      CHECK(e.imp->of(y, A.top) == A.top);
      CHECK(e.imp->of(A.top, y) == y);
      for (int z = 0; z < A.size(); z++)
        for (int x = 0; x < A.size(); x++)
          CHECK(A.leq(x, e.imp->of(y, z)) == A.leq(A.meet(x, y), z));
    }
  }
}

TEST_CASE("finite implicative iff distributive, on the catalog") {
  for (const auto& e : catalog())
    CHECK(e.imp.has_value() == e.distributive);
}

TEST_CASE("filter enumeration is complete and principal") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 5) continue;
    auto principal = enumerate_filters(e.sl);
    auto brute = filters_by_subsets(e.sl);
    CHECK(principal.size() == brute.size());
    for (Mask f : brute) {
      int g = filter_generator(e.sl, f);
      REQUIRE(g >= 0);
      CHECK(principal[g] == f);
      CHECK(e.sl.up(g) == f);
    }
  }
}

TEST_CASE("filter counts on the named structures") {
  CHECK(enumerate_filters(make_chain(3)).size() == 3);
  CHECK(enumerate_filters(make_diamond()).size() == 4);
  CHECK(enumerate_filters(make_chain(1)).size() == 1);
  // The collection {x, y, top} of the diamond is not a filter.
  auto d = make_diamond();
  CHECK(!is_filter(d, mask_bit(1) | mask_bit(2) | mask_bit(3)));
}

TEST_CASE("filter closure") {
  auto d = make_diamond();
  CHECK(filter_closure(d, mask_bit(1) | mask_bit(2)) == mask_full(4));
  CHECK(filter_closure(d, mask_bit(d.top)) == mask_bit(d.top));
  auto chain = make_chain(3);
  CHECK(filter_closure(chain, mask_bit(1)) == (mask_bit(1) | mask_bit(2)));
  CHECK_THROWS_AS(filter_closure(chain, 0), OrderError);
}

TEST_CASE("filter join") {
  auto chain = make_chain(3);
  CHECK(filter_join(chain, chain.up(1), chain.up(2)) == chain.up(1));
  auto d = make_diamond();
  CHECK(filter_join(d, d.up(1), d.up(2)) == d.up(0));
  for (const auto& e : catalog()) {
    if (!e.distributive) continue;
    auto fs = enumerate_filters(e.sl);
    for (Mask p : fs) {
      CHECK(filter_join(e.sl, p, mask_bit(e.sl.top)) == p);
      for (Mask q : fs) {
        Mask j = filter_join(e.sl, p, q);
        CHECK(j == filter_closure(e.sl, p | q));
      }
    }
  }
}

TEST_CASE("filter implication") {
  auto chain = make_chain(3);
  CHECK(filter_implication(chain, chain.up(1), chain.up(2)) == mask_bit(2));
  for (const auto& e : catalog()) {
    if (!e.distributive) continue;
    auto fs = enumerate_filters(e.sl);
    Mask whole = mask_full(e.sl.size());
    for (Mask a : fs) {
      CHECK(filter_implication(e.sl, a, a) == whole);
      for (Mask b : fs) CHECK(filter_implication(e.sl, whole, b) == b);
    }
  }
}

TEST_CASE("the filter semilattice") {
  auto fc = build_filter_semilattice(make_chain(3));
  CHECK(fc.sl.size() == 3);
  // Under inclusion the whole carrier is on top.
  CHECK(fc.filters[fc.sl.top] == mask_full(3));

  auto fd = build_filter_semilattice(make_diamond());
  CHECK(fd.sl.size() == 4);
  CHECK(canonical_up_masks(fd.sl.poset) ==
        canonical_up_masks(make_diamond().poset));

  auto f1 = build_filter_semilattice(make_chain(1));
  CHECK(f1.sl.size() == 1);
}

TEST_CASE("distributive semilattices have distributive filter algebras") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 6 || !e.distributive) continue;
    auto fa = build_filter_semilattice(e.sl);
    CHECK(is_distributive(fa.sl));
    CHECK(implicative_witness(fa.sl).has_value());
  }
}

TEST_CASE("implicative semilattices have implicative filter algebras") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 6 || !e.imp) continue;
    auto fa = build_filter_semilattice(e.sl);
    CHECK(implicative_witness(fa.sl).has_value());
  }
}

TEST_CASE("eta") {
  auto chain = make_chain(3);
  CHECK(eta(chain, 2) == mask_full(3));  // every filter contains the top
  CHECK(eta(chain, 0) == mask_bit(0));   // only the whole chain contains 0
  for (const auto& e : catalog()) {
    if (e.sl.size() > 5) continue;
    CHECK(eta(e.sl, e.sl.top) == mask_full(e.sl.size()));
  }
}

TEST_CASE("unit law: F(eta) after eta on the filter algebra is the identity") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 5) continue;
    const auto& A = e.sl;
    auto FA = build_filter_semilattice(A);
    // eta_A(a) viewed as an element of FFA has index a; applying the
    // preimage of eta_A to eta_{FA}(p) must give back p.
    for (int p = 0; p < FA.size(); p++) {
      Mask lifted = eta(FA.sl, p);  // {q in FFA | p in q}
      auto FFA = build_filter_semilattice(FA.sl);
      Mask back = 0;
      for (int a = 0; a < A.size(); a++) {
        int img = filter_generator(FA.sl, eta(A, a));  // eta_A(a) in FFA
        if (mask_has(lifted, img)) back |= mask_bit(a);
      }
      CHECK(back == FA.filters[p]);
    }
  }
}

TEST_CASE("every filter equals the up-set of its meet (principality)") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 5) continue;
    for (Mask f : filters_by_subsets(e.sl)) {
      int g = e.sl.meet_all(f);
      CHECK(e.sl.up(g) == f);
    }
  }
}

TEST_CASE("prime downsets are exactly complements of filters") {
  for (const auto& e : catalog()) {
    if (e.sl.size() > 4) continue;
    Mask full = mask_full(e.sl.size());
    for (Mask m = 0; m <= full; m++) {
      bool prime = is_prime_downset(e.sl, m);
      bool co_filter = is_filter(e.sl, full & ~m);
      CHECK(prime == co_filter);
      if (m == full) break;
    }
  }
}

TEST_CASE("catalog contents") {
  // Sizes 1..5 exhaustively: 1, 1, 1, 2, 5 isomorphism classes.
  std::size_t counts[6] = {0, 0, 0, 0, 0, 0};
  for (int n = 1; n <= 5; n++) counts[n] = all_semilattices(n).size();
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 1);
  CHECK(counts[4] == 2);
  CHECK(counts[5] == 5);
  CHECK(catalog_named("m3").distributive == false);
  CHECK(catalog_named("free3").sl.size() == 8);
  CHECK(catalog_named("free2").sl.size() == 4);
  // free2 is the diamond up to isomorphism.
  CHECK(canonical_up_masks(catalog_named("free2").sl.poset) ==
        canonical_up_masks(make_diamond().poset));
}
