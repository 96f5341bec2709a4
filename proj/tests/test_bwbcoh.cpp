#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roofs/bwb.hpp"
#include "roofs/error.hpp"

#include <random>

using namespace roofs;
using namespace roofs::bwb;

namespace {

const Rational half(1, 2);

// binom(x, k) as a polynomial in x, valid for negative x too.
Rational poly_binomial(const Integer& x, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out = out * Rational(x - i) / Rational(i + 1);
  return out;
}

// Hilbert polynomial of a quadric hypersurface in P^(n+1).
Integer quadric_hilbert(int n, const Integer& t) {
  return to_integer(poly_binomial(t + n + 1, n + 1) - poly_binomial(t + n - 1, n + 1));
}

CohomologyTable table(std::map<int, Integer> m) { return CohomologyTable(std::move(m)); }

}  // namespace

TEST_CASE("rho") {
  CHECK(rho(RootSystem(Family::B, 3)) == Weight{Rational(5, 2), Rational(3, 2), half});
  CHECK(rho(RootSystem(Family::D, 4)) == Weight{3, 2, 1, 0});
  CHECK(rho(RootSystem(Family::B, 2)) == Weight{Rational(3, 2), half});
  CHECK(quadric_group(5).name() == "B3");
  CHECK(quadric_group(6).name() == "D4");
}

TEST_CASE("dominant conjugates") {
  const RootSystem b3(Family::B, 3);
  const auto a = dominant_conjugate(b3, {Rational(5, 2), Rational(3, 2), half});
  REQUIRE(a);
  CHECK(a->length == 0);
  const auto b = dominant_conjugate(b3, {Rational(5, 2), half, Rational(3, 2)});
  REQUIRE(b);
  CHECK(b->length == 1);
  CHECK(b->weight == Weight{Rational(5, 2), Rational(3, 2), half});
  CHECK_FALSE(dominant_conjugate(b3, {Rational(5, 2), Rational(3, 2), Rational(3, 2)}));
  // A sign flip of the short coordinate is one reflection.
  const auto c = dominant_conjugate(b3, {Rational(5, 2), Rational(3, 2), -half});
  REQUIRE(c);
  CHECK(c->length == 1);
  // In type D a single sign flip is not allowed; the zero coordinate absorbs it.
  const RootSystem d4(Family::D, 4);
  const auto d = dominant_conjugate(d4, {3, 2, 1, 0});
  REQUIRE(d);
  CHECK(d->length == 0);
  const auto e = dominant_conjugate(d4, {3, 2, -1, 0});
  REQUIRE(e);
  CHECK(e->weight == Weight{3, 2, 1, 0});
}

TEST_CASE("dominant conjugate is idempotent on regular dominant weights") {
  for (const auto& rs : {RootSystem(Family::B, 3), RootSystem(Family::D, 4), RootSystem(Family::B, 4)}) {
    const auto r = rho(rs);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b <= a; ++b) {
        Weight w = r;
        w[0] += a;
        w[1] += b;
        const auto c = dominant_conjugate(rs, w);
        REQUIRE(c);
        CHECK(c->length == 0);
        CHECK(c->weight == w);
      }
  }
}

TEST_CASE("Weyl dimensions") {
  const RootSystem b3(Family::B, 3);
  CHECK(weyl_dimension(b3, {1, 0, 0}) == 7);
  CHECK(weyl_dimension(b3, {half, half, half}) == 8);
  CHECK(weyl_dimension(b3, {Rational(3, 2), half, half}) == 48);
  CHECK(weyl_dimension(b3, {0, 0, 0}) == 1);
  CHECK(weyl_dimension(b3, {1, 1, 0}) == 21);
  CHECK(weyl_dimension(RootSystem(Family::D, 4), {1, 0, 0, 0}) == 8);
  CHECK(weyl_dimension(RootSystem(Family::D, 4), {1, 1, 0, 0}) == 28);
  try {
    (void)weyl_dimension(b3, {0, 1, 0});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("Weyl dimension is invariant under duality for dictionary weights") {
  for (int n : {5, 6})
    for (const auto& d : irreducible_descriptors())
      for (int t = -3; t <= 3; ++t) {
        const auto rs = quadric_group(n);
        for (const auto& w : bundle_weights(n, d, t)) {
          if (!is_dominant(rs, w)) continue;
          CHECK(weyl_dimension(rs, w) == weyl_dimension(rs, dual_weight(rs, w)));
        }
      }
}

TEST_CASE("dictionary examples on Q5") {
  CHECK(bundle_cohomology(5, "O", 1) == table({{0, 7}}));
  CHECK(bundle_cohomology(5, "Sym2Sdual", -3) == table({{2, 1}}));
  CHECK(bundle_cohomology(5, "Wedge2Sdual", -3).is_acyclic());
  CHECK(bundle_cohomology(5, "Sdual", 1) == table({{0, 48}}));
  CHECK(bundle_cohomology(5, "Sdual", 0) == table({{0, 8}}));
  CHECK(bundle_cohomology(5, "S", 0).is_acyclic());
  try {
    (void)bundle_cohomology(5, "Foo", 0);
    FAIL("expected an unsupported bundle error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedBundle);
  }
  CHECK_THROWS_AS(bundle_cohomology(7, "Sym2S", 0), Error);
}

TEST_CASE("line bundles follow the quadric Hilbert polynomial") {
  for (int n = 3; n <= 8; ++n)
    for (int t = -12; t <= 8; ++t) {
      const auto h = bundle_cohomology(n, "O", t);
      CHECK(euler_characteristic(h) == quadric_hilbert(n, t));
      CHECK(h.nonzero() <= 1);
      if (t >= 0) CHECK(h == table({{0, quadric_hilbert(n, t)}}));
      if (t > -n && t < 0) CHECK(h.is_acyclic());
    }
}

TEST_CASE("Serre duality for line bundles on Q5") {
  for (int t = -8; t <= 3; ++t) {
    const auto a = bundle_cohomology(5, "O", t), b = bundle_cohomology(5, "O", -5 - t);
    for (int k = 0; k <= 5; ++k) CHECK(a.h(k) == b.h(5 - k));
  }
}

TEST_CASE("Serre duality for spinor bundles on odd quadrics") {
  // The dual of S^v(t) is S^v(-t-1) and the canonical bundle is O(-n).
  for (int n : {3, 5, 7})
    for (int t = -10; t <= 4; ++t) {
      const auto a = bundle_cohomology(n, "Sdual", t), b = bundle_cohomology(n, "Sdual", -t - 1 - n);
      for (int k = 0; k <= n; ++k) CHECK(a.h(k) == b.h(n - k));
    }
}

TEST_CASE("fiber ranks") {
  CHECK(fiber_rank(5, "Sdual") == 4);
  CHECK(fiber_rank(5, "Sym2Sdual") == 10);
  CHECK(fiber_rank(5, "Wedge2Sdual") == 6);
  CHECK(fiber_rank(6, "Sym2Sdual") == 10);
  CHECK(fiber_rank(6, "Wedge2Sdual") == 6);
  for (int n = 3; n <= 10; ++n) {
    CHECK(fiber_rank(n, "O") == 1);
    CHECK(fiber_rank(n, "Sdual") == Integer(1) << ((n - 1) / 2));
    // Global sections of the dual spinor bundle form a spin representation.
    CHECK(bundle_cohomology(n, "Sdual", 0) == table({{0, Integer(1) << ((n + 1) / 2)}}));
  }
}

TEST_CASE("Bott dichotomy") {
  for (int n = 3; n <= 8; ++n)
    for (int t = -10; t <= 10; ++t) {
      const auto rs = quadric_group(n);
      for (const auto& d : irreducible_descriptors()) {
        if ((d.rfind("Sym2", 0) == 0 || d.rfind("Wedge2", 0) == 0) && n != 5 && n != 6) continue;
        for (const auto& w : bundle_weights(n, d, t)) {
          const auto h = bott(rs, w);
          CHECK(h.nonzero() <= 1);
          for (const auto& [k, dim] : h.entries()) {
            CHECK(k >= 0);
            CHECK(k <= n);
            CHECK(dim > 0);
          }
        }
      }
    }
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(table({{0, 41}})) == 41);
  CHECK(euler_characteristic(table({{2, 1}})) == 1);
  CHECK(euler_characteristic(CohomologyTable{}) == 0);
  CHECK(euler_characteristic(table({{0, 3}, {1, 5}})) == -2);
}

TEST_CASE("long exact sequence examples") {
  SequenceSpec a{"dual Cayley", 5, table({{0, 1}}), std::nullopt, CohomologyTable{}, 1};
  CHECK(std::get<CohomologyTable>(les_solve(a)) == table({{0, 1}}));

  SequenceSpec b{"twisted Euler", 5, bundle_cohomology(5, "O", 1), bundle_cohomology(5, "Sdual", 1), std::nullopt, 2};
  CHECK(std::get<CohomologyTable>(les_solve(b)) == table({{0, 41}}));
  CHECK(48 - 7 == 41);

  SequenceSpec c{"known", 5, table({{0, 7}}), table({{0, 48}}), table({{0, 41}}), 2};
  CHECK(std::get<CohomologyTable>(les_solve(c)) == table({{0, 41}}));

  SequenceSpec d{"inconsistent", 5, table({{0, 1}}), CohomologyTable{}, std::nullopt, 2};
  try {
    (void)les_solve(d);
    FAIL("expected an inconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconsistency);
  }

  // H^1(sub) -> H^1(mid) may be zero or an isomorphism.
  SequenceSpec u{"open", 5, table({{1, 1}}), table({{1, 1}}), std::nullopt, 2};
  CHECK(std::holds_alternative<Underdetermined>(les_solve(u)));
}

TEST_CASE("solved sequences satisfy the alternating sum identity") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(0, 3), deg(0, 5), count(0, 3);
  int solved = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto random_table = [&] {
      CohomologyTable t;
      for (int i = count(rng); i > 0; --i) t.add(deg(rng), dim(rng));
      return t;
    };
    const int target = trial % 3;
    SequenceSpec s{"random", 5, random_table(), random_table(), random_table(), target};
    if (target == 0) s.sub.reset();
    if (target == 1) s.mid.reset();
    if (target == 2) s.quot.reset();
    try {
      const auto r = les_solve(s);
      if (const auto* t = std::get_if<CohomologyTable>(&r)) {
        ++solved;
        if (target == 0) s.sub = *t;
        if (target == 1) s.mid = *t;
        if (target == 2) s.quot = *t;
        CHECK(euler_characteristic(*s.mid) == euler_characteristic(*s.sub) + euler_characteristic(*s.quot));
        for (const auto& [k, v] : t->entries()) CHECK(v > 0);
      }
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Inconsistency);
    }
  }
  CHECK(solved > 100);
}

TEST_CASE("pipelines on Q5") {
  CHECK(*pipeline_cohomology("G", 1).result == table({{0, 41}}));
  CHECK(*lemma_vanishings(1).result == table({{0, 1}}));
  CHECK(*lemma_vanishings(2).result == table({{2, 1}}));
  CHECK(*lemma_vanishings(3).result == table({{2, 1}}));
  CHECK(*ideal_sections().result == table({{0, 1}}));
}

TEST_CASE("the quotient bundle has the expected Euler characteristics") {
  for (int t = -6; t <= 4; ++t) {
    const auto run = pipeline_cohomology("G", t);
    if (!run.result) continue;
    CHECK(euler_characteristic(*run.result) ==
          euler_characteristic(bundle_cohomology(5, "Sdual", t)) - euler_characteristic(bundle_cohomology(5, "O", t)));
  }
}

TEST_CASE("every shipped sequence is consistent") {
  const auto seqs = shipped_sequences();
  CHECK(seqs.size() >= 10);
  for (const auto& s : seqs) {
    REQUIRE(s.sub);
    REQUIRE(s.mid);
    REQUIRE(s.quot);
    CHECK(euler_characteristic(*s.mid) == euler_characteristic(*s.sub) + euler_characteristic(*s.quot));
  }
}
