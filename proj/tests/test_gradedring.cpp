#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roofs/error.hpp"
#include "roofs/graded_ring.hpp"

#include <random>

using namespace roofs;
using namespace roofs::ring;

namespace {

GradedClass cls(const RingPtr& r, std::string_view label) { return GradedClass::basis(r, label); }

// Elementary symmetric polynomials e_1..e_r of the integers xs.
std::vector<Integer> elementary(const std::vector<Integer>& xs) {
  std::vector<Integer> e(xs.size() + 1, 0);
  e[0] = 1;
  for (const auto& x : xs)
    for (std::size_t k = xs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  return e;
}

// Chern classes of O(a_1) + ... + O(a_r) on P^n.
ChernVector split_bundle(const RingPtr& pn, const std::vector<Integer>& degrees) {
  const auto e = elementary(degrees);
  const auto h = GradedClass::hyperplane(pn);
  std::vector<GradedClass> comps;
  for (std::size_t k = 1; k <= degrees.size(); ++k) comps.push_back(power(h, static_cast<int>(k)) * Rational(e[k]));
  return ChernVector(comps);
}

}  // namespace

TEST_CASE("odd quadric relations") {
  auto q5 = make_quadric_ring(5);
  const auto L = GradedClass::hyperplane(q5);
  CHECK(q5->size() == 6);
  CHECK(power(L, 3) == cls(q5, "Pi") * Rational(2));
  CHECK(integrate(power(L, 5)) == 2);
  CHECK(integrate(cls(q5, "Pi") * power(L, 2)) == 1);
  CHECK((cls(q5, "Pi") * cls(q5, "Pi")).is_zero());
  CHECK(integrate(power(L, 3)) == 0);
  CHECK(power(L, 3).to_string() == "2*Pi");
}

TEST_CASE("even quadric relations for dimension six") {
  auto q6 = make_quadric_ring(6);
  const auto L = GradedClass::hyperplane(q6);
  const auto p1 = cls(q6, "Pi1"), p2 = cls(q6, "Pi2");
  CHECK(power(L, 3) == p1 + p2);
  CHECK(p1 * L == p2 * L);
  CHECK(integrate(p1 * p1) == 0);
  CHECK(integrate(p2 * p2) == 0);
  CHECK(integrate(p1 * p2) == 1);
  CHECK(integrate(power(L, 6)) == 2);
  CHECK(q6->rank_in_degree(3) == 2);
}

TEST_CASE("middle classes of even quadrics follow the ruling parity") {
  // Planes of one ruling on Q4 meet in a point, on Q6 they are disjoint, and so on.
  for (int dim = 4; dim <= 12; dim += 2) {
    auto q = make_quadric_ring(dim);
    const auto p1 = cls(q, "Pi1"), p2 = cls(q, "Pi2");
    const bool same_meets = (dim / 2) % 2 == 0;
    CHECK(integrate(p1 * p1) == (same_meets ? 1 : 0));
    CHECK(integrate(p2 * p2) == (same_meets ? 1 : 0));
    CHECK(integrate(p1 * p2) == (same_meets ? 0 : 1));
  }
}

TEST_CASE("quadrics have degree two and the expected Betti numbers") {
  for (int dim = 2; dim <= 11; ++dim) {
    auto q = make_quadric_ring(dim);
    CHECK(integrate(power(GradedClass::hyperplane(q), dim)) == 2);
    for (int d = 0; d <= dim; ++d) {
      const std::size_t expected = (dim % 2 == 0 && 2 * d == dim) ? 2 : 1;
      CHECK(q->rank_in_degree(d) == expected);
    }
  }
  CHECK_THROWS_AS(make_quadric_ring(1), Error);
}

TEST_CASE("projective space") {
  auto p4 = make_projective_space_ring(4);
  const auto h = GradedClass::hyperplane(p4);
  CHECK(integrate(power(h, 4)) == 1);
  CHECK(power(h, 5).is_zero());
  CHECK(p4->size() == 5);
}

TEST_CASE("multiplication is associative and commutative on basis triples") {
  std::vector<RingPtr> rings;
  for (int d = 2; d <= 10; ++d) rings.push_back(make_quadric_ring(d));
  rings.push_back(make_projective_space_ring(6));
  for (const auto& r : rings) {
    for (std::size_t i = 0; i < r->size(); ++i)
      for (std::size_t j = 0; j < r->size(); ++j) {
        const auto a = GradedClass::basis(r, i), b = GradedClass::basis(r, j);
        CHECK(a * b == b * a);
        for (std::size_t k = 0; k < r->size(); ++k) {
          const auto c = GradedClass::basis(r, k);
          CHECK((a * b) * c == a * (b * c));
        }
      }
  }
}

TEST_CASE("integral classes multiply to integral classes") {
  auto q6 = make_quadric_ring(6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int da = trial % 4, db = (trial / 4) % 4;
    auto random_class = [&](int deg) {
      std::vector<std::pair<std::string, Integer>> terms;
      for (auto idx : q6->indices_of_degree(deg)) terms.emplace_back(q6->element(idx).label, coef(rng));
      return GradedClass::from_terms(q6, terms);
    };
    const auto p = random_class(da) * random_class(db);
    CHECK(p.is_integral());
    CHECK(p.degree() == da + db);
  }
}

TEST_CASE("mixing rings is rejected") {
  auto q5 = make_quadric_ring(5), q6 = make_quadric_ring(6);
  CHECK_THROWS_AS(GradedClass::hyperplane(q5) + GradedClass::hyperplane(q6), Error);
  try {
    (void)(GradedClass::hyperplane(q5) * GradedClass::hyperplane(q6));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleRing);
  }
}

TEST_CASE("twisting the spinor-type bundle on Q5") {
  auto q5 = make_quadric_ring(5);
  const auto L = GradedClass::hyperplane(q5);
  ChernVector c({L * Rational(2), power(L, 2) * Rational(2), cls(q5, "Pi") * Rational(2)});
  const auto t = chern_twist(c, 1, L);
  CHECK(t.c(1).to_string() == "5*L");
  CHECK(t.c(2).to_string() == "9*L^2");
  CHECK(t.c(3).to_string() == "12*Pi");
}

TEST_CASE("twisting split bundles shifts every degree") {
  auto p6 = make_projective_space_ring(6);
  const auto h = GradedClass::hyperplane(p6);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(-4, 4), rank(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> ds(static_cast<std::size_t>(rank(rng)));
    for (auto& d : ds) d = deg(rng);
    const Integer t = deg(rng);
    std::vector<Integer> shifted;
    for (const auto& d : ds) shifted.push_back(d + t);
    CHECK(chern_twist(split_bundle(p6, ds), t, h) == split_bundle(p6, shifted));
  }
}

TEST_CASE("twists compose") {
  auto q6 = make_quadric_ring(6);
  const auto L = GradedClass::hyperplane(q6);
  ChernVector c({L * Rational(3), power(L, 2) * Rational(5), cls(q6, "Pi1") * Rational(2) + cls(q6, "Pi2"),
                 cls(q6, "Pi1") * L * Rational(4)});
  for (int s = -3; s <= 3; ++s)
    for (int t = -3; t <= 3; ++t)
      CHECK(chern_twist(chern_twist(c, s, L), t, L) == chern_twist(c, s + t, L));
  CHECK(chern_twist(c, 0, L) == c);
}

TEST_CASE("Mukai pair condition") {
  auto q5 = make_quadric_ring(5);
  const auto L = GradedClass::hyperplane(q5);
  CHECK(q5->fano_index() == 5);
  ChernVector twisted({L * Rational(5), power(L, 2) * Rational(9), cls(q5, "Pi") * Rational(12)});
  ChernVector untwisted({L * Rational(2), power(L, 2) * Rational(2), cls(q5, "Pi") * Rational(2)});
  CHECK(validate_mukai_pair(twisted, *q5));
  CHECK_FALSE(validate_mukai_pair(untwisted, *q5));
}
