#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roofs/config.hpp"
#include "roofs/error.hpp"
#include "roofs/lattice.hpp"
#include "roofs/linalg.hpp"
#include "roofs/mukai.hpp"

#include <functional>
#include <random>

using namespace roofs;
using namespace roofs::lattice;

namespace {

const IntegerMatrix kG2{{0, 1, 5}, {1, 10, 32}, {5, 32, 82}};
const IntVector kG2Locus{18, -5, 1};

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntegerMatrix m(rows, IntVector(cols));
  for (auto& row : m)
    for (auto& x : row) x = u(rng);
  return m;
}

IntegerMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  auto m = random_matrix(rng, n, n, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  return m;
}

// Cofactor expansion, fine for the small sizes used here.
Integer brute_det(const IntegerMatrix& m) {
  const auto n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntegerMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * brute_det(minor);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Invariant factors as quotients of determinantal divisors.
IntVector oracle_invariants(const IntegerMatrix& m) {
  const auto rows = m.size(), cols = m[0].size();
  IntVector out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntegerMatrix sub;
        for (auto i : r) {
          IntVector row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = roofs::gcd(g, brute_det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

bool is_unimodular(const IntegerMatrix& m) {
  const auto d = brute_det(m);
  return d == 1 || d == -1;
}

linalg::RatMatrix rational(const IntegerMatrix& m) {
  linalg::RatMatrix out;
  for (const auto& row : m) {
    linalg::RatVector r;
    for (const auto& x : row) r.emplace_back(x);
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(identity(3)).invariant_factors() == IntVector{1, 1, 1});
  CHECK(smith_normal_form(kG2).invariant_factors() == IntVector{1, 1, 12});
  CHECK(smith_normal_form({{2, 0}, {0, 4}}).invariant_factors() == IntVector{2, 4});
  CHECK(smith_normal_form({{2, 0}, {0, 3}}).invariant_factors() == IntVector{1, 6});
  const auto s = smith_normal_form({{1, 2}, {2, 4}});
  CHECK(s.rank == 1);
  CHECK(s.invariant_factors() == IntVector{1});
}

TEST_CASE("random Smith decompositions are valid") {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, 5, 5, -20, 20);
    const auto s = smith_normal_form(m);
    CHECK(multiply(multiply(s.U, m), s.V) == s.D);
    CHECK(is_diagonal(s.D));
    CHECK(multiply(s.U, s.U_inverse) == identity(5));
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    const auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    for (const auto& x : f) CHECK(x > 0);
  }
}

TEST_CASE("invariant factors agree with determinantal divisors") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
    const auto m = random_matrix(rng, rows, cols, -6, 6);
    CHECK(smith_normal_form(m).invariant_factors() == oracle_invariants(m));
  }
  // Low-rank input.
  CHECK(smith_normal_form({{2, 4, 6}, {4, 8, 12}, {6, 12, 18}}).invariant_factors() == IntVector{2});
}

TEST_CASE("determinant") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 4, 4, -9, 9);
    CHECK(determinant(m) == brute_det(m));
  }
  CHECK(determinant(kG2) == -12);
}

TEST_CASE("discriminant groups") {
  const auto g = discriminant_group(kG2);
  CHECK(g.factors == IntVector{12});
  CHECK(g.to_string() == "Z/12");
  CHECK(discriminant_group(identity(4)).to_string() == "0");
  CHECK(discriminant_group({{2, 0}, {0, 4}}).to_string() == "Z/2 x Z/4");
  try {
    (void)discriminant_group({{1, 2}, {2, 4}});
    FAIL("expected a degenerate lattice error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateLattice);
  }
}

TEST_CASE("discriminant order and generator orders") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 100) {
    const auto m = random_symmetric(rng, 4, -5, 5);
    const auto det = brute_det(m);
    if (det == 0) continue;
    ++tested;
    const auto g = discriminant_group(m);
    CHECK(g.order() == abs(det));
    REQUIRE(g.generators.size() == g.factors.size());
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
      // A dual vector y corresponds to gram^-1 y; its order is the least m with m gram^-1 y integral.
      linalg::RatVector y;
      for (const auto& x : g.generators[i]) y.emplace_back(x);
      const auto sol = linalg::solve(rational(m), y, 4);
      REQUIRE(sol.status == linalg::SolveStatus::Unique);
      Integer order = 1;
      for (const auto& q : sol.x) {
        const Integer den = boost::multiprecision::denominator(q);
        order = order / roofs::gcd(order, den) * den;
      }
      CHECK(order == g.factors[i]);
    }
  }
}

TEST_CASE("orthogonal kernel of the pullback classes") {
  const auto k = orthogonal_kernel(kG2, {{1, 0, 0}, {0, 1, 0}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == kG2Locus);
  CHECK(orthogonal_kernel(kG2, {}).size() == 3);
}

TEST_CASE("orthogonal kernels are saturated") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gram = random_symmetric(rng, 3, -4, 4);
    const auto sub = random_matrix(rng, 1, 3, -3, 3);
    const auto ker = orthogonal_kernel(gram, sub);
    for (const auto& v : ker) CHECK(bilinear(gram, v, sub[0]) == 0);
    // Every integral solution in a box is an integral combination of the basis.
    linalg::RatMatrix cols(3, linalg::RatVector(ker.size()));
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t i = 0; i < 3; ++i) cols[i][j] = ker[j][i];
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y)
        for (int z = -4; z <= 4; ++z) {
          const IntVector v{x, y, z};
          if (bilinear(gram, v, sub[0]) != 0) continue;
          const auto sol = linalg::solve(cols, {Rational(x), Rational(y), Rational(z)}, ker.size());
          REQUIRE(sol.status == linalg::SolveStatus::Unique);
          for (const auto& q : sol.x) CHECK(is_integer(q));
        }
  }
}

TEST_CASE("isotropic pairs on the hyperbolic plane") {
  const IntegerMatrix gram{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}};
  const auto sol = isotropic_pair_solve(gram, {0, 0, 1}, 5);
  CHECK(sol.orbits.size() == 1);
  CHECK(sol.canonical.a == IntVector{1, 0, 0});
  CHECK(sol.canonical.b == IntVector{0, 1, 0});
  CHECK(canonical_pair({{0, -1, 0}, {-1, 0, 0}}) == sol.canonical);
}

TEST_CASE("isotropic pairs match a brute-force count") {
  for (std::int64_t bound : {6, 12}) {
    std::vector<IntVector> iso;
    for (std::int64_t x = -bound; x <= bound; ++x)
      for (std::int64_t y = -bound; y <= bound; ++y)
        for (std::int64_t z = -bound; z <= bound; ++z) {
          const IntVector v{x, y, z};
          if ((x || y || z) && bilinear(kG2, v, kG2Locus) == 0 && bilinear(kG2, v, v) == 0) iso.push_back(v);
        }
    std::size_t ordered = 0;
    for (const auto& a : iso)
      for (const auto& b : iso)
        if (bilinear(kG2, a, b) == 1) ++ordered;
    const auto sol = isotropic_pair_solve(kG2, kG2Locus, bound);
    CHECK(sol.isotropic_vectors == iso.size());
    CHECK(sol.orbits.size() * 4 == ordered);
    for (const auto& p : sol.orbits) {
      CHECK(bilinear(kG2, p.a, p.a) == 0);
      CHECK(bilinear(kG2, p.b, p.b) == 0);
      CHECK(bilinear(kG2, p.a, p.b) == 1);
      CHECK(bilinear(kG2, p.a, kG2Locus) == 0);
      CHECK(bilinear(kG2, p.b, kG2Locus) == 0);
    }
  }
  const auto sol = isotropic_pair_solve(kG2, kG2Locus, 50);
  CHECK(sol.orbits.size() == 1);
  CHECK(sol.canonical.a == IntVector{1, 0, 0});
  CHECK(sol.canonical.b == IntVector{-5, 1, 0});
}

TEST_CASE("isotropic search failures") {
  try {
    (void)isotropic_pair_solve(identity(3), {0, 0, 1}, 10);
    FAIL("expected the search to be exhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchExhausted);
  }
  try {
    (void)isotropic_pair_solve({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}, {1, 0, 0}, 10);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("Mukai vector of the shipped G2 roof") {
  const auto cfg = config::load_shipped("g2dagger");
  const auto rep = mukai::mukai_vector(cfg.roof);
  CHECK(rep.vector == IntVector{2, 1, -3});
  CHECK(rep.image == IntVector{5, -3, 1});
  CHECK(bilinear(cfg.roof.lattice(true).gram(), rep.image, rep.image) == 0);
  CHECK(rep.image_square == 0);
  CHECK(mukai::mukai_vector(cfg.roof.swapped()).vector == IntVector{2, 1, -3});
}

TEST_CASE("Mukai vectors need a rank-three lattice") {
  const auto cfg = config::load_shipped("d4");
  try {
    (void)mukai::mukai_vector(cfg.roof);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}
