#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "roofs/config.hpp"
#include "roofs/error.hpp"
#include "roofs/roof.hpp"

#include <random>

using namespace roofs;
using namespace roofs::roof;
using ring::GradedClass;

namespace {

const RoofConfig& g2() {
  static const auto cfg = config::load_shipped("g2dagger");
  return cfg.roof;
}

const RoofConfig& d4() {
  static const auto cfg = config::load_shipped("d4");
  return cfg.roof;
}

// pi_*(xi^(r-1+j)) = s_j with s_j = sum_i (-1)^(i+1) g_i s_(j-i), straight from the relation.
GradedClass segre(const RoofSide& side, int j) {
  const auto& base = side.base();
  if (j < 0) return GradedClass(base, j);
  std::vector<GradedClass> s{GradedClass::one(base)};
  for (int m = 1; m <= j; ++m) {
    GradedClass next(base, m);
    for (int i = 1; i <= std::min(m, side.rank()); ++i) {
      const auto term = side.g(i) * s[static_cast<std::size_t>(m - i)];
      next = (i % 2 == 1) ? next + term : next - term;
    }
    s.push_back(next);
  }
  return s.back();
}

// Integral over the divisor of xi^a beta * xi^b gamma, i.e. over X with one more xi.
Integer oracle_pair(const RoofSide& side, const MonomialSpec& x, const MonomialSpec& y) {
  const auto& base = side.base();
  const int m = x.xi_power + y.xi_power + 1;
  const auto beta = GradedClass::basis(base, x.base_label) * GradedClass::basis(base, y.base_label);
  return to_integer(ring::integrate(segre(side, m - side.rank() + 1) * beta));
}

Integer oracle_form(const RoofSide& side, const std::vector<MonomialSpec>& basis, const IntVector& u,
                    const IntVector& v) {
  Integer total = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) total += u[i] * v[j] * oracle_pair(side, basis[i], basis[j]);
  return total;
}

std::vector<Integer> brute_residues(const IntVector& j, const IntVector& jt, const Integer& d) {
  std::vector<Integer> out;
  for (Integer k = 0; k < d; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i)
      if ((j[i] - k * jt[i]) % d != 0) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("Grothendieck relations of the shipped roofs") {
  CHECK(g2().side()->relation_string() == "xi^3 - 5*L*xi^2 + 9*L^2*xi - 12*Pi");
  CHECK(g2().tilde()->relation_string() == "xi^3 - 5*Lt*xi^2 + 9*Lt^2*xi - 12*Pit");
  CHECK(d4().side()->relation_string() ==
        "xi^4 - 6*L*xi^3 + 14*L^2*xi^2 - 14*Pi1*xi - 16*Pi2*xi + 12*Pi1*L");
  CHECK(g2().side()->total_dimension() == 7);
  CHECK(d4().side()->total_dimension() == 9);
}

TEST_CASE("normal form reduction and pushforward") {
  const auto& side = g2().side();
  const auto xi = BundleClass::xi(side);
  CHECK(power(xi, 3).to_string() == "5*L*xi^2 - 9*L^2*xi + 12*Pi");
  CHECK(pushforward_to_base(power(xi, 3)).to_string() == "5*L");
  CHECK(pushforward_to_base(power(xi, 2)).to_string() == "1");
  CHECK(pushforward_to_base(xi).is_zero());
  for (int j = 0; j <= 5; ++j) CHECK(pushforward_to_base(power(xi, 2 + j)) == segre(*side, j));
}

TEST_CASE("bundle ring products are associative") {
  for (const auto* cfg : {&g2(), &d4()}) {
    const auto& side = cfg->side();
    const auto n = side->bundle_size();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = BundleClass::basis(side, pick(rng)), b = BundleClass::basis(side, pick(rng)),
                 c = BundleClass::basis(side, pick(rng));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("middle Gram matrices agree with the Segre oracle") {
  for (const auto* cfg : {&g2(), &d4()})
    for (bool tilde : {false, true}) {
      const auto& lat = cfg->lattice(tilde);
      for (std::size_t i = 0; i < lat.rank(); ++i)
        for (std::size_t j = 0; j < lat.rank(); ++j)
          CHECK(lat.gram()[i][j] == oracle_pair(*lat.side(), lat.specs()[i], lat.specs()[j]));
    }
  const auto& lat = g2().lattice();
  CHECK(lat.gram() == lattice::IntegerMatrix{{0, 1, 5}, {1, 10, 32}, {5, 32, 82}});
}

TEST_CASE("pairing examples") {
  const auto& side = g2().side();
  CHECK(pairing_on_M(BundleClass::monomial(side, 0, "Pi"), BundleClass::monomial(side, 1, "L^2")) == 1);
  CHECK(pairing_on_M(BundleClass::monomial(side, 2, "L"), BundleClass::monomial(side, 2, "L")) == 82);
  const auto& s4 = d4().side();
  CHECK(pairing_on_M(BundleClass::monomial(s4, 2, "L^2"), BundleClass::monomial(s4, 2, "L^2")) == 44);
  try {
    (void)pairing_on_M(BundleClass::monomial(side, 0, "Pi"), BundleClass::monomial(side, 0, "L"));
    FAIL("expected a degree error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degree);
  }
}

TEST_CASE("determinants") {
  CHECK(g2().lattice().determinant() == -12);
  CHECK(abs(d4().lattice().determinant()) == 12);
}

TEST_CASE("locus classes are primitive, orthogonal to pullbacks and positively polarized") {
  for (const auto* cfg : {&g2(), &d4()})
    for (bool tilde : {false, true}) {
      const auto& lat = cfg->lattice(tilde);
      const auto& side = *lat.side();
      const auto loc = locus_pushforward_class(lat);
      CHECK(lattice::is_primitive(loc.coordinates));
      for (auto idx : lat.pullback_indices()) {
        IntVector e(lat.rank(), 0);
        e[idx] = 1;
        CHECK(oracle_form(side, lat.specs(), loc.coordinates, e) == 0);
      }
      const auto polar = BundleClass::monomial(lat.side(), side.rank() - 1, side.base()->element(1).label);
      CHECK(pairing_on_M(loc.cls, polar) == 12);
      CHECK(loc.polarization_pairing == 12);
      const Integer sign = side.rank() % 2 == 1 ? 1 : -1;
      CHECK(oracle_form(side, lat.specs(), loc.coordinates, loc.coordinates) == sign * cy_degree(side));
    }
  CHECK(locus_pushforward_class(g2().lattice()).coordinates == IntVector{18, -5, 1});
  CHECK(locus_pushforward_class(d4().lattice()).coordinates == IntVector{30, -14, -14, 6, -1});
}

TEST_CASE("zero locus degree") {
  CHECK(cy_degree(*g2().side()) == 12);
  CHECK(cy_degree(*d4().side()) == 12);
  // A section of O(t) on Q5 cuts a hypersurface of degree 2t.
  auto q5 = ring::make_quadric_ring(5);
  const auto L = GradedClass::hyperplane(q5);
  for (int t = 1; t <= 5; ++t) {
    const auto side = build_side_from_chern("line", q5, ring::ChernVector({L * Rational(t)}));
    CHECK(side.rank() == 1);
    CHECK(cy_degree(side) == 2 * t);
  }
  const auto side = build_side_from_chern("line", q5, ring::ChernVector({L * Rational(2)}));
  CHECK(side.relation_string() == "xi - 2*L");
}

TEST_CASE("side switch") {
  const auto& sw = g2().forward();
  const auto& from = sw.from();
  const auto& to = sw.to();
  CHECK(sw.apply(BundleClass::xi(from)) == BundleClass::xi(to));
  CHECK(sw.apply(BundleClass::monomial(from, 0, "L")) ==
        BundleClass::xi(to) - BundleClass::monomial(to, 0, "Lt"));
  CHECK(sw.is_ring_isomorphism());
  CHECK(switch_side(g2(), locus_pushforward_class(g2().lattice()).cls).to_string() ==
        "7*Lt*xi^2 - 23*Lt^2*xi + 42*Pit");
}

TEST_CASE("switching twice is the identity") {
  for (const auto* cfg : {&g2(), &d4()}) {
    const auto& side = cfg->side();
    for (std::size_t i = 0; i < side->bundle_size(); ++i) {
      const auto m = BundleClass::basis(side, i);
      CHECK(cfg->backward().apply_rational(cfg->forward().apply_rational(m)) == m);
    }
  }
}

TEST_CASE("the switch is multiplicative on the shipped roofs") {
  for (const auto* cfg : {&g2(), &d4()}) {
    const auto& sw = cfg->forward();
    const auto& side = sw.from();
    for (std::size_t i = 0; i < side->bundle_size(); ++i)
      for (std::size_t j = 0; j < side->bundle_size(); ++j) {
        const auto a = BundleClass::basis(side, i), b = BundleClass::basis(side, j);
        CHECK(sw.apply_rational(a * b) == sw.apply_rational(a) * sw.apply_rational(b));
      }
  }
}

TEST_CASE("residue scan matches brute force") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-40, 40), mod(2, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const Integer d = mod(rng);
    IntVector jt(4), j(4);
    for (auto& x : jt) x = coord(rng);
    // Plant a residue half of the time.
    const Integer k = coord(rng);
    for (std::size_t i = 0; i < 4; ++i) j[i] = trial % 2 ? k * jt[i] + d * coord(rng) : Integer(coord(rng));
    CHECK(residue_scan(j, jt, d) == brute_residues(j, jt, d));
  }
}

TEST_CASE("discriminant residues of the shipped roofs") {
  const auto g = lemma_seven_residues(g2());
  CHECK(g.modulus == 12);
  CHECK(g.residues == std::vector<Integer>{7});
  CHECK(g.residues == brute_residues(g.switched, g.tilde_printed, g.modulus));
  CHECK(g.sign_orbit == std::vector<Integer>{5, 7});
  CHECK(g.iso_obstructed);

  const auto h = lemma_seven_residues(d4());
  CHECK(h.residues == std::vector<Integer>{5});
  CHECK(h.residues == brute_residues(h.switched, h.tilde_printed, h.modulus));
  CHECK(h.sign_orbit == std::vector<Integer>{5, 7});
  CHECK(h.iso_obstructed);

  for (const auto* rep : {&g, &h}) {
    CHECK(rep->witnesses.size() == 2 * rep->residues.size());
    for (const auto& w : rep->witnesses) {
      IntVector expect;
      for (std::size_t i = 0; i < rep->switched.size(); ++i)
        expect.push_back((rep->switched[i] - w.lift * rep->tilde_printed[i]) / rep->modulus);
      CHECK(w.coordinates == expect);
      CHECK(w.cls.is_integral());
    }
  }
  CHECK(g.witnesses[0].lift == 7);
  CHECK(g.witnesses[0].cls.to_string() == "Lt^2*xi - 7*Pit");
  CHECK(h.witnesses[1].lift == -7);
  CHECK(h.witnesses[1].cls.to_string() == "-Lt^2*xi^2 + 5*Pit1*xi + 4*Pit2*xi - 14*Pit1*Lt");
}

TEST_CASE("polarized sign law") {
  CHECK(polarized_sign_check(g2(), false) == 12);
  CHECK(polarized_sign_check(g2(), true) == 12);
  CHECK(polarized_sign_check(d4(), false) == -12);
  CHECK(polarized_sign_check(d4(), true) == -12);
}

TEST_CASE("Cayley rank decomposition") {
  CHECK(cayley_rank_decomposition(g2(), 6) == std::vector<std::size_t>{1, 1, 22});
  CHECK(cayley_rank_decomposition(d4(), 8) == std::vector<std::size_t>{1, 2, 1, 22});
  CHECK(cayley_rank_decomposition(g2(), 0) == std::vector<std::size_t>{1, 0, 0});
  CHECK(cayley_rank_decomposition(g2(), 5) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(cayley_rank_decomposition(g2(), 13), Error);
  CHECK_THROWS_AS(cayley_rank_decomposition(g2(), -1), Error);
}

TEST_CASE("swapped configuration") {
  const auto s = g2().swapped();
  CHECK(s.side()->name() == "Q5~");
  CHECK(lemma_seven_residues(s).sign_orbit == std::vector<Integer>{5, 7});
}

TEST_CASE("degenerate middle bases are rejected") {
  const auto side = g2().side();
  try {
    (void)middle_lattice(side, {{0, "Pi"}, {0, "Pi"}, {2, "L"}});
    FAIL("expected a degenerate basis error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateBasis);
  }
}

TEST_CASE("toy roof on P4") {
  const auto cfg = config::load_file(CONFIG_DIR "/toy_p4.json");
  const auto& roof = cfg.roof;
  CHECK_FALSE(roof.forward().is_ring_isomorphism());
  const auto rep = lemma_seven_residues(roof);
  CHECK(rep.residues == brute_residues(rep.switched, rep.tilde_printed, rep.modulus));
  CHECK(rep.residues == std::vector<Integer>{1});
  CHECK_FALSE(rep.iso_obstructed);
}
