#pragma once

#include "roofs/graded_ring.hpp"
#include "roofs/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace roofs::roof {

using ring::ChernVector;
using ring::GradedClass;
using ring::RingPtr;

// One projective-bundle structure X = P(E^v) -> B, presented through its
// Grothendieck relation
//   xi^r = sum_{i=1..r} (-1)^(i+1) g_i xi^(r-i).
class RoofSide {
 public:
  RoofSide(std::string name, RingPtr base, std::vector<GradedClass> groth_coeffs,
           std::string xi_label = "xi");

  const std::string& name() const noexcept { return name_; }
  const RingPtr& base() const noexcept { return base_; }
  int rank() const noexcept { return static_cast<int>(coeffs_.size()); }
  int base_dimension() const { return base_->dimension(); }
  int total_dimension() const { return base_dimension() + rank() - 1; }
  // 1-based, g(1) .. g(r).
  const GradedClass& g(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<GradedClass>& groth_coeffs() const noexcept { return coeffs_; }
  const std::string& xi_label() const noexcept { return xi_; }

  // Size of the normal-form basis xi^i * b_j, i < r. Index is i * base_size + j.
  std::size_t bundle_size() const { return static_cast<std::size_t>(rank()) * base_->size(); }
  std::size_t index(int xi_power, std::size_t base_index) const {
    return static_cast<std::size_t>(xi_power) * base_->size() + base_index;
  }
  int xi_power_of(std::size_t idx) const { return static_cast<int>(idx / base_->size()); }
  std::size_t base_index_of(std::size_t idx) const { return idx % base_->size(); }
  int degree_of(std::size_t idx) const;
  std::string monomial_label(std::size_t idx) const;
  std::string monomial_label(int xi_power, const std::string& base_label) const;

  // "xi^3 - 5*L*xi^2 + 9*L^2*xi - 12*Pi"
  std::string relation_string() const;

  // Bundle ring as a validated presentation (basis labels from monomial_label).
  RingPtr bundle_ring() const;

 private:
  std::string name_;
  RingPtr base_;
  std::vector<GradedClass> coeffs_;
  std::string xi_;
};

using SidePtr = std::shared_ptr<const RoofSide>;

// A homogeneous class in normal form sum_{i<r} xi^i * beta_i, stored as
// coordinates over the monomial basis of its side.
class BundleClass {
 public:
  BundleClass(SidePtr side, int degree);
  BundleClass(SidePtr side, int degree, std::vector<Rational> coordinates);

  static BundleClass xi(const SidePtr& side);
  static BundleClass pullback(const SidePtr& side, const GradedClass& beta);
  static BundleClass monomial(const SidePtr& side, int xi_power, std::string_view base_label);
  static BundleClass basis(const SidePtr& side, std::size_t idx);
  static BundleClass from_terms(const SidePtr& side, int degree,
                                const std::vector<std::pair<std::string, Integer>>& terms);

  const SidePtr& side() const noexcept { return side_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Rational>& coordinates() const noexcept { return coords_; }
  const Rational& coordinate(std::size_t idx) const { return coords_.at(idx); }
  // The xi^i part as a base class.
  GradedClass part(int xi_power) const;

  bool is_zero() const;
  bool is_integral() const;

  BundleClass operator-() const;
  BundleClass& operator+=(const BundleClass& o);
  BundleClass& operator-=(const BundleClass& o);
  BundleClass& operator*=(const Rational& s);
  friend BundleClass operator+(BundleClass a, const BundleClass& b) { return a += b; }
  friend BundleClass operator-(BundleClass a, const BundleClass& b) { return a -= b; }
  friend BundleClass operator*(BundleClass a, const Rational& s) { return a *= s; }
  friend BundleClass operator*(const Rational& s, BundleClass a) { return a *= s; }
  bool operator==(const BundleClass& o) const;

  // Terms ordered by descending xi power: "L*xi^2 - 5*L^2*xi + 18*Pi".
  std::string to_string() const;

 private:
  SidePtr side_;
  int degree_;
  std::vector<Rational> coords_;
};

// Brings sum_i xi^i * coeffs[i] (any length) into normal form.
BundleClass reduce(const SidePtr& side, const std::vector<GradedClass>& xi_coefficients);

BundleClass multiply(const BundleClass& a, const BundleClass& b);
inline BundleClass operator*(const BundleClass& a, const BundleClass& b) { return multiply(a, b); }
BundleClass power(const BundleClass& a, int exponent);

// pi_* : coefficient of xi^(r-1).
GradedClass pushforward_to_base(const BundleClass& a);
// Integral over X of a, zero outside top degree.
Rational integrate(const BundleClass& a);
// Integral over X of a*b*xi.
Integer pairing_on_M(const BundleClass& a, const BundleClass& b);

struct MonomialSpec {
  int xi_power = 0;
  std::string base_label;
};

class MiddleLattice {
 public:
  MiddleLattice(SidePtr side, std::vector<MonomialSpec> basis);

  const SidePtr& side() const noexcept { return side_; }
  int degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<MonomialSpec>& specs() const noexcept { return specs_; }
  const std::vector<BundleClass>& basis() const noexcept { return basis_; }
  std::vector<std::string> labels() const;
  const lattice::IntegerMatrix& gram() const noexcept { return gram_; }
  const Integer& determinant() const noexcept { return det_; }

  // Integer coordinates of a class in this basis. Classes outside the rational
  // span raise inconsistency; non-integral coordinates raise integrality-violation.
  IntVector coordinates(const BundleClass& a) const;
  std::vector<Rational> rational_coordinates(const BundleClass& a) const;
  BundleClass to_class(const IntVector& coords) const;
  // Indices of basis monomials with xi power <= r - 2.
  std::vector<std::size_t> pullback_indices() const;

 private:
  SidePtr side_;
  std::vector<MonomialSpec> specs_;
  std::vector<BundleClass> basis_;
  int degree_ = 0;
  lattice::IntegerMatrix gram_;
  Integer det_;
};

MiddleLattice middle_lattice(const SidePtr& side, const std::vector<MonomialSpec>& basis);

struct LocusClass {
  IntVector coordinates;           // in the middle basis
  BundleClass cls;
  Integer polarization_pairing;    // with xi^(r-1) * L, positive after normalization
  std::vector<Integer> orthogonality;  // pairings with the pullback monomials
};

LocusClass locus_pushforward_class(const MiddleLattice& lattice);

// Integral over B of g_r * L^(n-r).
Integer cy_degree(const RoofSide& side);

RoofSide build_side_from_chern(std::string name, const RingPtr& base, const ChernVector& c,
                               std::string xi_label = "xi");

// Ring map between the two rational bundle rings determined by xi -> xi and
// L -> k*xi - L~. Images of further base generators are solved from the
// requirement that multiplication by xi and by L is respected.
class SideSwitch {
 public:
  SideSwitch(SidePtr from, SidePtr to, Integer k);

  const SidePtr& from() const noexcept { return from_; }
  const SidePtr& to() const noexcept { return to_; }
  const Integer& k() const noexcept { return k_; }
  // Image of every normal-form monomial of `from`, rational coefficients.
  const std::vector<BundleClass>& images() const noexcept { return images_; }
  // Images of the base generators of `from` (L first).
  const std::vector<BundleClass>& generator_images() const noexcept { return generator_images_; }
  // Whether the map respects every product of basis monomials.
  bool is_ring_isomorphism() const noexcept { return multiplicative_; }

  BundleClass apply_rational(const BundleClass& a) const;
  // As apply_rational, with an integrality-violation error on fractional output.
  BundleClass apply(const BundleClass& a) const;

 private:
  SidePtr from_, to_;
  Integer k_;
  std::vector<BundleClass> images_;
  std::vector<BundleClass> generator_images_;
  bool multiplicative_ = false;
};

struct SideData {
  SidePtr side;
  std::vector<MonomialSpec> middle_basis;
  std::optional<IntVector> printed_locus;  // representative used for witnesses, up to sign
};

class RoofConfig {
 public:
  RoofConfig(std::string name, SideData side, SideData tilde, Integer k, Integer polarization_degree);

  const std::string& name() const noexcept { return name_; }
  const SidePtr& side() const noexcept { return side_.side; }
  const SidePtr& tilde() const noexcept { return tilde_.side; }
  const SideData& side_data(bool tilde_side) const { return tilde_side ? tilde_ : side_; }
  int n() const { return side()->base_dimension(); }
  int rank() const { return side()->rank(); }
  const Integer& k() const noexcept { return k_; }
  const Integer& polarization_degree() const noexcept { return degree_; }
  const MiddleLattice& lattice(bool tilde_side = false) const { return tilde_side ? *tilde_lattice_ : *lattice_; }
  const SideSwitch& forward() const { return *forward_; }   // side -> tilde
  const SideSwitch& backward() const { return *backward_; } // tilde -> side

  // The config with its two sides exchanged.
  RoofConfig swapped() const;

 private:
  std::string name_;
  SideData side_, tilde_;
  Integer k_, degree_;
  std::shared_ptr<const MiddleLattice> lattice_, tilde_lattice_;
  std::shared_ptr<const SideSwitch> forward_, backward_;
};

BundleClass switch_side(const RoofConfig& config, const BundleClass& a);

struct ResidueWitness {
  Integer lift;            // k as an integer, in (-d, d)
  IntVector coordinates;   // (j - k j~) / d in the tilde middle basis
  BundleClass cls;
};

struct ResidueReport {
  Integer modulus;
  IntVector locus, tilde_locus;          // normalized locus classes, own bases
  IntVector printed, tilde_printed;      // representatives used for the witnesses
  IntVector switched;                    // printed side rep, switched, tilde coordinates
  std::vector<Integer> residues;         // sorted, in [0, d)
  std::vector<Integer> sign_orbit;       // residues and their negatives, sorted
  bool iso_obstructed = false;
  std::vector<ResidueWitness> witnesses; // for each residue: lifts k and k - d
};

// Residues k mod d with (j - k j~)/d integral.
std::vector<Integer> residue_scan(const IntVector& j, const IntVector& jt, const Integer& d);

ResidueReport lemma_seven_residues(const RoofConfig& config);

Integer polarized_sign_check(const RoofConfig& config, bool tilde_side);

// Ranks of H^k(B), H^(k-2)(B), ..., H^(k-2(r-2))(B), H^(k-2r+2)(Y), where k is
// the topological degree and Y is a K3 surface.
std::vector<std::size_t> cayley_rank_decomposition(const RoofConfig& config, int k);

}  // namespace roofs::roof
