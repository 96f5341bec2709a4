#pragma once

#include "roofs/numeric.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace roofs::ring {

/// A basis element of a graded ring. Degrees are codimensions.
struct BasisElement {
  std::string label;
  int degree = 0;
};

/// A named ring generator, stored as coefficients over the basis.
struct Generator {
  std::string name;
  int degree = 0;
  std::vector<Rational> coefficients;
};

/// Finite graded commutative ring given by an integral basis and a fully
/// materialized multiplication table.
///
/// Basis element 0 must be the unit. Exactly one basis element sits in top
/// degree; it is the point class. Construction validates gradedness,
/// commutativity, the unit, and associativity on every basis triple.
///
/// Generators are optional: when present, the first one is the hyperplane
/// class, and every basis element must be a rational polynomial in them.
class RingPresentation {
 public:
  RingPresentation(std::string name, int dimension, std::vector<BasisElement> basis,
                   std::vector<std::vector<IntVector>> table, std::vector<Generator> generators = {},
                   int fano_index = 0);

  const std::string& name() const noexcept { return name_; }
  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  std::size_t point_index() const noexcept { return point_; }
  int fano_index() const noexcept { return fano_index_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws Config error on an unknown label.
  std::size_t index_of(std::string_view label) const;

  const IntVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::vector<std::size_t> indices_of_degree(int degree) const;
  /// Betti number in codimension `degree`.
  std::size_t rank_in_degree(int degree) const { return indices_of_degree(degree).size(); }

  const std::vector<Generator>& generators() const noexcept { return generators_; }

 private:
  void validate();

  std::string name_;
  int dimension_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<IntVector>> table_;
  std::vector<Generator> generators_;
  int fano_index_;
  std::size_t point_ = 0;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

struct QuadricLabels {
  std::string hyperplane = "L";
  std::string plane = "Pi";
};

/// Integral cohomology ring of the smooth quadric of dimension `dim`.
///
/// Odd dimension 2m+1: basis 1, L, ..., L^m, Pi, Pi*L, ..., Pi*L^m with
/// L^(m+1) = 2 Pi and Pi*L^m the point. Even dimension 2m: basis
/// 1, L, ..., L^(m-1), Pi1, Pi2, Pi1*L, ..., Pi1*L^m with L^m = Pi1 + Pi2,
/// Pi1*L = Pi2*L, and Pi_i*Pi_j = point exactly when (i == j) matches the
/// parity of m being even. For dim 6 this is L^3 = Pi1 + Pi2, Pi1^2 = Pi2^2 = 0,
/// Pi1*Pi2 = point.
///
/// Generators: L for odd dimension; L and Pi1 - Pi2 for even dimension.
RingPtr make_quadric_ring(int dim, const QuadricLabels& labels = {});

/// Cohomology ring of P^dim with hyperplane class `hyperplane`.
RingPtr make_projective_space_ring(int dim, const std::string& hyperplane = "h");

/// Homogeneous class with exact rational coefficients.
class GradedClass {
 public:
  /// Zero class of the given degree. Any integer degree is allowed; degrees
  /// outside [0, dimension] only hold the zero class.
  GradedClass(RingPtr ring, int degree);
  GradedClass(RingPtr ring, int degree, std::vector<Rational> coefficients);

  static GradedClass basis(const RingPtr& ring, std::size_t index);
  static GradedClass basis(const RingPtr& ring, std::string_view label);
  static GradedClass one(const RingPtr& ring) { return basis(ring, 0); }
  static GradedClass generator(const RingPtr& ring, std::size_t index);
  static GradedClass hyperplane(const RingPtr& ring) { return generator(ring, 0); }
  /// Sum of (label, coefficient) terms; all labels must share one degree.
  static GradedClass from_terms(const RingPtr& ring,
                                const std::vector<std::pair<std::string, Integer>>& terms);

  const RingPtr& ring() const noexcept { return ring_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(std::size_t index) const { return coeffs_.at(index); }
  Rational coefficient(std::string_view label) const;

  bool is_zero() const;
  bool is_integral() const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rational& scalar);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }

  bool operator==(const GradedClass& other) const;

  /// e.g. "14*Pi1 + 16*Pi2", "0".
  std::string to_string() const;

 private:
  void check_compatible(const GradedClass& other) const;

  RingPtr ring_;
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Bilinear extension of the multiplication table. Products beyond top degree
/// give the zero class of the summed degree.
GradedClass multiply(const GradedClass& a, const GradedClass& b);
inline GradedClass operator*(const GradedClass& a, const GradedClass& b) { return multiply(a, b); }
GradedClass power(const GradedClass& a, int exponent);

/// Coefficient of the point class in top degree, zero otherwise.
Rational integrate(const GradedClass& a);

/// Formats `coefficient * label` terms in basis order.
std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms);

/// Total Chern class c_1, ..., c_r of a rank-r bundle; component i has degree i.
class ChernVector {
 public:
  explicit ChernVector(std::vector<GradedClass> components);

  int rank() const noexcept { return static_cast<int>(components_.size()); }
  /// 1-based: c(1) is the first Chern class.
  const GradedClass& c(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<GradedClass>& components() const noexcept { return components_; }

  bool operator==(const ChernVector& other) const { return components_ == other.components_; }

 private:
  std::vector<GradedClass> components_;
};

/// c_k(E(t)) = sum_{i<=k} binom(r-i, k-i) t^(k-i) h^(k-i) c_i(E).
ChernVector chern_twist(const ChernVector& c, const Integer& t, const GradedClass& hyperplane);

/// True iff c_1 equals fano_index * hyperplane on `base`.
bool validate_mukai_pair(const ChernVector& c, const RingPresentation& base);

}  // namespace roofs::ring
