#include "roofs/graded_ring.hpp"

#include "roofs/error.hpp"

#include <algorithm>
#include <set>

namespace roofs::ring {

namespace {

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

IntVector unit_vector(std::size_t n, std::size_t i, const Integer& scale = 1) {
  IntVector v(n, 0);
  v[i] = scale;
  return v;
}

}  // namespace

RingPresentation::RingPresentation(std::string name, int dimension, std::vector<BasisElement> basis,
                                   std::vector<std::vector<IntVector>> table,
                                   std::vector<Generator> generators, int fano_index)
    : name_(std::move(name)),
      dimension_(dimension),
      basis_(std::move(basis)),
      table_(std::move(table)),
      generators_(std::move(generators)),
      fano_index_(fano_index) {
  validate();
}

void RingPresentation::validate() {
  const std::size_t n = basis_.size();
  if (dimension_ < 0) throw Error(ErrorKind::InvalidDimension, name_ + ": negative dimension");
  if (n == 0) throw Error(ErrorKind::Config, name_ + ": empty basis");

  std::set<std::string> labels;
  std::size_t top_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = basis_[i];
    if (!labels.insert(b.label).second)
      throw Error(ErrorKind::Config, name_ + ": duplicate basis label " + b.label);
    if (b.degree < 0 || b.degree > dimension_)
      throw Error(ErrorKind::Config, name_ + ": basis element " + b.label + " out of degree range");
    if (b.degree == dimension_) {
      ++top_count;
      point_ = i;
    }
  }
  if (top_count != 1)
    throw Error(ErrorKind::Config, name_ + ": need exactly one top-degree basis element");
  if (basis_[0].degree != 0) throw Error(ErrorKind::Config, name_ + ": basis[0] must be the unit");

  if (table_.size() != n) throw Error(ErrorKind::Config, name_ + ": table has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw Error(ErrorKind::Config, name_ + ": table has wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = table_[i][j];
      if (p.size() != n) throw Error(ErrorKind::Config, name_ + ": table entry has wrong length");
      const int d = basis_[i].degree + basis_[j].degree;
      for (std::size_t k = 0; k < n; ++k)
        if (p[k] != 0 && basis_[k].degree != d)
          throw Error(ErrorKind::Config, name_ + ": product " + basis_[i].label + "*" +
                                             basis_[j].label + " is not graded");
      if (p != table_[j][i])
        throw Error(ErrorKind::Config, name_ + ": table not commutative at " + basis_[i].label +
                                           ", " + basis_[j].label);
    }
    if (table_[0][i] != unit_vector(n, i))
      throw Error(ErrorKind::Config, name_ + ": basis[0] does not act as the unit");
  }

  // (a*b)*c == a*(b*c) on every triple.
  auto times_basis = [&](const IntVector& v, std::size_t c) {
    IntVector out(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != 0)
        for (std::size_t l = 0; l < n; ++l) out[l] += v[k] * table_[k][c][l];
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        IntVector left = times_basis(table_[a][b], c);
        IntVector right(n, 0);
        const auto& bc = table_[b][c];
        for (std::size_t k = 0; k < n; ++k)
          if (bc[k] != 0)
            for (std::size_t l = 0; l < n; ++l) right[l] += bc[k] * table_[a][k][l];
        if (left != right)
          throw Error(ErrorKind::Config, name_ + ": table not associative on (" +
                                             basis_[a].label + ", " + basis_[b].label + ", " +
                                             basis_[c].label + ")");
      }

  for (const auto& g : generators_) {
    if (g.coefficients.size() != n)
      throw Error(ErrorKind::Config, name_ + ": generator " + g.name + " has wrong length");
    for (std::size_t k = 0; k < n; ++k)
      if (g.coefficients[k] != 0 && basis_[k].degree != g.degree)
        throw Error(ErrorKind::Config, name_ + ": generator " + g.name + " is not homogeneous");
  }
}

std::optional<std::size_t> RingPresentation::find(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return i;
  return std::nullopt;
}

std::size_t RingPresentation::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::Config, name_ + ": unknown basis label '" + std::string(label) + "'");
}

std::vector<std::size_t> RingPresentation::indices_of_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == degree) out.push_back(i);
  return out;
}

RingPtr make_quadric_ring(int dim, const QuadricLabels& labels) {
  if (dim < 2) throw Error(ErrorKind::InvalidDimension, "quadric dimension must be >= 2");
  const std::string& h = labels.hyperplane;
  const std::string& p = labels.plane;
  std::vector<BasisElement> basis;
  std::vector<std::vector<IntVector>> table;
  std::vector<Generator> gens;

  if (dim % 2 == 1) {
    const int m = (dim - 1) / 2;
    for (int k = 0; k <= m; ++k) basis.push_back({power_label(h, k), k});
    for (int k = 0; k <= m; ++k)
      basis.push_back({k == 0 ? p : p + "*" + power_label(h, k), m + 1 + k});
    const std::size_t n = basis.size();
    auto lpow = [&](int s) -> IntVector {
      if (s <= m) return unit_vector(n, static_cast<std::size_t>(s));
      if (s <= dim) return unit_vector(n, static_cast<std::size_t>(m + 1 + s - m - 1), 2);
      return IntVector(n, 0);
    };
    auto plpow = [&](int s) -> IntVector {
      if (s <= m) return unit_vector(n, static_cast<std::size_t>(m + 1 + s));
      return IntVector(n, 0);
    };
    table.assign(n, std::vector<IntVector>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool pi = static_cast<int>(i) > m;
        const bool pj = static_cast<int>(j) > m;
        const int ki = pi ? static_cast<int>(i) - m - 1 : static_cast<int>(i);
        const int kj = pj ? static_cast<int>(j) - m - 1 : static_cast<int>(j);
        if (!pi && !pj) table[i][j] = lpow(ki + kj);
        else if (pi && pj) table[i][j] = IntVector(n, 0);
        else table[i][j] = plpow(ki + kj);
      }
    std::vector<Rational> hyper(n, 0);
    if (m >= 1) hyper[1] = 1;
    else hyper[m + 1] = 2;  // unreachable for dim >= 3
    gens.push_back({h, 1, hyper});
  } else {
    const int m = dim / 2;
    // indices: L^k (k < m) -> k; Pi1 -> m; Pi2 -> m+1; Pi1*L^k (1 <= k <= m) -> m+1+k
    for (int k = 0; k < m; ++k) basis.push_back({power_label(h, k), k});
    basis.push_back({p + "1", m});
    basis.push_back({p + "2", m});
    for (int k = 1; k <= m; ++k) basis.push_back({p + "1*" + power_label(h, k), m + k});
    const std::size_t n = basis.size();
    const auto pi1 = static_cast<std::size_t>(m);
    const auto pi2 = static_cast<std::size_t>(m + 1);
    auto pi1l = [&](int k) { return static_cast<std::size_t>(m + 1 + k); };
    auto lpow = [&](int s) -> IntVector {
      if (s < m) return unit_vector(n, static_cast<std::size_t>(s));
      if (s == m) {
        IntVector v(n, 0);
        v[pi1] = 1;
        v[pi2] = 1;
        return v;
      }
      if (s <= dim) return unit_vector(n, pi1l(s - m), 2);
      return IntVector(n, 0);
    };
    // kind: 0 = L^k, 1 = Pi1, 2 = Pi2, 3 = Pi1*L^k
    auto kind_of = [&](std::size_t i, int& k) {
      if (i < static_cast<std::size_t>(m)) {
        k = static_cast<int>(i);
        return 0;
      }
      if (i == pi1) { k = 0; return 1; }
      if (i == pi2) { k = 0; return 2; }
      k = static_cast<int>(i) - m - 1;
      return 3;
    };
    auto plane_times_lpow = [&](int k) -> IntVector {
      if (k <= m) return unit_vector(n, pi1l(k));
      return IntVector(n, 0);
    };
    table.assign(n, std::vector<IntVector>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int ki = 0, kj = 0;
        int ti = kind_of(i, ki), tj = kind_of(j, kj);
        if (ti > tj) {
          std::swap(ti, tj);
          std::swap(ki, kj);
        }
        IntVector v(n, 0);
        if (ti == 0 && tj == 0) v = lpow(ki + kj);
        else if (ti == 0 && (tj == 1 || tj == 2)) v = ki == 0 ? unit_vector(n, tj == 1 ? pi1 : pi2)
                                                             : plane_times_lpow(ki);
        else if (ti == 0 && tj == 3) v = plane_times_lpow(ki + kj);
        else if ((ti == 1 || ti == 2) && (tj == 1 || tj == 2)) {
          const bool same = ti == tj;
          if (same == (m % 2 == 0)) v[pi1l(m)] = 1;
        }
        table[i][j] = v;
      }
    std::vector<Rational> hyper(n, 0), delta(n, 0);
    if (m >= 2) hyper[1] = 1;
    else hyper[pi1] = hyper[pi2] = 1;
    delta[pi1] = 1;
    delta[pi2] = -1;
    gens.push_back({h, 1, hyper});
    gens.push_back({p + "1-" + p + "2", m, delta});
  }
  return std::make_shared<const RingPresentation>("Q" + std::to_string(dim), dim, std::move(basis),
                                                  std::move(table), std::move(gens), dim);
}

RingPtr make_projective_space_ring(int dim, const std::string& hyperplane) {
  if (dim < 1) throw Error(ErrorKind::InvalidDimension, "projective space dimension must be >= 1");
  std::vector<BasisElement> basis;
  for (int k = 0; k <= dim; ++k) basis.push_back({power_label(hyperplane, k), k});
  const auto n = basis.size();
  std::vector<std::vector<IntVector>> table(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = i + j < n ? unit_vector(n, i + j) : IntVector(n, 0);
  std::vector<Rational> hyper(n, 0);
  hyper[1] = 1;
  return std::make_shared<const RingPresentation>("P" + std::to_string(dim), dim, std::move(basis),
                                                  std::move(table),
                                                  std::vector<Generator>{{hyperplane, 1, hyper}},
                                                  dim + 1);
}

// ---------------------------------------------------------------------------

GradedClass::GradedClass(RingPtr ring, int degree)
    : ring_(std::move(ring)), degree_(degree), coeffs_(ring_->size(), Rational(0)) {}

GradedClass::GradedClass(RingPtr ring, int degree, std::vector<Rational> coefficients)
    : ring_(std::move(ring)), degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring_->size())
    throw Error(ErrorKind::IncompatibleRing, "coefficient vector has wrong length");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && ring_->element(i).degree != degree_)
      throw Error(ErrorKind::Degree, "coefficient on " + ring_->element(i).label +
                                         " does not match degree " + std::to_string(degree_));
}

GradedClass GradedClass::basis(const RingPtr& ring, std::size_t index) {
  GradedClass c(ring, ring->element(index).degree);
  c.coeffs_[index] = 1;
  return c;
}

GradedClass GradedClass::basis(const RingPtr& ring, std::string_view label) {
  return basis(ring, ring->index_of(label));
}

GradedClass GradedClass::generator(const RingPtr& ring, std::size_t index) {
  if (index >= ring->generators().size())
    throw Error(ErrorKind::Config, ring->name() + ": no generator #" + std::to_string(index));
  const auto& g = ring->generators()[index];
  return GradedClass(ring, g.degree, g.coefficients);
}

GradedClass GradedClass::from_terms(const RingPtr& ring,
                                    const std::vector<std::pair<std::string, Integer>>& terms) {
  if (terms.empty()) throw Error(ErrorKind::Config, "empty term list");
  const int degree = ring->element(ring->index_of(terms.front().first)).degree;
  GradedClass c(ring, degree);
  for (const auto& [label, coeff] : terms) {
    const auto i = ring->index_of(label);
    if (ring->element(i).degree != degree)
      throw Error(ErrorKind::Degree, "terms of mixed degree in class");
    c.coeffs_[i] += Rational(coeff);
  }
  return c;
}

Rational GradedClass::coefficient(std::string_view label) const {
  return coeffs_[ring_->index_of(label)];
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool GradedClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

void GradedClass::check_compatible(const GradedClass& other) const {
  if (ring_ != other.ring_)
    throw Error(ErrorKind::IncompatibleRing, "classes live in different rings (" + ring_->name() +
                                                 ", " + other.ring_->name() + ")");
}

GradedClass GradedClass::operator-() const {
  GradedClass c = *this;
  for (auto& q : c.coeffs_) q = -q;
  return c;
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_)
    throw Error(ErrorKind::Degree, "adding classes of degrees " + std::to_string(degree_) + " and " +
                                       std::to_string(other.degree_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) { return *this += -other; }

GradedClass& GradedClass::operator*=(const Rational& scalar) {
  for (auto& q : coeffs_) q *= scalar;
  return *this;
}

bool GradedClass::operator==(const GradedClass& other) const {
  if (ring_ != other.ring_) return false;
  if (is_zero() && other.is_zero()) return true;
  return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [q, label] : terms) {
    if (q == 0) continue;
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (label == "1") {
      out += roofs::to_string(mag);
    } else {
      if (mag != 1) out += roofs::to_string(mag) + "*";
      out += label;
    }
  }
  return out.empty() ? "0" : out;
}

std::string GradedClass::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) terms.emplace_back(coeffs_[i], ring_->element(i).label);
  return format_terms(terms);
}

GradedClass multiply(const GradedClass& a, const GradedClass& b) {
  if (a.ring() != b.ring())
    throw Error(ErrorKind::IncompatibleRing, "cannot multiply classes from " + a.ring()->name() +
                                                 " and " + b.ring()->name());
  const auto& ring = *a.ring();
  const int degree = a.degree() + b.degree();
  std::vector<Rational> out(ring.size(), Rational(0));
  if (degree <= ring.dimension()) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (a.coefficient(i) == 0) continue;
      for (std::size_t j = 0; j < ring.size(); ++j) {
        if (b.coefficient(j) == 0) continue;
        const Rational ab = a.coefficient(i) * b.coefficient(j);
        const auto& p = ring.product(i, j);
        for (std::size_t k = 0; k < ring.size(); ++k)
          if (p[k] != 0) out[k] += ab * Rational(p[k]);
      }
    }
  }
  return GradedClass(a.ring(), degree, std::move(out));
}

GradedClass power(const GradedClass& a, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::Domain, "negative exponent");
  GradedClass result = GradedClass::one(a.ring());
  for (int i = 0; i < exponent; ++i) result = multiply(result, a);
  return result;
}

Rational integrate(const GradedClass& a) {
  if (a.degree() != a.ring()->dimension()) return 0;
  return a.coefficient(a.ring()->point_index());
}

// ---------------------------------------------------------------------------

ChernVector::ChernVector(std::vector<GradedClass> components) : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].ring() != components_.front().ring())
      throw Error(ErrorKind::IncompatibleRing, "Chern components from different rings");
    if (components_[i].degree() != static_cast<int>(i + 1) && !components_[i].is_zero())
      throw Error(ErrorKind::Degree, "Chern component c_" + std::to_string(i + 1) +
                                         " has degree " + std::to_string(components_[i].degree()));
    if (components_[i].degree() != static_cast<int>(i + 1))
      components_[i] = GradedClass(components_[i].ring(), static_cast<int>(i + 1));
  }
}

ChernVector chern_twist(const ChernVector& c, const Integer& t, const GradedClass& hyperplane) {
  if (hyperplane.degree() != 1) throw Error(ErrorKind::Degree, "twist class must have degree 1");
  const int r = c.rank();
  const auto& ring = hyperplane.ring();
  std::vector<GradedClass> out;
  for (int k = 1; k <= r; ++k) {
    // i = 0 term uses c_0 = 1.
    GradedClass ck = GradedClass::one(ring) * Rational(binomial(r, k) * pow(t, static_cast<unsigned>(k)));
    ck = multiply(ck, power(hyperplane, k));
    for (int i = 1; i <= k; ++i) {
      const Integer coeff = binomial(r - i, k - i) * pow(t, static_cast<unsigned>(k - i));
      ck += multiply(power(hyperplane, k - i), c.c(i)) * Rational(coeff);
    }
    out.push_back(std::move(ck));
  }
  return ChernVector(std::move(out));
}

bool validate_mukai_pair(const ChernVector& c, const RingPresentation& base) {
  if (c.rank() == 0 || c.c(1).ring().get() != &base || base.generators().empty()) return false;
  const auto& ring = c.c(1).ring();
  return c.c(1) == GradedClass::hyperplane(ring) * Rational(base.fano_index());
}

}  // namespace roofs::ring
