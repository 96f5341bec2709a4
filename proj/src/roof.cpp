#include "roofs/roof.hpp"

#include "roofs/error.hpp"
#include "roofs/linalg.hpp"

#include <algorithm>

namespace roofs::roof {

namespace {

using BaseVec = std::vector<Rational>;

BaseVec base_multiply(const ring::RingPresentation& r, const BaseVec& a, const BaseVec& b) {
  BaseVec out(r.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      const auto& p = r.product(i, j);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out[k] += ab * Rational(p[k]);
    }
  }
  return out;
}

// parts[p] is the coefficient of xi^p; afterwards every p >= r is zero.
void reduce_parts(const RoofSide& side, std::vector<BaseVec>& parts) {
  const int r = side.rank();
  const auto& base = *side.base();
  for (int p = static_cast<int>(parts.size()) - 1; p >= r; --p) {
    BaseVec c = std::move(parts[static_cast<std::size_t>(p)]);
    parts[static_cast<std::size_t>(p)].assign(base.size(), 0);
    if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) continue;
    for (int l = 1; l <= r; ++l) {
      BaseVec term = base_multiply(base, c, side.g(l).coefficients());
      auto& dst = parts[static_cast<std::size_t>(p - l)];
      const bool plus = l % 2 == 1;
      for (std::size_t k = 0; k < term.size(); ++k) dst[k] += plus ? term[k] : Rational(-term[k]);
    }
  }
}

std::string xi_power_label(const std::string& xi, int p) {
  if (p == 1) return xi;
  return xi + "^" + std::to_string(p);
}

}  // namespace

// ---------------------------------------------------------------------------

RoofSide::RoofSide(std::string name, RingPtr base, std::vector<GradedClass> groth_coeffs,
                   std::string xi_label)
    : name_(std::move(name)), base_(std::move(base)), coeffs_(std::move(groth_coeffs)), xi_(std::move(xi_label)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidRoof, name_ + ": rank must be positive");
  if (rank() > base_->dimension() + 1)
    throw Error(ErrorKind::InvalidRoof, name_ + ": rank exceeds base dimension + 1");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].ring() != base_)
      throw Error(ErrorKind::IncompatibleRing, name_ + ": relation coefficient on another ring");
    if (coeffs_[i].degree() != static_cast<int>(i + 1))
      throw Error(ErrorKind::Degree, name_ + ": relation coefficient g" + std::to_string(i + 1) +
                                         " has degree " + std::to_string(coeffs_[i].degree()));
    if (!coeffs_[i].is_integral())
      throw Error(ErrorKind::IntegralityViolation, name_ + ": relation coefficients must be integral");
  }
}

int RoofSide::degree_of(std::size_t idx) const {
  return xi_power_of(idx) + base_->element(base_index_of(idx)).degree;
}

std::string RoofSide::monomial_label(int xi_power, const std::string& base_label) const {
  if (xi_power == 0) return base_label;
  if (base_label == "1") return xi_power_label(xi_, xi_power);
  return base_label + "*" + xi_power_label(xi_, xi_power);
}

std::string RoofSide::monomial_label(std::size_t idx) const {
  return monomial_label(xi_power_of(idx), base_->element(base_index_of(idx)).label);
}

std::string RoofSide::relation_string() const {
  const int r = rank();
  std::vector<std::pair<Rational, std::string>> terms;
  terms.emplace_back(1, xi_power_label(xi_, r));
  for (int i = 1; i <= r; ++i) {
    const Rational sign = i % 2 == 1 ? -1 : 1;
    const auto& c = g(i);
    for (std::size_t j = 0; j < base_->size(); ++j)
      if (c.coefficient(j) != 0) terms.emplace_back(sign * c.coefficient(j), monomial_label(r - i, base_->element(j).label));
  }
  return ring::format_terms(terms);
}

RingPtr RoofSide::bundle_ring() const {
  const std::size_t n = bundle_size();
  auto self = std::make_shared<const RoofSide>(*this);
  std::vector<ring::BasisElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back({monomial_label(i), degree_of(i)});
  std::vector<std::vector<IntVector>> table(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = BundleClass::basis(self, i) * BundleClass::basis(self, j);
      IntVector v(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_integer(p.coordinate(k)))
          throw Error(ErrorKind::IntegralityViolation, name_ + ": bundle ring is not integral");
        v[k] = to_integer(p.coordinate(k));
      }
      table[i][j] = std::move(v);
    }
  std::vector<ring::Generator> gens;
  std::vector<Rational> xi(n, 0);
  if (rank() > 1) xi[index(1, 0)] = 1;
  else xi = BundleClass::xi(self).coordinates();
  gens.push_back({xi_, 1, xi});
  for (const auto& g : base_->generators()) {
    std::vector<Rational> c(n, 0);
    for (std::size_t j = 0; j < base_->size(); ++j) c[index(0, j)] = g.coefficients[j];
    gens.push_back({g.name, g.degree, c});
  }
  return std::make_shared<const ring::RingPresentation>("P(" + name_ + ")", total_dimension(),
                                                        std::move(basis), std::move(table),
                                                        std::move(gens));
}

RoofSide build_side_from_chern(std::string name, const RingPtr& base, const ChernVector& c,
                               std::string xi_label) {
  if (c.rank() < 1 || c.rank() > base->dimension())
    throw Error(ErrorKind::InvalidRoof, name + ": bundle rank " + std::to_string(c.rank()) +
                                            " incompatible with base of dimension " +
                                            std::to_string(base->dimension()));
  return RoofSide(std::move(name), base, c.components(), std::move(xi_label));
}

// ---------------------------------------------------------------------------

BundleClass::BundleClass(SidePtr side, int degree)
    : side_(std::move(side)), degree_(degree), coords_(side_->bundle_size(), Rational(0)) {}

BundleClass::BundleClass(SidePtr side, int degree, std::vector<Rational> coordinates)
    : side_(std::move(side)), degree_(degree), coords_(std::move(coordinates)) {
  if (coords_.size() != side_->bundle_size())
    throw Error(ErrorKind::IncompatibleRing, "bundle coordinates have wrong length");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0 && side_->degree_of(i) != degree_)
      throw Error(ErrorKind::Degree, "coordinate on " + side_->monomial_label(i) + " does not match degree " +
                                         std::to_string(degree_));
}

BundleClass BundleClass::basis(const SidePtr& side, std::size_t idx) {
  BundleClass c(side, side->degree_of(idx));
  c.coords_.at(idx) = 1;
  return c;
}

BundleClass BundleClass::xi(const SidePtr& side) {
  if (side->rank() > 1) return basis(side, side->index(1, 0));
  // rank one: xi = g_1
  return pullback(side, side->g(1));
}

BundleClass BundleClass::pullback(const SidePtr& side, const GradedClass& beta) {
  if (beta.ring() != side->base()) throw Error(ErrorKind::IncompatibleRing, "pullback from another ring");
  BundleClass c(side, beta.degree());
  for (std::size_t j = 0; j < side->base()->size(); ++j) c.coords_[side->index(0, j)] = beta.coefficient(j);
  return c;
}

BundleClass BundleClass::monomial(const SidePtr& side, int xi_power, std::string_view base_label) {
  if (xi_power < 0) throw Error(ErrorKind::Domain, "negative xi power");
  const auto b = GradedClass::basis(side->base(), base_label);
  if (xi_power < side->rank()) return basis(side, side->index(xi_power, side->base()->index_of(base_label)));
  return multiply(power(xi(side), xi_power), pullback(side, b));
}

BundleClass BundleClass::from_terms(const SidePtr& side, int degree,
                                    const std::vector<std::pair<std::string, Integer>>& terms) {
  BundleClass c(side, degree);
  for (const auto& [label, coeff] : terms) {
    bool found = false;
    for (std::size_t i = 0; i < side->bundle_size(); ++i)
      if (side->monomial_label(i) == label) {
        c += basis(side, i) * Rational(coeff);
        found = true;
        break;
      }
    if (!found) throw Error(ErrorKind::Config, "unknown monomial '" + label + "' on " + side->name());
  }
  return c;
}

GradedClass BundleClass::part(int xi_power) const {
  const auto& base = side_->base();
  std::vector<Rational> c(base->size(), 0);
  if (xi_power >= 0 && xi_power < side_->rank())
    for (std::size_t j = 0; j < base->size(); ++j) c[j] = coords_[side_->index(xi_power, j)];
  return GradedClass(base, degree_ - xi_power, std::move(c));
}

bool BundleClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool BundleClass::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

BundleClass BundleClass::operator-() const {
  BundleClass c = *this;
  for (auto& q : c.coords_) q = -q;
  return c;
}

BundleClass& BundleClass::operator+=(const BundleClass& o) {
  if (side_ != o.side_)
    throw Error(ErrorKind::IncompatibleRing, "classes on different sides (" + side_->name() + ", " +
                                                 o.side_->name() + ")");
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw Error(ErrorKind::Degree, "adding bundle classes of different degrees");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

BundleClass& BundleClass::operator-=(const BundleClass& o) { return *this += -o; }

BundleClass& BundleClass::operator*=(const Rational& s) {
  for (auto& q : coords_) q *= s;
  return *this;
}

bool BundleClass::operator==(const BundleClass& o) const {
  if (side_ != o.side_) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && coords_ == o.coords_;
}

std::string BundleClass::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  const auto bs = side_->base()->size();
  for (int p = side_->rank() - 1; p >= 0; --p)
    for (std::size_t j = 0; j < bs; ++j) {
      const auto idx = side_->index(p, j);
      terms.emplace_back(coords_[idx], side_->monomial_label(idx));
    }
  return ring::format_terms(terms);
}

BundleClass reduce(const SidePtr& side, const std::vector<GradedClass>& xi_coefficients) {
  const auto& base = side->base();
  std::vector<BaseVec> parts(std::max<std::size_t>(xi_coefficients.size(), static_cast<std::size_t>(side->rank())),
                             BaseVec(base->size(), 0));
  std::optional<int> degree;
  for (std::size_t p = 0; p < xi_coefficients.size(); ++p) {
    const auto& c = xi_coefficients[p];
    if (c.ring() != base) throw Error(ErrorKind::IncompatibleRing, "coefficient from another ring");
    if (c.is_zero()) continue;
    const int d = c.degree() + static_cast<int>(p);
    if (degree && *degree != d) throw Error(ErrorKind::Degree, "inhomogeneous expression");
    degree = d;
    parts[p] = c.coefficients();
  }
  if (!degree) {
    // all coefficients zero; take the degree of the first one, if any
    degree = xi_coefficients.empty() ? 0 : xi_coefficients.front().degree();
  }
  reduce_parts(*side, parts);
  std::vector<Rational> coords(side->bundle_size(), 0);
  for (int p = 0; p < side->rank(); ++p)
    for (std::size_t j = 0; j < base->size(); ++j) coords[side->index(p, j)] = parts[static_cast<std::size_t>(p)][j];
  return BundleClass(side, *degree, std::move(coords));
}

BundleClass multiply(const BundleClass& a, const BundleClass& b) {
  if (a.side() != b.side())
    throw Error(ErrorKind::IncompatibleRing, "multiplying classes on different sides");
  const auto& side = *a.side();
  const auto& base = *side.base();
  const int r = side.rank();
  const int degree = a.degree() + b.degree();
  std::vector<BaseVec> parts(static_cast<std::size_t>(2 * r - 1), BaseVec(base.size(), 0));
  if (degree <= side.total_dimension()) {
    for (int p = 0; p < r; ++p) {
      const BaseVec pa = a.part(p).coefficients();
      if (std::all_of(pa.begin(), pa.end(), [](const Rational& q) { return q == 0; })) continue;
      for (int q = 0; q < r; ++q) {
        const BaseVec pb = b.part(q).coefficients();
        const BaseVec prod = base_multiply(base, pa, pb);
        auto& dst = parts[static_cast<std::size_t>(p + q)];
        for (std::size_t k = 0; k < prod.size(); ++k) dst[k] += prod[k];
      }
    }
    reduce_parts(side, parts);
  }
  std::vector<Rational> coords(side.bundle_size(), 0);
  for (int p = 0; p < r; ++p)
    for (std::size_t j = 0; j < base.size(); ++j) coords[side.index(p, j)] = parts[static_cast<std::size_t>(p)][j];
  return BundleClass(a.side(), degree, std::move(coords));
}

BundleClass power(const BundleClass& a, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::Domain, "negative exponent");
  BundleClass out = BundleClass::basis(a.side(), 0);
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

GradedClass pushforward_to_base(const BundleClass& a) { return a.part(a.side()->rank() - 1); }

Rational integrate(const BundleClass& a) {
  if (a.degree() != a.side()->total_dimension()) return 0;
  return ring::integrate(pushforward_to_base(a));
}

Integer pairing_on_M(const BundleClass& a, const BundleClass& b) {
  const int target = a.side()->total_dimension();
  if (a.degree() + b.degree() + 1 != target)
    throw Error(ErrorKind::Degree, "pairing on M needs complementary degrees, got " + std::to_string(a.degree()) +
                                       " + " + std::to_string(b.degree()) + " + 1 != " + std::to_string(target));
  const Rational v = integrate(multiply(multiply(a, b), BundleClass::xi(a.side())));
  if (!is_integer(v)) throw Error(ErrorKind::IntegralityViolation, "non-integral pairing " + to_string(v));
  return to_integer(v);
}

Integer cy_degree(const RoofSide& side) {
  const int r = side.rank();
  const int n = side.base_dimension();
  if (n < r) throw Error(ErrorKind::Degree, "zero locus would be empty");
  const auto& base = side.base();
  const Rational v = ring::integrate(side.g(r) * ring::power(GradedClass::hyperplane(base), n - r));
  if (!is_integer(v)) throw Error(ErrorKind::IntegralityViolation, "non-integral degree");
  return to_integer(v);
}

// ---------------------------------------------------------------------------

MiddleLattice::MiddleLattice(SidePtr side, std::vector<MonomialSpec> basis)
    : side_(std::move(side)), specs_(std::move(basis)) {
  const int total = side_->total_dimension();
  if ((total - 1) % 2 != 0)
    throw Error(ErrorKind::Degree, side_->name() + ": hyperplane section has odd dimension");
  degree_ = (total - 1) / 2;
  if (specs_.empty()) throw Error(ErrorKind::DegenerateBasis, side_->name() + ": empty middle basis");
  for (const auto& s : specs_) {
    auto c = BundleClass::monomial(side_, s.xi_power, s.base_label);
    if (c.degree() != degree_)
      throw Error(ErrorKind::Degree, side_->name() + ": basis monomial " +
                                         side_->monomial_label(s.xi_power, s.base_label) +
                                         " is not in the middle degree " + std::to_string(degree_));
    basis_.push_back(std::move(c));
  }
  const std::size_t n = basis_.size();
  gram_.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_[i][j] = pairing_on_M(basis_[i], basis_[j]);
  det_ = lattice::determinant(gram_);
  if (det_ == 0) throw Error(ErrorKind::DegenerateBasis, side_->name() + ": middle basis is degenerate under the pairing");
}

std::vector<std::string> MiddleLattice::labels() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(side_->monomial_label(s.xi_power, s.base_label));
  return out;
}

std::vector<Rational> MiddleLattice::rational_coordinates(const BundleClass& a) const {
  if (a.side() != side_) throw Error(ErrorKind::IncompatibleRing, "class is on another side");
  if (!a.is_zero() && a.degree() != degree_) throw Error(ErrorKind::Degree, "class is not in the middle degree");
  const std::size_t rows = side_->bundle_size();
  linalg::RatMatrix m(rows, linalg::RatVector(basis_.size(), 0));
  for (std::size_t c = 0; c < basis_.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = basis_[c].coordinate(r);
  const auto sol = linalg::solve(m, a.coordinates(), basis_.size());
  if (sol.status != linalg::SolveStatus::Unique)
    throw Error(ErrorKind::Inconsistency, "class " + a.to_string() + " is not in the span of the middle basis");
  return sol.x;
}

IntVector MiddleLattice::coordinates(const BundleClass& a) const {
  IntVector out;
  for (const auto& q : rational_coordinates(a)) {
    if (!is_integer(q))
      throw Error(ErrorKind::IntegralityViolation, "class " + a.to_string() + " has fractional coordinates");
    out.push_back(to_integer(q));
  }
  return out;
}

BundleClass MiddleLattice::to_class(const IntVector& coords) const {
  if (coords.size() != basis_.size()) throw Error(ErrorKind::Domain, "coordinate vector has wrong length");
  BundleClass c(side_, degree_);
  for (std::size_t i = 0; i < coords.size(); ++i) c += basis_[i] * Rational(coords[i]);
  return c;
}

std::vector<std::size_t> MiddleLattice::pullback_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < specs_.size(); ++i)
    if (specs_[i].xi_power <= side_->rank() - 2) out.push_back(i);
  return out;
}

MiddleLattice middle_lattice(const SidePtr& side, const std::vector<MonomialSpec>& basis) {
  return MiddleLattice(side, basis);
}

LocusClass locus_pushforward_class(const MiddleLattice& lat) {
  const auto& side = lat.side();
  std::vector<IntVector> sub;
  for (auto i : lat.pullback_indices()) {
    IntVector e(lat.rank(), 0);
    e[i] = 1;
    sub.push_back(std::move(e));
  }
  auto kernel = lattice::orthogonal_kernel(lat.gram(), sub);
  if (kernel.size() != 1)
    throw Error(ErrorKind::UnexpectedRank, side->name() + ": complement of the pullback classes has rank " +
                                               std::to_string(kernel.size()));
  LocusClass out{kernel.front(), lat.to_class(kernel.front()), 0, {}};

  const auto probe = BundleClass::monomial(side, side->rank() - 1, side->base()->element(0).label) *
                     BundleClass::pullback(side, GradedClass::hyperplane(side->base()));
  if (probe.degree() != lat.degree())
    throw Error(ErrorKind::Degree, side->name() + ": xi^(r-1) L is not complementary to the middle degree");
  out.polarization_pairing = pairing_on_M(out.cls, probe);
  if (out.polarization_pairing == 0)
    throw Error(ErrorKind::Inconsistency, side->name() + ": locus class pairs to zero with xi^(r-1) L");
  if (out.polarization_pairing < 0) {
    for (auto& x : out.coordinates) x = -x;
    out.cls = -out.cls;
    out.polarization_pairing = -out.polarization_pairing;
  }
  for (auto i : lat.pullback_indices()) out.orthogonality.push_back(pairing_on_M(out.cls, lat.basis()[i]));
  return out;
}

// ---------------------------------------------------------------------------

RoofConfig::RoofConfig(std::string name, SideData side, SideData tilde, Integer k, Integer polarization_degree)
    : name_(std::move(name)), side_(std::move(side)), tilde_(std::move(tilde)), k_(std::move(k)),
      degree_(std::move(polarization_degree)) {
  if (!side_.side || !tilde_.side) throw Error(ErrorKind::InvalidRoof, name_ + ": missing side");
  if (side_.side->rank() != tilde_.side->rank())
    throw Error(ErrorKind::InvalidRoof, name_ + ": sides have different ranks");
  if (side_.side->total_dimension() != tilde_.side->total_dimension())
    throw Error(ErrorKind::InvalidRoof, name_ + ": sides have different total dimensions");
  if (degree_ <= 0) throw Error(ErrorKind::InvalidRoof, name_ + ": polarization degree must be positive");
  lattice_ = std::make_shared<const MiddleLattice>(side_.side, side_.middle_basis);
  tilde_lattice_ = std::make_shared<const MiddleLattice>(tilde_.side, tilde_.middle_basis);
  forward_ = std::make_shared<const SideSwitch>(side_.side, tilde_.side, k_);
  backward_ = std::make_shared<const SideSwitch>(tilde_.side, side_.side, k_);
}

RoofConfig RoofConfig::swapped() const { return RoofConfig(name_ + "-swapped", tilde_, side_, k_, degree_); }

BundleClass switch_side(const RoofConfig& config, const BundleClass& a) {
  if (a.side() == config.side()) return config.forward().apply(a);
  if (a.side() == config.tilde()) return config.backward().apply(a);
  throw Error(ErrorKind::IncompatibleRing, "class does not belong to " + config.name());
}

std::vector<Integer> residue_scan(const IntVector& j, const IntVector& jt, const Integer& d) {
  if (j.size() != jt.size()) throw Error(ErrorKind::Domain, "residue scan on vectors of different lengths");
  if (d <= 0) throw Error(ErrorKind::Domain, "modulus must be positive");
  std::vector<Integer> out;
  for (Integer k = 0; k < d; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < j.size() && ok; ++i) ok = (j[i] - k * jt[i]) % d == 0;
    if (ok) out.push_back(k);
  }
  return out;
}

namespace {

IntVector check_printed(const std::optional<IntVector>& printed, const IntVector& normalized,
                        const std::string& where) {
  if (!printed) return normalized;
  IntVector neg = normalized;
  for (auto& x : neg) x = -x;
  if (*printed != normalized && *printed != neg)
    throw Error(ErrorKind::Inconsistency, where + ": printed locus representative is not +- the computed class");
  return *printed;
}

Integer mod(const Integer& a, const Integer& d) {
  Integer r = a % d;
  return r < 0 ? Integer(r + d) : r;
}

}  // namespace

ResidueReport lemma_seven_residues(const RoofConfig& config) {
  const auto& lat = config.lattice(false);
  const auto& tlat = config.lattice(true);
  const auto j = locus_pushforward_class(lat);
  const auto jt = locus_pushforward_class(tlat);
  const Integer& d = config.polarization_degree();

  ResidueReport rep;
  rep.modulus = d;
  rep.locus = j.coordinates;
  rep.tilde_locus = jt.coordinates;
  rep.printed = check_printed(config.side_data(false).printed_locus, j.coordinates, config.side()->name());
  rep.tilde_printed = check_printed(config.side_data(true).printed_locus, jt.coordinates, config.tilde()->name());

  const IntVector switched_norm = tlat.coordinates(config.forward().apply(j.cls));
  rep.residues = residue_scan(switched_norm, jt.coordinates, d);
  for (const auto& k : rep.residues) {
    rep.sign_orbit.push_back(k);
    rep.sign_orbit.push_back(mod(-k, d));
  }
  std::sort(rep.sign_orbit.begin(), rep.sign_orbit.end());
  rep.sign_orbit.erase(std::unique(rep.sign_orbit.begin(), rep.sign_orbit.end()), rep.sign_orbit.end());
  const Integer plus = mod(1, d), minus = mod(-1, d);
  rep.iso_obstructed = std::none_of(rep.sign_orbit.begin(), rep.sign_orbit.end(),
                                    [&](const Integer& k) { return k == plus || k == minus; });

  rep.switched = tlat.coordinates(config.forward().apply(lat.to_class(rep.printed)));
  for (const auto& k : residue_scan(rep.switched, rep.tilde_printed, d)) {
    for (const Integer& lift : {k, Integer(k - d)}) {
      IntVector coords;
      for (std::size_t i = 0; i < rep.switched.size(); ++i)
        coords.push_back((rep.switched[i] - lift * rep.tilde_printed[i]) / d);
      rep.witnesses.push_back({lift, coords, tlat.to_class(coords)});
    }
  }
  return rep;
}

Integer polarized_sign_check(const RoofConfig& config, bool tilde_side) {
  const auto& lat = config.lattice(tilde_side);
  const auto j = locus_pushforward_class(lat);
  return lattice::bilinear(lat.gram(), j.coordinates, j.coordinates);
}

std::vector<std::size_t> cayley_rank_decomposition(const RoofConfig& config, int k) {
  const auto& side = *config.side();
  const int r = side.rank();
  const int n = side.base_dimension();
  if (n - r != 2) throw Error(ErrorKind::Domain, "Betti numbers of the zero locus are only known for K3 surfaces");
  const int middle = 2 * (n + r - 2);
  if (k < 0 || k > middle)
    throw Error(ErrorKind::Degree, "degree " + std::to_string(k) + " outside [0, " + std::to_string(middle) + "]");
  auto base_betti = [&](int deg) -> std::size_t {
    if (deg < 0 || deg % 2 != 0) return 0;
    return side.base()->rank_in_degree(deg / 2);
  };
  static constexpr std::size_t k3[] = {1, 0, 22, 0, 1};
  std::vector<std::size_t> out;
  for (int i = 0; i <= r - 2; ++i) out.push_back(base_betti(k - 2 * i));
  const int y = k - 2 * r + 2;
  out.push_back(y >= 0 && y <= 4 ? k3[y] : 0);
  return out;
}

}  // namespace roofs::roof
