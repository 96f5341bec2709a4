#include "roofs/error.hpp"
#include "roofs/linalg.hpp"
#include "roofs/roof.hpp"

namespace roofs::roof {

namespace {

// A class on the target side depending affinely on the unknown coordinates of
// the images of the extra generators.
struct Affine {
  BundleClass constant;
  std::vector<BundleClass> linear;

  Affine(const SidePtr& to, int degree, std::size_t unknowns)
      : constant(to, degree), linear(unknowns, BundleClass(to, degree)) {}

  void add(const Affine& o, const Rational& s) {
    constant += o.constant * s;
    for (std::size_t u = 0; u < linear.size(); ++u) linear[u] += o.linear[u] * s;
  }
};

// A product xi^a L^b E, where E is an extra generator or nothing.
struct Monomial {
  int xi_power = 0;
  int l_power = 0;
  int extra = -1;  // index into the base generators (>= 1), or -1
};

}  // namespace

SideSwitch::SideSwitch(SidePtr from, SidePtr to, Integer k)
    : from_(std::move(from)), to_(std::move(to)), k_(std::move(k)) {
  if (from_->rank() != to_->rank() || from_->total_dimension() != to_->total_dimension())
    throw Error(ErrorKind::InvalidRoof, "switch between sides of different shape");
  const auto& fbase = from_->base();
  const auto& gens = fbase->generators();
  if (gens.empty() || to_->base()->generators().empty())
    throw Error(ErrorKind::Config, "side switch needs a hyperplane generator on both bases");

  const BundleClass xi_from = BundleClass::xi(from_);
  const BundleClass l_from = BundleClass::pullback(from_, GradedClass::hyperplane(fbase));
  const BundleClass xi_to = BundleClass::xi(to_);
  const BundleClass l_image = xi_to * Rational(k_) - BundleClass::pullback(to_, GradedClass::hyperplane(to_->base()));

  // Unknown slots: for each extra generator, the target basis monomials of its degree.
  std::vector<std::vector<std::size_t>> slots(gens.size());
  std::vector<std::size_t> offset(gens.size(), 0);
  std::size_t unknowns = 0;
  for (std::size_t g = 1; g < gens.size(); ++g) {
    offset[g] = unknowns;
    for (std::size_t i = 0; i < to_->bundle_size(); ++i)
      if (to_->degree_of(i) == gens[g].degree) slots[g].push_back(i);
    unknowns += slots[g].size();
  }

  const std::size_t n = from_->bundle_size();
  const int top = from_->total_dimension();

  auto value_of = [&](const Monomial& m) {
    BundleClass v = power(xi_from, m.xi_power) * power(l_from, m.l_power);
    if (m.extra >= 0) v = v * BundleClass::pullback(from_, GradedClass::generator(fbase, static_cast<std::size_t>(m.extra)));
    return v;
  };
  auto image_of = [&](const Monomial& m, int degree) {
    Affine a(to_, degree, unknowns);
    const BundleClass head = power(xi_to, m.xi_power) * power(l_image, m.l_power);
    if (m.extra < 0) {
      a.constant = head;
    } else {
      const auto g = static_cast<std::size_t>(m.extra);
      for (std::size_t s = 0; s < slots[g].size(); ++s)
        a.linear[offset[g] + s] = BundleClass::basis(to_, slots[g][s]) * head;
    }
    return a;
  };

  // Express every source monomial through products of generators, preferring
  // monomials without extra generators and with low xi powers.
  std::vector<Affine> basis_images;
  basis_images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis_images.emplace_back(to_, from_->degree_of(i), unknowns);

  for (int d = 0; d <= top; ++d) {
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < n; ++i)
      if (from_->degree_of(i) == d) targets.push_back(i);
    if (targets.empty()) continue;

    std::vector<Monomial> candidates;
    for (int a = 0; a <= d; ++a) candidates.push_back({a, d - a, -1});
    for (std::size_t g = 1; g < gens.size(); ++g)
      for (int a = 0; a + gens[g].degree <= d; ++a)
        candidates.push_back({a, d - a - gens[g].degree, static_cast<int>(g)});

    std::vector<Monomial> chosen;
    linalg::RatMatrix rows;
    for (const auto& m : candidates) {
      const auto v = value_of(m);
      rows.push_back(v.coordinates());
      if (linalg::rank(rows) == rows.size()) {
        chosen.push_back(m);
        if (chosen.size() == targets.size()) break;
      } else {
        rows.pop_back();
      }
    }
    if (chosen.size() != targets.size())
      throw Error(ErrorKind::Config, from_->name() + ": base generators do not generate degree " + std::to_string(d));

    // columns = chosen monomial values
    linalg::RatMatrix m(n, linalg::RatVector(chosen.size(), 0));
    for (std::size_t c = 0; c < chosen.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) m[r][c] = rows[c][r];
    std::vector<Affine> chosen_images;
    for (const auto& mono : chosen) chosen_images.push_back(image_of(mono, d));
    for (auto t : targets) {
      const auto sol = linalg::solve(m, BundleClass::basis(from_, t).coordinates(), chosen.size());
      if (sol.status != linalg::SolveStatus::Unique)
        throw Error(ErrorKind::Inconsistency, "cannot express " + from_->monomial_label(t) + " in the generators");
      for (std::size_t c = 0; c < chosen.size(); ++c)
        if (sol.x[c] != 0) basis_images[t].add(chosen_images[c], sol.x[c]);
    }
  }

  std::vector<Rational> values(unknowns, 0);
  if (unknowns > 0) {
    // phi(a h) = phi(a) phi(h) for h in {xi, L}: linear in the unknowns.
    linalg::RatMatrix eqs;
    linalg::RatVector rhs;
    const BundleClass* hs[] = {&xi_from, &l_from};
    const BundleClass* hs_image[] = {&xi_to, &l_image};
    for (std::size_t i = 0; i < n; ++i)
      for (int h = 0; h < 2; ++h) {
        const int degree = from_->degree_of(i) + 1;
        if (degree > top) continue;
        const BundleClass prod = BundleClass::basis(from_, i) * *hs[h];
        Affine lhs(to_, degree, unknowns);
        for (std::size_t j = 0; j < n; ++j)
          if (prod.coordinate(j) != 0) lhs.add(basis_images[j], prod.coordinate(j));
        Affine rhs_aff(to_, degree, unknowns);
        rhs_aff.constant = basis_images[i].constant * *hs_image[h];
        for (std::size_t u = 0; u < unknowns; ++u) rhs_aff.linear[u] = basis_images[i].linear[u] * *hs_image[h];
        lhs.add(rhs_aff, -1);
        for (std::size_t c = 0; c < to_->bundle_size(); ++c) {
          linalg::RatVector row(unknowns, 0);
          bool any = lhs.constant.coordinate(c) != 0;
          for (std::size_t u = 0; u < unknowns; ++u) {
            row[u] = lhs.linear[u].coordinate(c);
            any = any || row[u] != 0;
          }
          if (!any) continue;
          eqs.push_back(std::move(row));
          rhs.push_back(-lhs.constant.coordinate(c));
        }
      }
    const auto sol = linalg::solve(eqs, rhs, unknowns);
    if (sol.status == linalg::SolveStatus::Inconsistent)
      throw Error(ErrorKind::Inconsistency, from_->name() + " -> " + to_->name() + ": no compatible image of the extra generators");
    if (sol.status == linalg::SolveStatus::Underdetermined)
      throw Error(ErrorKind::Inconsistency, from_->name() + " -> " + to_->name() + ": image of the extra generators is not determined");
    values = sol.x;
  }

  auto evaluate = [&](const Affine& a) {
    BundleClass v = a.constant;
    for (std::size_t u = 0; u < unknowns; ++u)
      if (values[u] != 0) v += a.linear[u] * values[u];
    return v;
  };
  for (const auto& a : basis_images) images_.push_back(evaluate(a));

  generator_images_.push_back(l_image);
  for (std::size_t g = 1; g < gens.size(); ++g) {
    BundleClass v(to_, gens[g].degree);
    for (std::size_t s = 0; s < slots[g].size(); ++s)
      v += BundleClass::basis(to_, slots[g][s]) * values[offset[g] + s];
    generator_images_.push_back(std::move(v));
  }

  multiplicative_ = true;
  for (std::size_t i = 0; i < n && multiplicative_; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (from_->degree_of(i) + from_->degree_of(j) > top) continue;
      const auto lhs = apply_rational(BundleClass::basis(from_, i) * BundleClass::basis(from_, j));
      if (!(lhs == images_[i] * images_[j])) {
        multiplicative_ = false;
        break;
      }
    }
}

BundleClass SideSwitch::apply_rational(const BundleClass& a) const {
  if (a.side() != from_) throw Error(ErrorKind::IncompatibleRing, "class is not on " + from_->name());
  BundleClass out(to_, a.degree());
  for (std::size_t i = 0; i < a.coordinates().size(); ++i)
    if (a.coordinate(i) != 0) out += images_[i] * a.coordinate(i);
  return out;
}

BundleClass SideSwitch::apply(const BundleClass& a) const {
  BundleClass out = apply_rational(a);
  if (!out.is_integral())
    throw Error(ErrorKind::IntegralityViolation, "switching " + a.to_string() + " gives the non-integral class " + out.to_string());
  return out;
}

}  // namespace roofs::roof
