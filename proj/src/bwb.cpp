#include "roofs/bwb.hpp"

#include "roofs/error.hpp"

#include <algorithm>

namespace roofs::bwb {

namespace {

Rational pairing(const Weight& w, const std::vector<int>& root) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (root[i] != 0) s += w[i] * root[i];
  return s;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

const Rational half(1, 2);

// Levi factor of the parabolic fixing a point of the quadric.
RootSystem levi(const RootSystem& rs) { return RootSystem(rs.family, rs.rank - 1); }

// -w0 on the Levi part (coordinates 2..m).
Weight levi_dual(const RootSystem& rs, Weight rest) {
  if (rs.family == Family::D && (rs.rank - 1) % 2 == 1 && !rest.empty()) rest.back() = -rest.back();
  return rest;
}

Weight bundle_dual(const RootSystem& rs, const Weight& w) {
  Weight rest(w.begin() + 1, w.end());
  rest = levi_dual(rs, rest);
  Weight out{-w[0]};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

RootSystem::RootSystem(Family f, int m) : family(f), rank(m) {
  if (m < 1 || (f == Family::D && m < 2))
    throw Error(ErrorKind::Domain, "root system rank too small");
}

std::vector<std::vector<int>> RootSystem::positive_roots() const {
  std::vector<std::vector<int>> roots;
  const auto m = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<int> a(m, 0), b(m, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      roots.push_back(a);
      roots.push_back(b);
    }
  if (family == Family::B)
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<int> e(m, 0);
      e[i] = 1;
      roots.push_back(e);
    }
  return roots;
}

std::string RootSystem::name() const { return (family == Family::B ? "B" : "D") + std::to_string(rank); }

RootSystem quadric_group(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidDimension, "quadric dimension must be >= 3 for homogeneous bundles");
  if (n % 2 == 1) return RootSystem(Family::B, (n + 1) / 2);
  return RootSystem(Family::D, (n + 2) / 2);
}

bool is_uniform(const Weight& w) {
  if (w.empty()) return true;
  const bool half_integral = !is_integer(w[0]);
  for (const auto& x : w) {
    if (half_integral) {
      if (is_integer(x) || !is_integer(2 * x)) return false;
    } else if (!is_integer(x)) {
      return false;
    }
  }
  return true;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += roofs::to_string(w[i]);
  }
  return s + ")";
}

Weight rho(const RootSystem& rs) {
  Weight w;
  for (int i = 0; i < rs.rank; ++i) {
    if (rs.family == Family::B) w.push_back(Rational(2 * (rs.rank - i) - 1, 2));
    else w.push_back(Rational(rs.rank - 1 - i));
  }
  return w;
}

std::optional<Conjugate> dominant_conjugate(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank) throw Error(ErrorKind::Domain, "weight has wrong length");
  if (!is_uniform(w)) throw Error(ErrorKind::Domain, "weight mixes integral and half-integral coordinates");
  int length = 0;
  for (const auto& root : rs.positive_roots()) {
    const Rational p = pairing(w, root);
    if (p == 0) return std::nullopt;
    if (p < 0) ++length;
  }
  Conjugate c;
  int negatives = 0;
  bool has_zero = false;
  for (const auto& x : w) {
    if (x < 0) ++negatives;
    if (x == 0) has_zero = true;
    c.weight.push_back(abs_value(x));
  }
  std::sort(c.weight.begin(), c.weight.end(), [](const Rational& a, const Rational& b) { return a > b; });
  if (rs.family == Family::D && negatives % 2 == 1 && !has_zero) c.weight.back() = -c.weight.back();
  c.length = length;
  return c;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank) return false;
  for (const auto& root : rs.positive_roots())
    if (pairing(w, root) < 0) return false;
  return true;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& dominant) {
  if (!is_uniform(dominant)) throw Error(ErrorKind::Domain, "weight mixes integral and half-integral coordinates");
  if (!is_dominant(rs, dominant)) throw Error(ErrorKind::Domain, "weight " + to_string(dominant) + " is not dominant");
  const Weight r = rho(rs);
  Weight shifted = dominant;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += r[i];
  Rational num = 1, den = 1;
  for (const auto& root : rs.positive_roots()) {
    num *= pairing(shifted, root);
    den *= pairing(r, root);
  }
  const Rational d = num / den;
  if (!is_integer(d)) throw Error(ErrorKind::Inconsistency, "Weyl dimension is not an integer");
  return to_integer(d);
}

Weight dual_weight(const RootSystem& rs, const Weight& w) {
  Weight out = w;
  if (rs.family == Family::D && rs.rank % 2 == 1 && !out.empty()) out.back() = -out.back();
  return out;
}

// ---------------------------------------------------------------------------

CohomologyTable::CohomologyTable(std::map<int, Integer> entries) {
  for (auto& [k, d] : entries) add(k, d);
}

Integer CohomologyTable::h(int k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Integer(0) : it->second;
}

void CohomologyTable::add(int k, const Integer& d) {
  if (d == 0) return;
  Integer& slot = entries_[k];
  slot += d;
  if (slot < 0) throw Error(ErrorKind::Inconsistency, "negative cohomology dimension");
  if (slot == 0) entries_.erase(k);
}

std::string CohomologyTable::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, d] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ": " + roofs::to_string(d);
  }
  return s + "}";
}

Integer euler_characteristic(const CohomologyTable& t) {
  Integer chi = 0;
  for (const auto& [k, d] : t.entries()) chi += k % 2 == 0 ? d : Integer(-d);
  return chi;
}

CohomologyTable operator+(const CohomologyTable& a, const CohomologyTable& b) {
  CohomologyTable out = a;
  for (const auto& [k, d] : b.entries()) out.add(k, d);
  return out;
}

CohomologyTable bott(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda;
  const Weight r = rho(rs);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += r[i];
  const auto c = dominant_conjugate(rs, shifted);
  if (!c) return {};
  Weight mu = c->weight;
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] -= r[i];
  return CohomologyTable({{c->length, weyl_dimension(rs, mu)}});
}

// ---------------------------------------------------------------------------
// Weight dictionary

const std::vector<std::string>& irreducible_descriptors() {
  static const std::vector<std::string> names{"O", "S", "Sdual", "Sym2S", "Sym2Sdual", "Wedge2S", "Wedge2Sdual"};
  return names;
}

bool is_irreducible_descriptor(const std::string& d) {
  const auto& names = irreducible_descriptors();
  return std::find(names.begin(), names.end(), d) != names.end();
}

std::vector<Weight> bundle_weights(int n, const std::string& descriptor, const Integer& t) {
  const RootSystem rs = quadric_group(n);
  const auto m = static_cast<std::size_t>(rs.rank);
  std::vector<Weight> untwisted;

  auto spin_dual = [&] { return Weight(m, half); };
  const bool is_dual_name = descriptor.size() > 4 && descriptor.substr(descriptor.size() - 4) == "dual";
  const std::string stem = is_dual_name ? descriptor.substr(0, descriptor.size() - 4) : descriptor;

  if (descriptor == "O") {
    untwisted.push_back(Weight(m, 0));
  } else if (stem == "S") {
    untwisted.push_back(spin_dual());
  } else if (stem == "Sym2S" || stem == "Wedge2S") {
    if (n != 5 && n != 6)
      throw Error(ErrorKind::UnsupportedBundle, descriptor + " is only tabulated on Q5 and Q6");
    if (stem == "Sym2S") {
      untwisted.push_back(Weight(m, 1));
    } else if (n == 5) {
      untwisted.push_back({1, 1, 0});
      untwisted.push_back({1, 0, 0});
    } else {
      untwisted.push_back({1, 1, 0, 0});
    }
  } else {
    throw Error(ErrorKind::UnsupportedBundle, "no weight data for bundle '" + descriptor + "'");
  }

  // Names ending in "dual" are the S^v-based entries; the bare S, Sym2S, Wedge2S are their duals.
  const bool take_dual = !is_dual_name && descriptor != "O";
  std::vector<Weight> out;
  for (auto w : untwisted) {
    if (take_dual) w = bundle_dual(rs, w);
    w[0] += Rational(t);
    out.push_back(std::move(w));
  }
  return out;
}

Integer fiber_rank(int n, const std::string& descriptor) {
  const RootSystem rs = quadric_group(n);
  const RootSystem l = levi(rs);
  Integer total = 0;
  for (const auto& w : bundle_weights(n, descriptor, 0)) total += weyl_dimension(l, Weight(w.begin() + 1, w.end()));
  return total;
}

CohomologyTable bundle_cohomology(int n, const std::string& descriptor, const Integer& t) {
  const RootSystem rs = quadric_group(n);
  CohomologyTable out;
  for (const auto& w : bundle_weights(n, descriptor, t)) out = out + bott(rs, w);
  return out;
}

}  // namespace roofs::bwb
