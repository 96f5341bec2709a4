#include "roofs/lattice.hpp"

#include "roofs/error.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>

namespace roofs::lattice {

namespace {

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

// Floor division; the divisor is nonzero.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t columns(const IntegerMatrix& m) { return m.empty() ? 0 : m.front().size(); }

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), c = columns(b);
  if (columns(a) != k) throw Error(ErrorKind::Domain, "matrix shapes do not compose");
  IntegerMatrix out(n, IntVector(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix t(columns(a), IntVector(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntVector apply(const IntegerMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Domain, "dot product of unequal lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer bilinear(const IntegerMatrix& gram, const IntVector& a, const IntVector& b) {
  return dot(a, apply(gram, b));
}

bool is_symmetric(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

bool is_diagonal(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (i != j && m[i][j] != 0) return false;
  return true;
}

Integer determinant(const IntegerMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw Error(ErrorKind::Domain, "determinant of a non-square matrix");
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SmithDecomposition::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.size(), columns(D)); ++i) d.push_back(D[i][i]);
  return d;
}

IntVector SmithDecomposition::invariant_factors() const {
  IntVector out;
  for (const auto& d : diagonal())
    if (d != 0) out.push_back(d);
  return out;
}

namespace {

struct SmithState {
  IntegerMatrix a, u, u_inv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (auto& row : u_inv) std::swap(row[i], row[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += q * a[j][c];
    for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] += q * u[j][c];
    for (auto& row : u_inv) row[j] -= q * row[i];
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (auto& row : a) row[i] += q * row[j];
    for (auto& row : v) row[i] += q * row[j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (auto& row : u_inv) row[i] = -row[i];
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = columns(m);
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorKind::Domain, "ragged matrix");

  SmithState s{m, identity(rows), identity(rows), identity(cols)};
  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block; ties go to the lowest row, then column.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s.a[i][j] == 0) continue;
          const Integer v = abs_value(s.a[i][j]);
          if (!found || v < best) {
            found = true;
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.a[i][t] == 0) continue;
        s.add_row(i, t, -floor_div(s.a[i][t], s.a[t][t]));
        if (s.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.a[t][j] == 0) continue;
        s.add_col(j, t, -floor_div(s.a[t][j], s.a[t][t]));
        if (s.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.a[i][j] % s.a[t][t] != 0) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s.a[t][t] == 0) break;
    if (s.a[t][t] < 0) s.negate_row(t);
  }

  SmithDecomposition out;
  out.U = std::move(s.u);
  out.U_inverse = std::move(s.u_inv);
  out.V = std::move(s.v);
  out.D = std::move(s.a);
  out.rank = 0;
  for (std::size_t i = 0; i < steps; ++i)
    if (out.D[i][i] != 0) ++out.rank;
  return out;
}

// ---------------------------------------------------------------------------

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors) o *= f;
  return o;
}

std::string DiscriminantGroup::to_string() const {
  if (factors.empty()) return "0";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + roofs::to_string(f);
  }
  return s;
}

DiscriminantGroup discriminant_group(const IntegerMatrix& gram) {
  if (!is_symmetric(gram)) throw Error(ErrorKind::DegenerateLattice, "gram matrix is not symmetric");
  if (determinant(gram) == 0) throw Error(ErrorKind::DegenerateLattice, "gram matrix is singular");
  const auto snf = smith_normal_form(gram);
  DiscriminantGroup g;
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 1) continue;
    g.factors.push_back(d[i]);
    IntVector gen(gram.size(), 0);
    for (std::size_t r = 0; r < gram.size(); ++r) gen[r] = snf.U_inverse[r][i];
    g.generators.push_back(std::move(gen));
  }
  return g;
}

namespace {

// Hermite form whose pivots run from the last column leftwards; output rows are
// returned with pivot columns ascending.
std::vector<IntVector> reverse_hermite(std::vector<IntVector> rows, std::size_t n) {
  std::size_t p = 0;
  for (std::size_t cc = n; cc-- > 0 && p < rows.size();) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = p; i < rows.size(); ++i)
        if (rows[i][cc] != 0 && (best == rows.size() || abs_value(rows[i][cc]) < abs_value(rows[best][cc])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[p], rows[best]);
      bool done = true;
      for (std::size_t i = p + 1; i < rows.size(); ++i) {
        if (rows[i][cc] == 0) continue;
        const Integer q = floor_div(rows[i][cc], rows[p][cc]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[p][j];
        if (rows[i][cc] != 0) done = false;
      }
      if (done) break;
    }
    if (p >= rows.size() || rows[p][cc] == 0) continue;
    if (rows[p][cc] < 0)
      for (auto& x : rows[p]) x = -x;
    for (std::size_t i = 0; i < p; ++i) {
      const Integer q = floor_div(rows[i][cc], rows[p][cc]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[p][j];
    }
    ++p;
  }
  rows.resize(p);
  std::reverse(rows.begin(), rows.end());
  return rows;
}

}  // namespace

std::vector<IntVector> orthogonal_kernel(const IntegerMatrix& gram,
                                         const std::vector<IntVector>& sublattice) {
  if (!is_symmetric(gram)) throw Error(ErrorKind::DegenerateLattice, "gram matrix is not symmetric");
  const std::size_t n = gram.size();
  if (sublattice.empty()) return identity(n);
  IntegerMatrix a;
  for (const auto& s : sublattice) {
    if (s.size() != n) throw Error(ErrorKind::Domain, "sublattice vector has wrong length");
    a.push_back(apply(gram, s));  // gram is symmetric, so this row is s^T gram
  }
  const auto snf = smith_normal_form(a);
  std::vector<IntVector> kernel;
  for (std::size_t c = snf.rank; c < n; ++c) {
    IntVector v(n, 0);
    for (std::size_t r = 0; r < n; ++r) v[r] = snf.V[r][c];
    kernel.push_back(std::move(v));
  }
  return reverse_hermite(std::move(kernel), n);
}

// ---------------------------------------------------------------------------
// Isotropic search

namespace {

using Vec3 = std::array<std::int64_t, 3>;

IntVector to_vector(const Vec3& v) { return {v[0], v[1], v[2]}; }

IsotropicPair negated(const IsotropicPair& p) {
  IsotropicPair q = p;
  for (auto& x : q.a) x = -x;
  for (auto& x : q.b) x = -x;
  return q;
}

std::size_t leading_index(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

bool canonical_less(const IsotropicPair& x, const IsotropicPair& y) {
  const auto lx = leading_index(x.a), ly = leading_index(y.a);
  if (lx != ly) return lx < ly;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

}  // namespace

IsotropicPair canonical_pair(const IsotropicPair& p) {
  const IsotropicPair swapped{p.b, p.a};
  std::vector<IsotropicPair> members{p, swapped, negated(p), negated(swapped)};
  std::optional<IsotropicPair> best;
  for (const auto& m : members) {
    const auto i = leading_index(m.a);
    if (i == m.a.size() || m.a[i] < 0) continue;
    if (!best || canonical_less(m, *best)) best = m;
  }
  return *best;
}

MukaiSolution isotropic_pair_solve(const IntegerMatrix& gram, const IntVector& ell,
                                   std::int64_t bound) {
  if (gram.size() != 3 || !is_symmetric(gram))
    throw Error(ErrorKind::Domain, "isotropic search needs a symmetric rank-3 gram matrix");
  if (ell.size() != 3) throw Error(ErrorKind::Domain, "ell must have three coordinates");
  if (bilinear(gram, ell, ell) == 0) throw Error(ErrorKind::Domain, "ell is isotropic");
  if (bound < 0 || bound > 100000) throw Error(ErrorKind::Domain, "search bound out of range");

  // All magnitudes below stay far inside int64 for the permitted bound and
  // reasonable gram entries; check the entries up front.
  const Integer limit = Integer(1) << 20;
  std::array<std::array<std::int64_t, 3>, 3> g{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (abs_value(gram[i][j]) > limit) throw Error(ErrorKind::Domain, "gram entry too large");
      g[i][j] = to_int64(gram[i][j]);
    }
  const IntVector u_big = apply(gram, ell);
  Vec3 u{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (abs_value(u_big[i]) > limit) throw Error(ErrorKind::Domain, "ell too large");
    u[i] = to_int64(u_big[i]);
  }

  // Solve the linear constraint u . v = 0 for the coordinate with the largest |u_i|.
  std::size_t solved = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) > std::abs(u[solved])) solved = i;
  const std::size_t f1 = solved == 0 ? 1 : 0;
  const std::size_t f2 = solved == 2 ? 1 : 2;

  std::vector<Vec3> isotropic;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y) {
      std::int64_t num = -(u[f1] * x + u[f2] * y);
      if (num % u[solved] != 0) continue;
      const std::int64_t z = num / u[solved];
      if (z < -bound || z > bound) continue;
      Vec3 v{};
      v[f1] = x;
      v[f2] = y;
      v[solved] = z;
      if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
      std::int64_t q = 0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q += v[i] * g[i][j] * v[j];
      if (q == 0) isotropic.push_back(v);
    }

  std::map<std::pair<IntVector, IntVector>, IsotropicPair> unique;
  for (std::size_t i = 0; i < isotropic.size(); ++i)
    for (std::size_t j = 0; j < isotropic.size(); ++j) {
      std::int64_t ab = 0;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) ab += isotropic[i][r] * g[r][c] * isotropic[j][c];
      if (ab != 1) continue;
      const auto canon = canonical_pair({to_vector(isotropic[i]), to_vector(isotropic[j])});
      unique.emplace(std::make_pair(canon.a, canon.b), canon);
    }
  if (unique.empty())
    throw Error(ErrorKind::SearchExhausted,
                "no isotropic pair with a.b = 1 in the box of radius " + std::to_string(bound));

  MukaiSolution sol;
  sol.isotropic_vectors = isotropic.size();
  for (auto& [key, pair] : unique) sol.orbits.push_back(pair);
  std::sort(sol.orbits.begin(), sol.orbits.end(), canonical_less);
  sol.canonical = sol.orbits.front();
  return sol;
}

}  // namespace roofs::lattice
