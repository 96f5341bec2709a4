#include "roofs/linalg.hpp"

namespace roofs::linalg {

RowEchelon row_reduce(RatMatrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

Solution solve(const RatMatrix& a, const RatVector& b, std::size_t cols) {
  RatMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector row = a[i];
    row.resize(cols, 0);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  Solution sol;
  if (aug.empty()) {
    sol.status = cols == 0 ? SolveStatus::Unique : SolveStatus::Underdetermined;
    sol.x.assign(cols, 0);
    return sol;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols) {
    sol.status = SolveStatus::Inconsistent;
    return sol;
  }
  sol.x.assign(cols, 0);
  for (std::size_t i = 0; i < e.rank(); ++i) sol.x[e.pivots[i]] = e.reduced[i][cols];
  sol.status = e.rank() == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return sol;
}

RatMatrix nullspace(const RatMatrix& a, std::size_t cols) {
  RatMatrix padded = a;
  for (auto& row : padded) row.resize(cols, 0);
  const RowEchelon e = row_reduce(std::move(padded));
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace roofs::linalg
