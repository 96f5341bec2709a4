#pragma once

#include "roofs/numeric.hpp"

#include <optional>
#include <vector>

namespace roofs::linalg {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct Solution {
  SolveStatus status = SolveStatus::Inconsistent;
  RatVector x;  // a particular solution when consistent
};

// Solves A x = b for x with `cols` unknowns.
Solution solve(const RatMatrix& a, const RatVector& b, std::size_t cols);

// Basis of {x : A x = 0}.
RatMatrix nullspace(const RatMatrix& a, std::size_t cols);

}  // namespace roofs::linalg
