#pragma once

#include "roofs/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace roofs::lattice {

// Row-major, arbitrary precision. Shape is checked by the functions that care.
using IntegerMatrix = std::vector<IntVector>;

IntegerMatrix identity(std::size_t n);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& a);
IntVector apply(const IntegerMatrix& a, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
// a^T G b
Integer bilinear(const IntegerMatrix& gram, const IntVector& a, const IntVector& b);

bool is_symmetric(const IntegerMatrix& m);
bool is_diagonal(const IntegerMatrix& m);
std::size_t columns(const IntegerMatrix& m);

// Fraction-free elimination.
Integer determinant(const IntegerMatrix& m);

Integer content(const IntVector& v);
bool is_primitive(const IntVector& v);

struct SmithDecomposition {
  IntegerMatrix U, D, V;
  IntegerMatrix U_inverse;
  std::size_t rank = 0;
  // Diagonal of D, length min(rows, cols).
  IntVector diagonal() const;
  // Nonzero diagonal entries; these satisfy d1 | d2 | ...
  IntVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

struct DiscriminantGroup {
  IntVector factors;                  // entries > 1, each divides the next
  std::vector<IntVector> generators;  // one per factor, in dual-basis coordinates
  Integer order() const;
  std::string to_string() const;      // "Z/12", "Z/2 x Z/4", "0"
};

DiscriminantGroup discriminant_group(const IntegerMatrix& gram);

// Saturated basis of {v : v . gram . s = 0 for all s}, in a Hermite form keyed
// on the last coordinates (for a rank-1 answer: last nonzero entry positive).
std::vector<IntVector> orthogonal_kernel(const IntegerMatrix& gram,
                                         const std::vector<IntVector>& sublattice);

struct IsotropicPair {
  IntVector a, b;
  bool operator==(const IsotropicPair&) const = default;
};

struct MukaiSolution {
  IsotropicPair canonical;
  std::vector<IsotropicPair> orbits;  // one canonical representative per orbit, sorted
  std::size_t isotropic_vectors = 0;  // candidates found before pairing
};

// Canonical form of an orbit under swap and global sign: among the members whose
// a has positive leading entry, take the one whose a leads earliest, then the
// lexicographically smallest (a, b).
IsotropicPair canonical_pair(const IsotropicPair& p);

MukaiSolution isotropic_pair_solve(const IntegerMatrix& gram, const IntVector& ell,
                                   std::int64_t bound);

}  // namespace roofs::lattice
