#pragma once

#include "roofs/lattice.hpp"
#include "roofs/roof.hpp"

#include <cstdint>
#include <string>

namespace roofs::mukai {

inline constexpr std::int64_t default_bound = 50;

struct MukaiReport {
  lattice::MukaiSolution side, tilde;
  IntVector ell, tilde_ell;   // locus classes
  IntVector image;            // switched theta(v), tilde middle coordinates
  Integer image_square;       // image . image under the tilde gram
  IntVector raw;              // image in the basis (a~, ell~, b~)
  IntVector vector;           // normalized Mukai vector
  std::string variant;        // which symmetry produced it
};

// Coordinates of theta(v) after the side switch, in the tilde basis
// (theta~(v~), theta~(L~), theta~(w~)), normalized by swap and sign so that the
// first entry is positive and as small as possible.
MukaiReport mukai_vector(const roof::RoofConfig& config, std::int64_t bound = default_bound);

}  // namespace roofs::mukai
