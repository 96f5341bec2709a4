#pragma once

#include "roofs/lattice.hpp"
#include "roofs/numeric.hpp"

#include <string>
#include <vector>

namespace roofs::golden {

// Published values for the shipped roofs, in this library's notation.
struct RoofGolden {
  std::string relation;                  // Grothendieck relation of the first side, "= 0" implied
  std::vector<std::string> bundle_chern; // untwisted Chern classes, empty when given as a relation
  Integer twist;
  std::vector<std::string> twisted_chern;
  lattice::IntegerMatrix gram;
  Integer determinant;
  bool determinant_up_to_sign = false;
  IntVector smith;
  std::string group;
  IntVector locus;                       // locus class coordinates
  bool locus_up_to_sign = false;
  Integer polarization_pairing;
  Integer self_pairing;
  std::string switched;                  // image of the printed locus representative
  Integer witness_lift;
  std::string witness;
  IntVector sign_orbit;
  bool obstructed = true;
};

// nullptr for configurations without published values.
const RoofGolden* roof(const std::string& name);

struct MukaiGolden {
  IntVector a, b;
  std::size_t orbits;
  IntVector vector;
};

const MukaiGolden* mukai(const std::string& name);

}  // namespace roofs::golden
