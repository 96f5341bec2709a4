#include "roofs/golden.hpp"

namespace roofs::golden {

namespace {

RoofGolden make_g2dagger() {
  RoofGolden g;
  g.relation = "xi^3 - 5*L*xi^2 + 9*L^2*xi - 12*Pi";
  g.bundle_chern = {"2*L", "2*L^2", "2*Pi"};
  g.twist = 1;
  g.twisted_chern = {"5*L", "9*L^2", "12*Pi"};
  g.gram = {{0, 1, 5}, {1, 10, 32}, {5, 32, 82}};
  g.determinant = -12;
  g.smith = {1, 1, 12};
  g.group = "Z/12";
  g.locus = {18, -5, 1};
  g.polarization_pairing = 12;
  g.self_pairing = 12;
  g.switched = "7*Lt*xi^2 - 23*Lt^2*xi + 42*Pit";
  g.witness_lift = 7;
  g.witness = "Lt^2*xi - 7*Pit";
  g.sign_orbit = {5, 7};
  return g;
}

RoofGolden make_d4() {
  RoofGolden g;
  g.relation = "xi^4 - 6*L*xi^3 + 14*L^2*xi^2 - 14*Pi1*xi - 16*Pi2*xi + 12*Pi1*L";
  g.twist = 0;
  g.gram = {{0, 0, 0, 1, 6}, {0, 0, 1, 6, 22}, {0, 1, 0, 6, 22}, {1, 6, 6, 44, 126}, {6, 22, 22, 126, 308}};
  g.determinant = 12;
  g.determinant_up_to_sign = true;
  g.smith = {1, 1, 1, 1, 12};
  g.group = "Z/12";
  g.locus = {-30, 14, 14, -6, 1};
  g.locus_up_to_sign = true;
  g.polarization_pairing = 12;
  g.self_pairing = -12;
  g.switched = "-7*Lt*xi^3 + 30*Lt^2*xi^2 - 38*Pit1*xi - 50*Pit2*xi + 42*Pit1*Lt";
  g.witness_lift = -7;
  g.witness = "-Lt^2*xi^2 + 5*Pit1*xi + 4*Pit2*xi - 14*Pit1*Lt";
  g.sign_orbit = {5, 7};
  return g;
}

}  // namespace

const RoofGolden* roof(const std::string& name) {
  static const RoofGolden g2 = make_g2dagger();
  static const RoofGolden d4 = make_d4();
  if (name == "g2dagger") return &g2;
  if (name == "d4") return &d4;
  return nullptr;
}

const MukaiGolden* mukai(const std::string& name) {
  static const MukaiGolden g2{{1, 0, 0}, {-5, 1, 0}, 1, {2, 1, -3}};
  if (name == "g2dagger") return &g2;
  return nullptr;
}

}  // namespace roofs::golden
