#include "roofs/mukai.hpp"

#include "roofs/error.hpp"
#include "roofs/linalg.hpp"

#include <optional>

namespace roofs::mukai {

MukaiReport mukai_vector(const roof::RoofConfig& config, std::int64_t bound) {
  const auto& lat = config.lattice(false);
  const auto& tlat = config.lattice(true);
  if (lat.rank() != 3 || tlat.rank() != 3)
    throw Error(ErrorKind::Domain, config.name() + ": the Mukai pipeline needs rank-3 middle lattices");

  MukaiReport rep;
  rep.ell = roof::locus_pushforward_class(lat).coordinates;
  rep.tilde_ell = roof::locus_pushforward_class(tlat).coordinates;
  rep.side = lattice::isotropic_pair_solve(lat.gram(), rep.ell, bound);
  rep.tilde = lattice::isotropic_pair_solve(tlat.gram(), rep.tilde_ell, bound);

  const auto v = lat.to_class(rep.side.canonical.a);
  rep.image = tlat.coordinates(config.forward().apply(v));
  rep.image_square = lattice::bilinear(tlat.gram(), rep.image, rep.image);

  const IntVector* cols[] = {&rep.tilde.canonical.a, &rep.tilde_ell, &rep.tilde.canonical.b};
  linalg::RatMatrix m(3, linalg::RatVector(3, 0));
  linalg::RatVector rhs(3, 0);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = Rational((*cols[c])[r]);
    rhs[r] = Rational(rep.image[r]);
  }
  const auto sol = linalg::solve(m, rhs, 3);
  if (sol.status != linalg::SolveStatus::Unique)
    throw Error(ErrorKind::Inconsistency, "tilde Mukai basis is degenerate");
  for (const auto& q : sol.x) {
    if (!is_integer(q)) throw Error(ErrorKind::Inconsistency, "switched vector is not in the integer span of the tilde basis");
    rep.raw.push_back(to_integer(q));
  }

  const Integer x = rep.raw[0], y = rep.raw[1], z = rep.raw[2];
  const std::pair<const char*, IntVector> variants[] = {
      {"identity", {x, y, z}}, {"swap", {z, y, x}}, {"sign", {-x, y, -z}}, {"swap+sign", {-z, y, -x}}};
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& cand = variants[i].second;
    if (cand[0] <= 0) continue;
    if (!best || cand[0] < variants[*best].second[0] ||
        (cand[0] == variants[*best].second[0] && cand < variants[*best].second))
      best = i;
  }
  if (!best) throw Error(ErrorKind::Inconsistency, "Mukai vector has zero rank component");
  rep.vector = variants[*best].second;
  rep.variant = variants[*best].first;
  return rep;
}

}  // namespace roofs::mukai
