#include "roofs/commands.hpp"

#include "roofs/bwb.hpp"
#include "roofs/error.hpp"
#include "roofs/golden.hpp"
#include "roofs/motivic.hpp"

namespace roofs::commands {

using report::Check;
using ring::GradedClass;
using report::Json;
using report::Report;
using report::Section;
using report::to_json;

namespace {

Json strings(const std::vector<GradedClass>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Json labels_json(const roof::MiddleLattice& lat) {
  Json out = Json::array();
  for (const auto& l : lat.labels()) out.push_back(l);
  return out;
}

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

Json echo_config(const config::LoadedConfig& cfg) {
  Json e;
  e["config"] = cfg.roof.name();
  e["n"] = cfg.roof.n();
  e["rank"] = cfg.roof.rank();
  e["k"] = to_json(cfg.roof.k());
  e["polarization_degree"] = to_json(cfg.roof.polarization_degree());
  return e;
}

std::string side_title(const config::LoadedConfig& cfg, bool tilde) {
  return std::string(tilde ? "tilde side " : "side ") + cfg.roof.side_data(tilde).side->name();
}

Integer sign_law_target(const roof::RoofConfig& config, bool tilde) {
  const Integer deg = roof::cy_degree(*config.side_data(tilde).side);
  return config.rank() % 2 == 1 ? deg : Integer(-deg);
}

}  // namespace

Report describe(const config::LoadedConfig& cfg) {
  Report rep;
  rep.command = "describe";
  rep.echo = echo_config(cfg);
  const auto* g = golden::roof(cfg.roof.name());

  for (bool tilde : {false, true}) {
    Section s;
    s.title = side_title(cfg, tilde);
    const auto& side = *cfg.roof.side_data(tilde).side;
    s.add(report::info("base", side.base()->name()));
    if (const auto& ch = cfg.chern_of(tilde)) {
      s.add(report::info("bundle chern classes", strings(ch->bundle.components())));
      s.add(report::info("twist", to_json(ch->twist)));
      s.add(report::info("twisted chern classes", strings(ch->twisted.components())));
    }
    s.add(report::info("relation coefficients", strings(side.groth_coeffs())));
    if (g && !tilde) s.add(report::golden("relation", side.relation_string() + " = 0", g->relation + " = 0"));
    else s.add(report::info("relation", side.relation_string() + " = 0"));
    s.add(report::info("mukai pair (c1 = index * hyperplane)",
                       ring::validate_mukai_pair(ring::ChernVector(side.groth_coeffs()), *side.base())));
    report::run_stage(s, "zero locus degree", [&] { s.add(report::info("zero locus degree", to_json(roof::cy_degree(side)))); });

    const auto& lat = cfg.roof.lattice(tilde);
    s.add(report::info("middle basis", labels_json(lat)));
    if (g) {
      s.add(report::golden("gram", to_json(lat.gram()), to_json(g->gram)));
      const Integer det = g->determinant_up_to_sign ? abs_value(lat.determinant()) : lat.determinant();
      auto c = report::golden(g->determinant_up_to_sign ? "|determinant|" : "determinant", to_json(det), to_json(g->determinant));
      if (g->determinant_up_to_sign) c.note = "signed determinant " + to_string(lat.determinant());
      s.add(std::move(c));
    } else {
      s.add(report::info("gram", to_json(lat.gram())));
      s.add(report::info("determinant", to_json(lat.determinant())));
    }
    report::run_stage(s, "discriminant", [&] {
      const auto snf = lattice::smith_normal_form(lat.gram());
      const auto group = lattice::discriminant_group(lat.gram());
      Json gens = Json::array();
      for (const auto& v : group.generators) gens.push_back(to_json(v));
      if (g) {
        s.add(report::golden("smith invariant factors", to_json(snf.invariant_factors()), to_json(g->smith)));
        s.add(report::golden("discriminant group", group.to_string(), g->group));
      } else {
        s.add(report::info("smith invariant factors", to_json(snf.invariant_factors())));
        s.add(report::info("discriminant group", group.to_string()));
      }
      s.add(report::info("discriminant generators (dual basis)", gens));
    });
    rep.sections.push_back(std::move(s));
  }

  Section sw;
  sw.title = "side switch xi -> xi, L -> k*xi - Lt";
  for (bool back : {false, true}) {
    const auto& m = back ? cfg.roof.backward() : cfg.roof.forward();
    const auto& bl = m.from()->base();
    Json imgs = Json::object();
    for (std::size_t i = 0; i < m.generator_images().size(); ++i)
      imgs[bl->generators()[i].name] = m.generator_images()[i].to_string();
    sw.add(report::info(m.from()->name() + " -> " + m.to()->name() + " generator images", imgs));
    sw.add(report::info(m.from()->name() + " -> " + m.to()->name() + " respects products", m.is_ring_isomorphism()));
  }
  rep.sections.push_back(std::move(sw));
  return rep;
}

Report lemma7(const config::LoadedConfig& cfg) {
  Report rep;
  rep.command = "lemma7";
  rep.echo = echo_config(cfg);
  const auto& config = cfg.roof;
  const auto* g = golden::roof(config.name());

  Section loci;
  loci.title = "locus classes";
  const bool loci_ok = report::run_stage(loci, "locus", [&] {
    for (bool tilde : {false, true}) {
      const auto& lat = config.lattice(tilde);
      const auto j = roof::locus_pushforward_class(lat);
      const std::string who = config.side_data(tilde).side->name();
      loci.add(report::info(who + " locus class", j.cls.to_string()));
      loci.add(report::info(who + " coordinates", to_json(j.coordinates)));
      bool orthogonal = true;
      for (const auto& x : j.orthogonality) orthogonal = orthogonal && x == 0;
      loci.add(report::property(who + " orthogonal to pullback classes", orthogonal, to_json(j.orthogonality)));
      if (g) {
        loci.add(report::golden(who + " pairing with xi^(r-1)*L", to_json(j.polarization_pairing), to_json(g->polarization_pairing)));
        if (g->locus_up_to_sign) {
          const bool same = j.coordinates == g->locus, opposite = j.coordinates == negated(g->locus);
          auto c = report::property(who + " locus equals reference up to sign", same || opposite, to_json(j.coordinates));
          c.expected = Json{{"up_to_sign", to_json(g->locus)}};
          if (opposite) c.note = "normalized class is the negative of the reference representative";
          loci.add(std::move(c));
        } else {
          loci.add(report::golden(who + " locus equals reference", to_json(j.coordinates), to_json(g->locus)));
        }
      } else {
        loci.add(report::property(who + " pairing with xi^(r-1)*L positive", j.polarization_pairing > 0,
                                  to_json(j.polarization_pairing)));
      }
    }
  });
  rep.sections.push_back(std::move(loci));
  if (!loci_ok) return rep;

  Section signs;
  signs.title = "polarized sign law";
  report::run_stage(signs, "sign law", [&] {
    for (bool tilde : {false, true}) {
      const Integer v = roof::polarized_sign_check(config, tilde);
      const std::string who = config.side_data(tilde).side->name();
      if (g) signs.add(report::golden(who + " self-pairing", to_json(v), to_json(g->self_pairing)));
      signs.add(report::golden(who + " self-pairing = (-1)^(r-1) deg Y", to_json(v), to_json(sign_law_target(config, tilde))));
    }
  });
  rep.sections.push_back(std::move(signs));

  Section res;
  res.title = "discriminant residues";
  report::run_stage(res, "side switch", [&] {
    const auto r = roof::lemma_seven_residues(config);
    const auto& lat = config.lattice(false);
    const auto switched = config.forward().apply(lat.to_class(r.printed));
    if (g) res.add(report::golden("switched representative", switched.to_string(), g->switched));
    else res.add(report::info("switched representative", switched.to_string()));
    res.add(report::info("switch respects products", config.forward().is_ring_isomorphism()));
    res.add(report::info("modulus", to_json(r.modulus)));
    res.add(report::info("residues", to_json(r.residues)));
    Json ws = Json::array();
    for (const auto& w : r.witnesses)
      ws.push_back(Json{{"k", to_json(w.lift)}, {"class", w.cls.to_string()}, {"coordinates", to_json(w.coordinates)}});
    res.add(report::info("witnesses (j - k*jt)/d", ws));
    if (g) {
      std::string found;
      for (const auto& w : r.witnesses)
        if (w.lift == g->witness_lift) found = w.cls.to_string();
      res.add(report::golden("witness at k = " + to_string(g->witness_lift), found, g->witness));
      res.add(report::golden("sign orbit", to_json(r.sign_orbit), to_json(g->sign_orbit)));
      res.add(report::golden("isomorphism obstructed", r.iso_obstructed, g->obstructed));
    } else {
      res.add(report::info("sign orbit", to_json(r.sign_orbit)));
      res.add(report::info("isomorphism obstructed", r.iso_obstructed));
    }
  });
  rep.sections.push_back(std::move(res));
  return rep;
}

Report mukai(const config::LoadedConfig& cfg, std::int64_t bound) {
  Report rep;
  rep.command = "mukai";
  rep.echo = echo_config(cfg);
  rep.echo["bound"] = bound;
  const auto* g = golden::mukai(cfg.roof.name());
  Section s;
  s.title = "Mukai vector";
  report::run_stage(s, "mukai", [&] {
    const auto m = mukai::mukai_vector(cfg.roof, bound);
    const Json a = to_json(m.side.canonical.a), b = to_json(m.side.canonical.b);
    if (g) {
      s.add(report::golden("theta(v)", a, to_json(g->a)));
      s.add(report::golden("theta(w)", b, to_json(g->b)));
      s.add(report::golden("solution orbits", m.side.orbits.size(), g->orbits));
    } else {
      s.add(report::info("theta(v)", a));
      s.add(report::info("theta(w)", b));
      s.add(report::info("solution orbits", m.side.orbits.size()));
    }
    s.add(report::info("isotropic vectors found", m.side.isotropic_vectors));
    s.add(report::info("tilde theta(v)", to_json(m.tilde.canonical.a)));
    s.add(report::info("tilde theta(w)", to_json(m.tilde.canonical.b)));
    s.add(report::info("switched theta(v)", to_json(m.image)));
    s.add(report::property("switched theta(v) isotropic", m.image_square == 0, to_json(m.image_square)));
    s.add(report::info("in basis (tilde v, tilde L, tilde w)", to_json(m.raw)));
    s.add(report::info("normalization", m.variant));
    if (g) s.add(report::golden("mukai vector", to_json(m.vector), to_json(g->vector)));
    else s.add(report::info("mukai vector", to_json(m.vector)));
  });
  rep.sections.push_back(std::move(s));
  return rep;
}

namespace {

void add_pipeline(Section& s, const bwb::PipelineRun& run) {
  for (const auto& step : run.steps)
    s.add(report::info(step.name, to_json(step.table), Json{{"from", step.description}}));
  if (run.underdetermined) s.error = "underdetermined: " + *run.underdetermined;
}

}  // namespace

Report bwb(int n, const std::string& descriptor, const Integer& twist) {
  Report rep;
  rep.command = "bwb";
  rep.echo = Json{{"n", n}, {"bundle", descriptor}, {"twist", to_json(twist)}};
  Section s;
  s.title = "H^*(Q" + std::to_string(n) + ", " + descriptor + "(" + to_string(twist) + "))";
  if (bwb::is_irreducible_descriptor(descriptor)) {
    const auto rs = bwb::quadric_group(n);
    const auto weights = bwb::bundle_weights(n, descriptor, twist);
    Json ws = Json::array();
    for (const auto& w : weights) ws.push_back(bwb::to_string(w));
    s.add(report::info("group", rs.name()));
    s.add(report::info("highest weights", ws));
    s.add(report::info("rank", to_json(bwb::fiber_rank(n, descriptor))));
    const auto t = bwb::bundle_cohomology(n, descriptor, twist);
    s.add(report::info("cohomology", to_json(t)));
    s.add(report::info("euler characteristic", to_json(bwb::euler_characteristic(t))));
  } else if (bwb::is_pipeline_descriptor(descriptor)) {
    if (n != 5) throw Error(ErrorKind::UnsupportedBundle, descriptor + " is only defined on Q5");
    const auto run = bwb::pipeline_cohomology(descriptor, twist);
    add_pipeline(s, run);
    if (run.result) {
      s.add(report::info("cohomology", to_json(*run.result)));
      s.add(report::info("euler characteristic", to_json(bwb::euler_characteristic(*run.result))));
    }
  } else {
    throw Error(ErrorKind::UnsupportedBundle, "unknown bundle '" + descriptor + "'");
  }
  rep.sections.push_back(std::move(s));
  return rep;
}

Report bwb_case(int which) {
  static const bwb::CohomologyTable expected[] = {
      bwb::CohomologyTable(std::map<int, Integer>{{0, 1}}), bwb::CohomologyTable(std::map<int, Integer>{{2, 1}}), bwb::CohomologyTable(std::map<int, Integer>{{2, 1}})};
  if (which < 1 || which > 3) throw Error(ErrorKind::Config, "vanishing case must be 1, 2 or 3");
  Report rep;
  rep.command = "bwb";
  rep.echo = Json{{"case", which}};
  const auto run = bwb::lemma_vanishings(which);
  Section s;
  s.title = run.name;
  add_pipeline(s, run);
  if (run.result) s.add(report::golden("result", to_json(*run.result), to_json(expected[which - 1])));
  rep.sections.push_back(std::move(s));
  return rep;
}

Report motivic(int r_min, int r_max) {
  if (r_min < 2 || r_max < r_min) throw Error(ErrorKind::InvalidRank, "rank range must satisfy 2 <= r_min <= r_max");
  Report rep;
  rep.command = "motivic";
  rep.echo = Json{{"r_min", r_min}, {"r_max", r_max}};
  Section s;
  s.title = "L-equivalence residual [M] - [M] (other side)";
  for (int r = r_min; r <= r_max; ++r) {
    const auto residual = motivic::l_equivalence_residual(r);
    const auto expected = motivic::expected_residual(r);
    const Json in{{"r", r}};
    s.add(report::info("[M], r = " + std::to_string(r), motivic::fibration_class(r).to_string(), in));
    auto c = report::golden("residual, r = " + std::to_string(r), residual.to_string(), expected.to_string(), in);
    c.pass = c.pass && (residual - expected).is_zero();
    s.add(std::move(c));
  }
  rep.sections.push_back(std::move(s));
  return rep;
}

}  // namespace roofs::commands
