#include "roofs/commands.hpp"

#include "roofs/bwb.hpp"
#include "roofs/error.hpp"
#include "roofs/golden.hpp"
#include "roofs/lattice.hpp"
#include "roofs/motivic.hpp"

#include <optional>
#include <random>

namespace roofs::commands {

using ring::GradedClass;
using report::Json;
using report::Report;
using report::Section;
using report::to_json;

namespace {

struct Loaded {
  std::string name;
  std::optional<config::LoadedConfig> cfg;
  std::string error;
};

Loaded load_named(const std::string& name, bool corrupt) {
  Loaded l{name, std::nullopt, {}};
  try {
    auto doc = config::shipped_document(name);
    if (corrupt) doc["sides"][0]["chern"][1][0][1] = 3;
    l.cfg.emplace(config::load(doc));
  } catch (const Error& e) {
    l.error = e.what();
  }
  return l;
}

// Runs body for each config, or records why the config is unavailable.
template <class F>
void with_configs(Section& s, const std::vector<const Loaded*>& configs, F&& body) {
  for (const auto* l : configs) {
    if (!l->cfg) {
      s.error = l->name + ": " + l->error;
      return;
    }
    if (!report::run_stage(s, l->name, [&] { body(*l->cfg, *golden::roof(l->name)); })) return;
  }
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Json strings(const std::vector<GradedClass>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c);
  return out;
}

std::string tag(const config::LoadedConfig& c, bool tilde) { return c.roof.name() + " " + c.roof.side_data(tilde).side->name(); }

// (a*b)*c = a*(b*c) and a*b = b*a on every basis triple.
std::pair<bool, std::size_t> ring_axioms(const ring::RingPtr& r) {
  const std::size_t n = r->size();
  std::vector<GradedClass> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(GradedClass::basis(r, i));
  std::vector<std::vector<GradedClass>> prod(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i].push_back(basis[i] * basis[j]);
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(prod[i][j] == prod[j][i])) return {false, triples};
      for (std::size_t k = 0; k < n; ++k) {
        ++triples;
        if (!(prod[i][j] * basis[k] == basis[i] * prod[j][k])) return {false, triples};
      }
    }
  return {true, triples};
}

bool smith_valid(const lattice::IntegerMatrix& m, const lattice::SmithDecomposition& s) {
  if (lattice::multiply(lattice::multiply(s.U, m), s.V) != s.D) return false;
  if (!lattice::is_diagonal(s.D)) return false;
  const auto f = s.invariant_factors();
  for (const auto& x : f)
    if (x <= 0) return false;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] % f[i - 1] != 0) return false;
  if (abs_value(lattice::determinant(s.U)) != 1 || abs_value(lattice::determinant(s.V)) != 1) return false;
  return lattice::multiply(s.U, s.U_inverse) == lattice::identity(s.U.size());
}

Section criterion1(const Loaded& g2) {
  Section s;
  s.title = "1 Grothendieck relation derivation";
  with_configs(s, {&g2}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    const auto& ch = c.chern;
    if (!ch) throw Error(ErrorKind::Config, "first side is not built from Chern data");
    const auto base = c.roof.side()->base();
    s.add(report::golden("c(G)", strings(ch->bundle.components()), strings(g.bundle_chern)));
    s.add(report::golden("twist", to_json(ch->twist), to_json(g.twist)));
    const auto twisted = ring::chern_twist(ch->bundle, ch->twist, GradedClass::hyperplane(base));
    s.add(report::golden("c(G(1))", strings(twisted.components()), strings(g.twisted_chern)));
    s.add(report::golden("relation coefficients", strings(c.roof.side()->groth_coeffs()), strings(g.twisted_chern)));
    s.add(report::golden("relation", c.roof.side()->relation_string(), g.relation));
    s.add(report::property("c1 = index * L", ring::validate_mukai_pair(twisted, *base)));
  });
  return s;
}

Section criterion2(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "2 Intersection tables and discriminant groups";
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    for (bool tilde : {false, true}) {
      const auto& lat = c.roof.lattice(tilde);
      const auto who = tag(c, tilde);
      s.add(report::golden(who + " gram", to_json(lat.gram()), to_json(g.gram)));
      if (g.determinant_up_to_sign) {
        auto chk = report::golden(who + " |det|", to_json(abs_value(lat.determinant())), to_json(g.determinant));
        chk.note = "signed determinant " + to_string(lat.determinant());
        s.add(std::move(chk));
      } else {
        s.add(report::golden(who + " det", to_json(lat.determinant()), to_json(g.determinant)));
      }
      s.add(report::golden(who + " smith factors", to_json(lattice::smith_normal_form(lat.gram()).invariant_factors()),
                           to_json(g.smith)));
      s.add(report::golden(who + " discriminant group", lattice::discriminant_group(lat.gram()).to_string(), g.group));
    }
  });
  return s;
}

Section criterion3(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "3 Pushforward locus classes";
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    for (bool tilde : {false, true}) {
      const auto j = roof::locus_pushforward_class(c.roof.lattice(tilde));
      const auto who = tag(c, tilde);
      if (g.locus_up_to_sign) {
        const bool same = j.coordinates == g.locus, opposite = j.coordinates == negated(g.locus);
        auto chk = report::property(who + " locus = +-reference", same || opposite, to_json(j.coordinates));
        chk.expected = Json{{"up_to_sign", to_json(g.locus)}};
        if (opposite) chk.note = "normalized class is the negative of the reference representative, which pairs to -12";
        s.add(std::move(chk));
      } else {
        s.add(report::golden(who + " locus", to_json(j.coordinates), to_json(g.locus)));
      }
      bool orthogonal = true;
      for (const auto& x : j.orthogonality) orthogonal = orthogonal && x == 0;
      s.add(report::property(who + " orthogonality rows vanish", orthogonal, to_json(j.orthogonality)));
      s.add(report::golden(who + " pairing with xi^(r-1)*L", to_json(j.polarization_pairing), to_json(g.polarization_pairing)));
      s.add(report::property(who + " locus primitive", lattice::is_primitive(j.coordinates)));
    }
  });
  return s;
}

Section criterion4(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "4 Polarized sign law";
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    for (bool tilde : {false, true}) {
      const auto who = tag(c, tilde);
      const Integer v = roof::polarized_sign_check(c.roof, tilde);
      const Integer deg = roof::cy_degree(*c.roof.side_data(tilde).side);
      s.add(report::golden(who + " self-pairing", to_json(v), to_json(g.self_pairing)));
      s.add(report::golden(who + " (-1)^(r-1) deg Y", to_json(c.roof.rank() % 2 == 1 ? deg : Integer(-deg)),
                           to_json(g.self_pairing)));
    }
  });
  return s;
}

Section criterion5(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "5 Side switch";
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    const auto& lat = c.roof.lattice(false);
    s.add(report::golden(c.roof.name() + " switched locus", c.roof.forward().apply(lat.to_class(g.locus)).to_string(),
                         g.switched));
    for (bool tilde : {false, true}) {
      const auto& there = tilde ? c.roof.backward() : c.roof.forward();
      const auto& back = tilde ? c.roof.forward() : c.roof.backward();
      bool identity = true;
      for (const auto& b : c.roof.lattice(tilde).basis())
        identity = identity && back.apply_rational(there.apply_rational(b)) == b;
      s.add(report::property(tag(c, tilde) + " double switch is the identity on the middle basis", identity));
    }
  });
  return s;
}

Section criterion6(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "6 Discriminant residues";
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden& g) {
    const auto r = roof::lemma_seven_residues(c.roof);
    std::string found;
    for (const auto& w : r.witnesses)
      if (w.lift == g.witness_lift) found = w.cls.to_string();
    s.add(report::golden(c.roof.name() + " witness at k = " + to_string(g.witness_lift), found, g.witness));
    s.add(report::golden(c.roof.name() + " sign orbit", to_json(r.sign_orbit), to_json(g.sign_orbit)));
    bool unit = false;
    for (const auto& k : r.residues) unit = unit || k == 1 || k == r.modulus - 1;
    auto chk = report::property(c.roof.name() + " no residue = +-1 among k = 0.." + to_string(Integer(r.modulus - 1)), !unit,
                                to_json(r.residues));
    s.add(std::move(chk));
    s.add(report::golden(c.roof.name() + " isomorphism obstructed", r.iso_obstructed, g.obstructed));
  });
  return s;
}

Section criterion7(const Loaded& g2, std::int64_t bound) {
  Section s;
  s.title = "7 Mukai pipeline";
  with_configs(s, {&g2}, [&](const config::LoadedConfig& c, const golden::RoofGolden&) {
    const auto* g = golden::mukai(c.roof.name());
    const auto& lat = c.roof.lattice(false);
    const auto ell = roof::locus_pushforward_class(lat).coordinates;
    const auto sol = lattice::isotropic_pair_solve(lat.gram(), ell, bound);
    const Json in{{"bound", bound}, {"ell", to_json(ell)}};
    s.add(report::golden("theta(v)", to_json(sol.canonical.a), to_json(g->a), in));
    s.add(report::golden("theta(w)", to_json(sol.canonical.b), to_json(g->b), in));
    s.add(report::golden("solution orbits", sol.orbits.size(), g->orbits, in));
    s.add(report::golden("mukai vector", to_json(mukai::mukai_vector(c.roof, bound).vector), to_json(g->vector)));
  });
  return s;
}

Section criterion8() {
  Section s;
  s.title = "8 Cohomology of homogeneous bundles";
  report::run_stage(s, "cohomology", [&] {
    using bwb::CohomologyTable;
    const CohomologyTable cases[] = {CohomologyTable(std::map<int, Integer>{{0, 1}}), CohomologyTable(std::map<int, Integer>{{2, 1}}), CohomologyTable(std::map<int, Integer>{{2, 1}})};
    for (int i = 1; i <= 3; ++i) {
      const auto run = bwb::lemma_vanishings(i);
      if (run.underdetermined) throw Error(ErrorKind::Inconsistency, run.name + ": " + *run.underdetermined);
      s.add(report::golden(run.name, to_json(*run.result), to_json(cases[i - 1])));
    }
    const std::pair<const char*, int> acyclic[] = {{"Wedge2Sdual", -3}, {"Sdual", -3}, {"O", -3}, {"Sdual", -2}};
    for (const auto& [d, t] : acyclic)
      s.add(report::golden(std::string(d) + "(" + std::to_string(t) + ") acyclic",
                           to_json(bwb::bundle_cohomology(5, d, t)), to_json(CohomologyTable{})));
    s.add(report::golden("Sym2Sdual(-3)", to_json(bwb::bundle_cohomology(5, "Sym2Sdual", -3)),
                         to_json(CohomologyTable(std::map<int, Integer>{{2, 1}}))));
    const auto g1 = bwb::pipeline_cohomology("G", 1);
    if (!g1.result) throw Error(ErrorKind::Inconsistency, "G(1) underdetermined");
    s.add(report::golden("h^0(G(1))", to_json(g1.result->h(0)), 41));
    const auto o1 = bwb::bundle_cohomology(5, "O", 1).h(0);
    const auto s1 = bwb::bundle_cohomology(5, "Sdual", 1).h(0);
    s.add(report::golden("h^0(O(1))", to_json(o1), 7));
    s.add(report::golden("h^0(O(2))", to_json(bwb::bundle_cohomology(5, "O", 2).h(0)), 27));
    s.add(report::golden("h^0(Sdual(1))", to_json(s1), 48));
    s.add(report::golden("h^0(Sdual(1)) - h^0(O(1))", to_json(Integer(s1 - o1)), to_json(g1.result->h(0))));
    const auto iy = bwb::ideal_sections();
    if (!iy.result) throw Error(ErrorKind::Inconsistency, "I_Y(2) underdetermined");
    s.add(report::golden("h^0(I_Y(2))", to_json(iy.result->h(0)), 1));
  });
  return s;
}

Section criterion9(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "9 Motivic identities";
  report::run_stage(s, "motivic", [&] {
    bool all = true;
    for (int r = 2; r <= 12; ++r)
      all = all && (motivic::l_equivalence_residual(r) - motivic::expected_residual(r)).is_zero();
    s.add(report::property("residual identity for r = 2..12", all));
  });
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden&) {
    const int r = c.roof.rank();
    s.add(report::golden(c.roof.name() + " residual (r = " + std::to_string(r) + ")",
                         motivic::l_equivalence_residual(r).to_string(), motivic::expected_residual(r).to_string()));
  });
  return s;
}

Section criterion10(const Loaded& g2, const Loaded& d4) {
  Section s;
  s.title = "10 Structural properties";
  report::run_stage(s, "quadric rings", [&] {
    for (int n : {5, 6}) {
      const auto [ok, triples] = ring_axioms(ring::make_quadric_ring(n));
      s.add(report::property("Q" + std::to_string(n) + " ring axioms", ok, triples));
    }
  });
  with_configs(s, {&g2, &d4}, [&](const config::LoadedConfig& c, const golden::RoofGolden&) {
    for (bool tilde : {false, true}) {
      const auto [ok, triples] = ring_axioms(c.roof.side_data(tilde).side->bundle_ring());
      s.add(report::property(tag(c, tilde) + " bundle ring axioms", ok, triples));
    }
  });
  report::run_stage(s, "smith", [&] {
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> entry(-20, 20);
    int good = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      lattice::IntegerMatrix m(5, IntVector(5));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      if (smith_valid(m, lattice::smith_normal_form(m))) ++good;
    }
    s.add(report::golden("valid smith decompositions of random 5x5 matrices", good, 1000));
  });
  report::run_stage(s, "bott", [&] {
    std::size_t weights = 0;
    bool dichotomy = true;
    for (int n = 3; n <= 8; ++n) {
      const auto rs = bwb::quadric_group(n);
      for (const auto& d : bwb::irreducible_descriptors()) {
        if ((n != 5 && n != 6) && d.find('2') != std::string::npos) continue;
        for (int t = -10; t <= 10; ++t)
          for (const auto& w : bwb::bundle_weights(n, d, t)) {
            ++weights;
            dichotomy = dichotomy && bwb::bott(rs, w).nonzero() <= 1;
          }
      }
    }
    s.add(report::property("Bott dichotomy on the weight dictionary", dichotomy, weights));
  });
  report::run_stage(s, "sequences", [&] {
    const auto seqs = bwb::shipped_sequences();
    bool ok = true;
    for (const auto& q : seqs) {
      ok = ok && q.sub && q.mid && q.quot;
      if (!ok) break;
      ok = bwb::euler_characteristic(*q.mid) == bwb::euler_characteristic(*q.sub) + bwb::euler_characteristic(*q.quot);
      if (!ok) break;
    }
    s.add(report::property("chi(mid) = chi(sub) + chi(quot) on shipped sequences", ok, seqs.size()));
  });
  return s;
}

}  // namespace

Report verify_all(const VerifyOptions& options) {
  Report rep;
  rep.command = "verify-all";
  rep.echo = Json{{"bound", options.bound}, {"corrupt", options.corrupt}};
  const Loaded g2 = load_named("g2dagger", options.corrupt);
  const Loaded d4 = load_named("d4", false);
  rep.sections.push_back(criterion1(g2));
  rep.sections.push_back(criterion2(g2, d4));
  rep.sections.push_back(criterion3(g2, d4));
  rep.sections.push_back(criterion4(g2, d4));
  rep.sections.push_back(criterion5(g2, d4));
  rep.sections.push_back(criterion6(g2, d4));
  rep.sections.push_back(criterion7(g2, options.bound));
  rep.sections.push_back(criterion8());
  rep.sections.push_back(criterion9(g2, d4));
  rep.sections.push_back(criterion10(g2, d4));
  return rep;
}

}  // namespace roofs::commands
