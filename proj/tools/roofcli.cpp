#include "roofs/commands.hpp"
#include "roofs/config.hpp"
#include "roofs/error.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool is_usage_error(roofs::ErrorKind k) {
  using roofs::ErrorKind;
  return k == ErrorKind::Config || k == ErrorKind::UnsupportedBundle || k == ErrorKind::InvalidDimension ||
         k == ErrorKind::InvalidRank;
}

struct ConfigArgs {
  std::string name = "g2dagger";
  std::string path;

  roofs::config::LoadedConfig load() const {
    return path.empty() ? roofs::config::load_shipped(name) : roofs::config::load_file(path);
  }
};

int emit(const roofs::report::Report& rep, bool json) {
  if (json) std::cout << rep.to_json().dump(2) << "\n";
  else std::cout << rep.to_text();
  return rep.pass() ? kOk : kFailed;
}

void add_config_args(CLI::App* sub, ConfigArgs& args) {
  sub->add_option("config_name", args.name, "shipped configuration (g2dagger, d4)");
  sub->add_option("--config", args.path, "path to a JSON roof configuration")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory, lattice and cohomology computations for roofs of projective bundles"};
  app.require_subcommand(1);

  bool json = false;
  ConfigArgs cfg;
  std::int64_t bound = roofs::mukai::default_bound;
  int n = 5;
  std::string descriptor;
  long long twist = 0;
  std::optional<int> which;
  int r_min = 2, r_max = 12;
  bool corrupt = false;

  std::function<roofs::report::Report()> action;

  auto* describe = app.add_subcommand("describe", "relations, middle lattices and discriminant groups");
  add_config_args(describe, cfg);
  describe->callback([&] { action = [&] { return roofs::commands::describe(cfg.load()); }; });

  auto* lemma7 = app.add_subcommand("lemma7", "locus classes, side switch and discriminant residues");
  add_config_args(lemma7, cfg);
  lemma7->callback([&] { action = [&] { return roofs::commands::lemma7(cfg.load()); }; });

  auto* mukai = app.add_subcommand("mukai", "isotropic pair search and Mukai vector");
  add_config_args(mukai, cfg);
  mukai->add_option("--bound", bound, "coordinate bound of the search box")->check(CLI::Range(1, 1000));
  mukai->callback([&] { action = [&] { return roofs::commands::mukai(cfg.load(), bound); }; });

  auto* bwb = app.add_subcommand("bwb", "cohomology of homogeneous bundles on quadrics");
  bwb->add_option("n", n, "quadric dimension");
  bwb->add_option("bundle", descriptor, "O, S, Sdual, Sym2S, Sym2Sdual, Wedge2S, Wedge2Sdual, G, Gdual, C, IY");
  bwb->add_option("twist", twist, "twist by O(t)");
  bwb->add_option("--case", which, "vanishing pipeline 1, 2 or 3")->check(CLI::Range(1, 3));
  bwb->callback([&] {
    if (!which && descriptor.empty()) throw CLI::ValidationError("bwb", "give a bundle or --case");
    action = [&] {
      if (which) return roofs::commands::bwb_case(*which);
      return roofs::commands::bwb(n, descriptor, roofs::Integer(twist));
    };
  });

  auto* motivic = app.add_subcommand("motivic", "L-equivalence residual in the Grothendieck ring");
  motivic->add_option("r_min", r_min, "smallest rank (default 2)");
  motivic->add_option("r_max", r_max, "largest rank (default 12, or r_min when only r_min is given)");
  motivic->callback([&] {
    if (motivic->count("r_min") && !motivic->count("r_max")) r_max = r_min;
    action = [&] { return roofs::commands::motivic(r_min, r_max); };
  });

  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  verify->add_option("--bound", bound, "coordinate bound of the isotropic search")->check(CLI::Range(1, 1000));
  verify->add_flag("--corrupt", corrupt, "perturb the g2dagger Chern data (self-test of the failure path)");
  verify->callback([&] { action = [&] { return roofs::commands::verify_all({corrupt, bound}); }; });

  for (auto* sub : {describe, lemma7, mukai, bwb, motivic, verify}) sub->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return emit(action(), json);
  } catch (const roofs::Error& e) {
    std::cerr << "roofcli: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kUsage : kFailed;
  }
}
