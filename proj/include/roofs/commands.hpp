#pragma once

#include "roofs/config.hpp"
#include "roofs/mukai.hpp"
#include "roofs/report.hpp"

#include <cstdint>
#include <string>

namespace roofs::commands {

// Configuration problems (unknown names, bad files, unsupported bundles) throw
// roofs::Error; failures inside a pipeline are recorded in the report instead.

report::Report describe(const config::LoadedConfig& cfg);
report::Report lemma7(const config::LoadedConfig& cfg);
report::Report mukai(const config::LoadedConfig& cfg, std::int64_t bound = mukai::default_bound);

// Irreducible dictionary bundles on any quadric, or the pipeline bundles
// G, Gdual, C, IY on Q5.
report::Report bwb(int n, const std::string& descriptor, const Integer& twist);
report::Report bwb_case(int which);

report::Report motivic(int r_min, int r_max);

struct VerifyOptions {
  bool corrupt = false;  // perturb c_2 of the g2dagger bundle before loading
  std::int64_t bound = mukai::default_bound;
};

// One section per acceptance criterion, in order.
report::Report verify_all(const VerifyOptions& options = {});

}  // namespace roofs::commands
