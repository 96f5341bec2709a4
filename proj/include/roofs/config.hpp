#pragma once

#include "roofs/graded_ring.hpp"
#include "roofs/roof.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace roofs::config {

using Json = nlohmann::ordered_json;

// Chern data a side was built from, when it was given that way.
struct ChernData {
  ring::ChernVector bundle;   // before twisting
  Integer twist;
  ring::ChernVector twisted;  // the relation coefficients
};

struct LoadedConfig {
  roof::RoofConfig roof;
  Json document;
  std::optional<ChernData> chern, tilde_chern;

  const std::optional<ChernData>& chern_of(bool tilde_side) const { return tilde_side ? tilde_chern : chern; }
};

// Names of the embedded configurations: "g2dagger", "d4".
const std::vector<std::string>& shipped_names();
Json shipped_document(const std::string& name);

// Parses a configuration document. Any schema or consistency problem raises a
// Config error (or the error of the failing construction step).
LoadedConfig load(const Json& document);
LoadedConfig load_shipped(const std::string& name);
LoadedConfig load_file(const std::string& path);

}  // namespace roofs::config
