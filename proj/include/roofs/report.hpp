#pragma once

#include "roofs/bwb.hpp"
#include "roofs/error.hpp"
#include "roofs/lattice.hpp"
#include "roofs/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace roofs::report {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings;
// non-integral rationals are "p/q" strings.
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const std::vector<Rational>& v);
Json to_json(const lattice::IntegerMatrix& m);
Json to_json(const bwb::CohomologyTable& t);  // {"0": 41}

struct Check {
  std::string name;
  Json inputs = Json::object();
  Json value;
  std::optional<Json> expected;
  bool pass = true;
  bool judged = false;  // golden and property checks carry a verdict
  std::string note;
};

// `value == expected` decides pass.
Check golden(std::string name, Json value, Json expected, Json inputs = Json::object());
// A computed value with no golden counterpart.
Check info(std::string name, Json value, Json inputs = Json::object());
// A property check.
Check property(std::string name, bool holds, Json value = nullptr, Json inputs = Json::object());

struct Section {
  std::string title;
  std::vector<Check> checks;
  std::optional<std::string> error;  // a stage that threw

  bool pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

struct Report {
  std::string command;
  Json echo = Json::object();
  std::vector<Section> sections;

  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

// Runs f, recording a thrown roofs::Error as the section's failing stage.
template <class F>
bool run_stage(Section& s, const std::string& stage, F&& f) {
  try {
    f();
    return true;
  } catch (const Error& e) {
    s.error = stage + ": " + e.what();
    return false;
  }
}

}  // namespace roofs::report
