#include "roofs/config.hpp"

#include "roofs/error.hpp"

#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace roofs::config {

namespace {

using ring::GradedClass;

const char* const kG2dagger = R"({
  "name": "g2dagger",
  "n": 5,
  "rank": 3,
  "k": 1,
  "polarization_degree": 12,
  "sides": [
    {
      "name": "Q5",
      "base": {"type": "quadric", "dimension": 5, "hyperplane": "L", "plane": "Pi"},
      "chern": [[["L", 2]], [["L^2", 2]], [["Pi", 2]]],
      "twist": 1,
      "middle_basis": [[0, "Pi"], [1, "L^2"], [2, "L"]],
      "printed_locus": [18, -5, 1]
    },
    {
      "name": "Q5~",
      "base": {"type": "quadric", "dimension": 5, "hyperplane": "Lt", "plane": "Pit"},
      "chern": [[["Lt", 2]], [["Lt^2", 2]], [["Pit", 2]]],
      "twist": 1,
      "middle_basis": [[0, "Pit"], [1, "Lt^2"], [2, "Lt"]],
      "printed_locus": [18, -5, 1]
    }
  ]
})";

const char* const kD4 = R"({
  "name": "d4",
  "n": 6,
  "rank": 4,
  "k": 1,
  "polarization_degree": 12,
  "sides": [
    {
      "name": "Q6",
      "base": {"type": "quadric", "dimension": 6, "hyperplane": "L", "plane": "Pi"},
      "relation": [[["L", 6]], [["L^2", 14]], [["Pi1", 14], ["Pi2", 16]], [["Pi1*L", 12]]],
      "middle_basis": [[0, "Pi1*L"], [1, "Pi1"], [1, "Pi2"], [2, "L^2"], [3, "L"]],
      "printed_locus": [-30, 14, 14, -6, 1]
    },
    {
      "name": "Q6~",
      "base": {"type": "quadric", "dimension": 6, "hyperplane": "Lt", "plane": "Pit"},
      "relation": [[["Lt", 6]], [["Lt^2", 14]], [["Pit1", 14], ["Pit2", 16]], [["Pit1*Lt", 12]]],
      "middle_basis": [[0, "Pit1*Lt"], [1, "Pit1"], [1, "Pit2"], [2, "Lt^2"], [3, "Lt"]],
      "printed_locus": [-30, 14, 14, -6, 1]
    }
  ]
})";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Config, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void allow_only(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail(where, "unknown field '" + it.key() + "'");
}

std::int64_t integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::string text(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

ring::RingPtr make_base(const Json& b, const std::string& where) {
  allow_only(b, {"type", "dimension", "hyperplane", "plane"}, where);
  const auto type = text(field(b, "type", where), where + ".type");
  const auto dim = integer(field(b, "dimension", where), where + ".dimension");
  if (dim < 1 || dim > 64) fail(where, "base dimension out of range");
  const auto h = b.contains("hyperplane") ? text(b["hyperplane"], where + ".hyperplane") : std::string();
  if (type == "quadric") {
    ring::QuadricLabels labels;
    if (!h.empty()) labels.hyperplane = h;
    if (b.contains("plane")) labels.plane = text(b["plane"], where + ".plane");
    return ring::make_quadric_ring(static_cast<int>(dim), labels);
  }
  if (type == "projective") {
    if (b.contains("plane")) fail(where, "projective spaces have no plane class");
    return ring::make_projective_space_ring(static_cast<int>(dim), h.empty() ? "h" : h);
  }
  fail(where, "unknown base type '" + type + "'");
}

// [["L", 2], ["Pi", 1]] -> class of one degree
GradedClass parse_class(const ring::RingPtr& base, const Json& terms, int expected_degree, const std::string& where) {
  if (!terms.is_array()) fail(where, "expected a list of [label, integer] pairs");
  std::vector<std::pair<std::string, Integer>> parsed;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) fail(where, "expected a [label, integer] pair");
    const auto label = text(t[0], where);
    if (!base->find(label)) fail(where, "unknown label '" + label + "' on " + base->name());
    parsed.emplace_back(label, Integer(integer(t[1], where)));
  }
  if (parsed.empty()) return GradedClass(base, expected_degree);
  auto c = GradedClass::from_terms(base, parsed);
  if (c.degree() != expected_degree)
    fail(where, "component " + std::to_string(expected_degree) + " has degree " + std::to_string(c.degree()));
  return c;
}

std::vector<GradedClass> parse_components(const ring::RingPtr& base, const Json& list, const std::string& where) {
  if (!list.is_array() || list.empty()) fail(where, "expected a non-empty list of components");
  std::vector<GradedClass> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(parse_class(base, list[i], static_cast<int>(i + 1), where + "[" + std::to_string(i) + "]"));
  return out;
}

struct ParsedSide {
  roof::SideData data;
  std::optional<ChernData> chern;
};

ParsedSide parse_side(const Json& s, const std::string& where) {
  allow_only(s, {"name", "base", "chern", "twist", "relation", "middle_basis", "printed_locus", "xi"}, where);
  const auto name = text(field(s, "name", where), where + ".name");
  const auto base = make_base(field(s, "base", where), where + ".base");
  const auto xi = s.contains("xi") ? text(s["xi"], where + ".xi") : std::string("xi");

  ParsedSide out;
  const bool has_chern = s.contains("chern"), has_relation = s.contains("relation");
  if (has_chern == has_relation) fail(where, "give exactly one of 'chern' and 'relation'");
  if (has_relation && s.contains("twist")) fail(where, "'twist' only applies to 'chern'");
  roof::SidePtr side;
  if (has_chern) {
    ring::ChernVector c(parse_components(base, s["chern"], where + ".chern"));
    const Integer t = s.contains("twist") ? Integer(integer(s["twist"], where + ".twist")) : Integer(0);
    auto twisted = ring::chern_twist(c, t, GradedClass::hyperplane(base));
    side = std::make_shared<const roof::RoofSide>(roof::build_side_from_chern(name, base, twisted, xi));
    out.chern = ChernData{std::move(c), t, std::move(twisted)};
  } else {
    side = std::make_shared<const roof::RoofSide>(name, base, parse_components(base, s["relation"], where + ".relation"), xi);
  }

  const auto& mb = field(s, "middle_basis", where);
  if (!mb.is_array()) fail(where + ".middle_basis", "expected a list of [xi_power, label] pairs");
  std::vector<roof::MonomialSpec> basis;
  for (const auto& m : mb) {
    if (!m.is_array() || m.size() != 2) fail(where + ".middle_basis", "expected a [xi_power, label] pair");
    const auto p = integer(m[0], where + ".middle_basis");
    if (p < 0 || p >= side->rank()) fail(where + ".middle_basis", "xi power out of range");
    const auto label = text(m[1], where + ".middle_basis");
    if (!base->find(label)) fail(where + ".middle_basis", "unknown label '" + label + "'");
    basis.push_back({static_cast<int>(p), label});
  }

  std::optional<IntVector> printed;
  if (s.contains("printed_locus")) {
    const auto& pl = s["printed_locus"];
    if (!pl.is_array() || pl.size() != basis.size())
      fail(where + ".printed_locus", "expected one integer per middle basis element");
    IntVector v;
    for (const auto& x : pl) v.emplace_back(integer(x, where + ".printed_locus"));
    printed = std::move(v);
  }
  out.data = roof::SideData{side, std::move(basis), std::move(printed)};
  return out;
}

}  // namespace

const std::vector<std::string>& shipped_names() {
  static const std::vector<std::string> names{"g2dagger", "d4"};
  return names;
}

Json shipped_document(const std::string& name) {
  if (name == "g2dagger") return Json::parse(kG2dagger);
  if (name == "d4") return Json::parse(kD4);
  throw Error(ErrorKind::Config, "unknown configuration '" + name + "'");
}

LoadedConfig load(const Json& doc) {
  const std::string where = "config";
  allow_only(doc, {"name", "n", "rank", "k", "polarization_degree", "sides"}, where);
  const auto name = text(field(doc, "name", where), where + ".name");
  const auto n = integer(field(doc, "n", where), where + ".n");
  const auto r = integer(field(doc, "rank", where), where + ".rank");
  const auto k = doc.contains("k") ? integer(doc["k"], where + ".k") : 1;
  const auto d = integer(field(doc, "polarization_degree", where), where + ".polarization_degree");
  const auto& sides = field(doc, "sides", where);
  if (!sides.is_array() || sides.size() != 2) fail(where + ".sides", "expected exactly two sides");

  auto a = parse_side(sides[0], where + ".sides[0]");
  auto b = parse_side(sides[1], where + ".sides[1]");
  for (const auto* s : {&a, &b}) {
    if (s->data.side->base_dimension() != n)
      fail(where, s->data.side->name() + " has base dimension " + std::to_string(s->data.side->base_dimension()) +
                      ", expected n = " + std::to_string(n));
    if (s->data.side->rank() != r)
      fail(where, s->data.side->name() + " has rank " + std::to_string(s->data.side->rank()) +
                      ", expected " + std::to_string(r));
  }
  roof::RoofConfig roof(name, a.data, b.data, Integer(k), Integer(d));
  return LoadedConfig{std::move(roof), doc, std::move(a.chern), std::move(b.chern)};
}

LoadedConfig load_shipped(const std::string& name) { return load(shipped_document(name)); }

LoadedConfig load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Config, path + ": " + e.what());
  }
  return load(doc);
}

}  // namespace roofs::config
