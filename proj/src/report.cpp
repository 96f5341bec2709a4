#include "roofs/report.hpp"

#include <limits>
#include <sstream>

namespace roofs::report {

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(z));
  return Json(roofs::to_string(z));
}

Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(to_integer(q));
  return Json(roofs::to_string(q));
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const lattice::IntegerMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const bwb::CohomologyTable& t) {
  Json out = Json::object();
  for (const auto& [k, d] : t.entries()) out[std::to_string(k)] = to_json(d);
  return out;
}

Check golden(std::string name, Json value, Json expected, Json inputs) {
  Check c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.pass = value == expected;
  c.judged = true;
  c.value = std::move(value);
  c.expected = std::move(expected);
  return c;
}

Check info(std::string name, Json value, Json inputs) {
  Check c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.value = std::move(value);
  return c;
}

Check property(std::string name, bool holds, Json value, Json inputs) {
  Check c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.value = value.is_null() ? Json(holds) : std::move(value);
  c.pass = holds;
  c.judged = true;
  return c;
}

bool Section::pass() const {
  if (error) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool Report::pass() const {
  for (const auto& s : sections)
    if (!s.pass()) return false;
  return true;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["echo"] = echo;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json js;
    js["title"] = s.title;
    js["pass"] = s.pass();
    if (s.error) js["error"] = *s.error;
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json jc;
      jc["name"] = c.name;
      if (!c.inputs.empty()) jc["inputs"] = c.inputs;
      jc["value"] = c.value;
      if (c.expected) jc["expected"] = *c.expected;
      jc["pass"] = c.pass;
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    secs.push_back(std::move(js));
  }
  out["sections"] = std::move(secs);
  out["pass"] = pass();
  return out;
}

namespace {

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& s : sections) {
    os << (s.pass() ? "[PASS] " : "[FAIL] ") << s.title << "\n";
    if (s.error) os << "    error: " << *s.error << "\n";
    for (const auto& c : s.checks) {
      os << "    " << (c.judged ? (c.pass ? "ok   " : "FAIL ") : "     ") << c.name << ": " << render(c.value);
      if (c.expected && !c.pass) os << "  (expected " << render(*c.expected) << ")";
      os << "\n";
      if (!c.note.empty()) os << "         note: " << c.note << "\n";
    }
  }
  return os.str();
}

}  // namespace roofs::report
