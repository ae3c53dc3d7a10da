#include "io/chainfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acs {

namespace {

using Json = nlohmann::ordered_json;

Rat coord_of(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const Error& e) {
      fail(Err::Parse, where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return rat(j.get<long>());
  fail(Err::Parse, where + ": expected a rational string");
}

Pt pt_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(Err::Parse, where + ": expected [x, y]");
  return Pt{coord_of(j[0], where + "[0]"), coord_of(j[1], where + "[1]")};
}

Json pt_json(const Pt& p) { return Json::array({rat_to_string(p.x), rat_to_string(p.y)}); }

Json affine_json(const Affine& f) {
  Json j = Json::object();
  j["m"] = Json::array({rat_to_string(f.m11), rat_to_string(f.m12), rat_to_string(f.m21),
                        rat_to_string(f.m22)});
  j["t"] = Json::array({rat_to_string(f.t1), rat_to_string(f.t2)});
  return j;
}

Affine affine_of(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("m") || !j.contains("t"))
    fail(Err::Parse, where + ": expected {\"m\": [4 entries], \"t\": [2 entries]}");
  const Json& m = j["m"];
  const Json& t = j["t"];
  if (!m.is_array() || m.size() != 4 || !t.is_array() || t.size() != 2)
    fail(Err::Parse, where + ": matrix needs 4 entries and translation 2");
  Affine f{coord_of(m[0], where + ".m[0]"), coord_of(m[1], where + ".m[1]"),
           coord_of(m[2], where + ".m[2]"), coord_of(m[3], where + ".m[3]"),
           coord_of(t[0], where + ".t[0]"), coord_of(t[1], where + ".t[1]")};
  if (sgn(det(f)) == 0) fail(Err::Parse, where + ": singular affine step");
  return f;
}

Json line_json(const Line& l) {
  return Json::array({l.a.get_str(), l.b.get_str(), l.c.get_str()});
}

Line line_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(Err::Parse, where + ": expected [a, b, c]");
  Rat a = coord_of(j[0], where + "[0]");
  Rat b = coord_of(j[1], where + "[1]");
  Rat c = coord_of(j[2], where + "[2]");
  if (sgn(a) == 0 && sgn(b) == 0) fail(Err::Parse, where + ": line needs (a, b) != 0");
  return line_from_coeffs(a, b, c);
}

Json step_json(const Step& s) {
  Json j = Json::object();
  if (const Affine* f = std::get_if<Affine>(&s)) {
    j["kind"] = "affine";
    j["map"] = affine_json(*f);
  } else if (const HpaMap* h = std::get_if<HpaMap>(&s)) {
    j["kind"] = "hpa";
    j["boundary"] = line_json(h->boundary);
    j["h1"] = affine_json(h->h1);
    j["h2"] = affine_json(h->h2);
  } else {
    const LpaMap& m = std::get<LpaMap>(s);
    j["kind"] = "lpa";
    Json dom = Json::array();
    for (const Pt& v : m.domain.v) dom.push_back(pt_json(v));
    j["domain"] = std::move(dom);
    j["alpha"] = affine_json(m.alpha);
    j["x0"] = pt_json(m.x0);
    j["y0"] = pt_json(m.y0);
  }
  return j;
}

Step step_of(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Err::Parse, where + ": expected a step object with \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "affine") {
      if (!j.contains("map")) fail(Err::Parse, where + ": missing \"map\"");
      return affine_of(j["map"], where + ".map");
    }
    if (kind == "hpa") {
      if (!j.contains("boundary") || !j.contains("h1") || !j.contains("h2"))
        fail(Err::Parse, where + ": expected \"boundary\", \"h1\", \"h2\"");
      return make_hpa(line_of(j["boundary"], where + ".boundary"),
                      affine_of(j["h1"], where + ".h1"), affine_of(j["h2"], where + ".h2"));
    }
    if (kind == "lpa") {
      if (!j.contains("domain") || !j.contains("alpha") || !j.contains("x0") || !j.contains("y0"))
        fail(Err::Parse, where + ": expected \"domain\", \"alpha\", \"x0\", \"y0\"");
      const Json& dom = j["domain"];
      if (!dom.is_array()) fail(Err::Parse, where + ".domain: expected an array of points");
      std::vector<Pt> ring;
      for (std::size_t i = 0; i < dom.size(); ++i)
        ring.push_back(pt_of(dom[i], where + ".domain[" + std::to_string(i) + "]"));
      return make_lpa(make_polygon(std::move(ring)), affine_of(j["alpha"], where + ".alpha"),
                      pt_of(j["x0"], where + ".x0"), pt_of(j["y0"], where + ".y0"));
    }
  } catch (const Error& e) {
    if (e.code() == Err::Parse) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
  fail(Err::Parse, where + ": unknown step kind \"" + kind + "\"");
}

}  // namespace

std::string serialize_chain(const Chain& c) {
  Json j = Json::object();
  Json steps = Json::array();
  for (const Step& s : c.steps) steps.push_back(step_json(s));
  j["steps"] = std::move(steps);
  return j.dump(2) + "\n";
}

Chain parse_chain(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Err::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    fail(Err::Parse, "chain: expected {\"steps\": [...]}");
  Chain c;
  for (std::size_t i = 0; i < j["steps"].size(); ++i)
    c.steps.push_back(step_of(j["steps"][i], "steps[" + std::to_string(i) + "]"));
  return c;
}

Chain load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot read chain file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain(buf.str());
}

void save_chain(const Chain& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Err::Io, "cannot write chain file: " + path);
  out << serialize_chain(c);
  if (!out) fail(Err::Io, "failed writing chain file: " + path);
}

}  // namespace acs
