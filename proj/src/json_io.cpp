#include "comsep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace comsep {

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where + ": expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  return j;
}

template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(where + ": " + e.what());
  }
}

}  // namespace

json encode_system(const SignSystem& m) {
  return json{{"elements", m.ground()->names()}, {"covectors", m.encoded()}};
}

SignSystem decode_system(const json& j) {
  const auto& elements = as_array(field(j, "elements", "$"), "$.elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i)
    names.push_back(as_string(elements[i], "$.elements[" + std::to_string(i) + "]"));
  auto ground = located("$.elements", [&] { return std::make_shared<const GroundSet>(std::move(names)); });
  const auto& cov = as_array(field(j, "covectors", "$"), "$.covectors");
  std::vector<SignVector> xs;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    const std::string where = "$.covectors[" + std::to_string(i) + "]";
    const std::string text = as_string(cov[i], where);
    xs.push_back(located(where, [&] { return SignVector::parse(ground, text); }));
  }
  return SignSystem(ground, xs);
}

json encode_set(const GroundSet& ground, ElementSet s) { return json(ground.names_of(s)); }

ElementSet decode_set(const GroundSet& ground, const json& j, const std::string& where) {
  as_array(j, where);
  ElementSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const std::string id = as_string(j[i], w);
    s.insert(located(w, [&] { return ground.index_of(id); }));
  }
  return s;
}

json encode_points(const PointConfiguration& p) {
  json pts = json::array();
  for (const auto& pt : p.points()) {
    json coords = json::array();
    for (const auto& c : pt.coords) coords.push_back(to_string(c));
    json item{{"id", pt.id}, {"coords", coords}};
    if (pt.label) item["label"] = *pt.label == Label::v ? "V" : "W";
    pts.push_back(std::move(item));
  }
  return json{{"dim", p.dim()}, {"points", pts}};
}

PointConfiguration decode_points(const json& j) {
  const auto& dim_j = field(j, "dim", "$");
  if (!dim_j.is_number_unsigned()) throw FormatError("$.dim: expected a non-negative integer");
  const auto dim = dim_j.get<std::size_t>();
  const auto& pts = as_array(field(j, "points", "$"), "$.points");
  std::vector<LabeledPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "$.points[" + std::to_string(i) + "]";
    LabeledPoint pt;
    pt.id = as_string(field(pts[i], "id", where), where + ".id");
    const auto& coords = as_array(field(pts[i], "coords", where), where + ".coords");
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const std::string w = where + ".coords[" + std::to_string(k) + "]";
      // Numbers are rejected outright: exactness requires the string form.
      const std::string text = as_string(coords[k], w);
      pt.coords.push_back(located(w, [&] { return parse_rational(text); }));
    }
    if (auto it = pts[i].find("label"); it != pts[i].end()) {
      const std::string label = as_string(*it, where + ".label");
      if (label == "V")
        pt.label = Label::v;
      else if (label == "W")
        pt.label = Label::w;
      else
        throw FormatError(where + ".label: expected \"V\" or \"W\"");
    }
    out.push_back(std::move(pt));
  }
  return located("$.points", [&] { return PointConfiguration(dim, std::move(out)); });
}

json encode_functional(const AffineFunctional& f) {
  json a = json::array();
  for (const auto& c : f.a) a.push_back(to_string(c));
  return json{{"a", a}, {"alpha", to_string(f.alpha)}};
}

AffineFunctional decode_functional(const json& j, std::size_t dim) {
  const auto& a = as_array(field(j, "a", "functional"), "functional.a");
  if (a.size() != dim) throw FormatError("functional.a: expected " + std::to_string(dim) + " entries");
  AffineFunctional f;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string w = "functional.a[" + std::to_string(k) + "]";
    const std::string text = as_string(a[k], w);
    f.a.push_back(located(w, [&] { return parse_rational(text); }));
  }
  const std::string alpha = as_string(field(j, "alpha", "functional"), "functional.alpha");
  f.alpha = located("functional.alpha", [&] { return parse_rational(alpha); });
  return f;
}

json encode_witness(const SignSystem& m, const WitnessReport& w) {
  const GroundSet& g = *m.ground();
  json out{{"D", encode_set(g, w.d)},
           {"contraction_snapshot", encode_system(w.contraction_snapshot)},
           {"circuit_verified", w.circuit_verified},
           {"single_minus_topes", w.single_minus_topes},
           {"extension_C", encode_set(g, w.extension_c)},
           {"extension_fails", w.extension_fails}};
  out["rank"] = w.rank ? json(*w.rank) : json(nullptr);
  return out;
}

json encode_record(const CounterexampleRecord& r) {
  json witness = json::object();
  const GroundSet& g = *r.system.ground();
  if (r.d) witness["D"] = encode_set(g, *r.d);
  if (r.c) witness["C"] = encode_set(g, *r.c);
  if (!r.note.empty()) witness["note"] = r.note;
  return json{{"system", encode_system(r.system)},
              {"target", r.target ? json(r.target->to_string()) : json(nullptr)},
              {"variant", to_string(r.variant)},
              {"claim", to_string(r.claim)},
              {"witness", witness}};
}

json encode_instance(const CorpusInstance& inst) {
  json out{{"seed", inst.seed}, {"index", inst.index}};
  const json system = encode_system(inst.system);
  for (auto& [k, v] : system.items()) out[k] = v;
  return out;
}

}  // namespace comsep
