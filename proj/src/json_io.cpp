#include "hsl/json_io.hpp"

#include <fstream>

namespace hsl {

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw std::invalid_argument("rational: expected string or integer");
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_to_json(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected array");
  Vec v;
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows; ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected array");
  std::vector<Vec> rows;
  for (const Json& r : j) rows.push_back(vec_from_json(r));
  if (rows.empty()) return Mat(0, 0);
  return Mat::from_rows(rows, rows[0].size());
}

Json arrangement_to_json(const Arrangement& arr) {
  return Json{{"U", mat_to_json(arr.u)}, {"a", vec_to_json(arr.a)}};
}

Arrangement arrangement_from_json(const Json& j) {
  return make_arrangement(mat_from_json(j.at("U")), vec_from_json(j.at("a")));
}

namespace {

Json indices_to_json(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

std::vector<int> indices_from_json(const Json& j) {
  std::vector<int> idx;
  for (const Json& x : j) {
    long v = x.get<long>();
    if (v < 1) throw std::invalid_argument("index sets are 1-based");
    idx.push_back(static_cast<int>(v - 1));
  }
  return idx;
}

}  // namespace

Json tetrad_to_json(const Tetrad& t) {
  return Json{{"a", vec_to_json(t.a)},
              {"I", indices_to_json(t.I)},
              {"J", indices_to_json(t.J)},
              {"K", indices_to_json(t.K)}};
}

Tetrad tetrad_from_json(const Json& j) {
  Tetrad t;
  t.a = vec_from_json(j.at("a"));
  t.I = indices_from_json(j.at("I"));
  t.J = indices_from_json(j.at("J"));
  t.K = indices_from_json(j.at("K"));
  validate_tetrad(t.a.size(), t);
  return t;
}

Json mixed_system_to_json(const MixedSystem& sys) {
  Json rows = Json::array();
  for (const LinCon& c : sys.rows)
    rows.push_back(Json{{"normal", vec_to_json(c.normal)},
                        {"rel", rel_str(c.rel)},
                        {"rhs", rat_to_json(c.rhs)}});
  return Json{{"n", sys.n}, {"rows", rows}};
}

MixedSystem mixed_system_from_json(const Json& j) {
  MixedSystem sys;
  sys.n = j.at("n").get<size_t>();
  for (const Json& r : j.at("rows"))
    sys.add(vec_from_json(r.at("normal")),
            rel_parse(r.at("rel").get<std::string>()),
            rat_from_json(r.at("rhs")));
  return sys;
}

Json circuit_to_json(const Circuit& c) {
  return Json{{"support", indices_to_json(c.support)},
              {"vector", vec_to_json(c.vector)}};
}

Json circuits_to_json(const std::vector<Circuit>& cs) {
  Json arr = Json::array();
  for (const Circuit& c : cs) arr.push_back(circuit_to_json(c));
  return Json{{"circuits", arr}};
}

Json face_count_report_to_json(const FaceCountReport& rep) {
  Json j{{"fA", rep.f_translation},
         {"fCone", rep.f_cone},
         {"fLift", rep.f_lift}};
  if (rep.identities_hold)
    j["identities_hold"] = *rep.identities_hold;
  else
    j["identities_hold"] = nullptr;
  j["hypothesis_met"] = rep.hypothesis_met;
  return j;
}

Vec parse_rat_list(const std::string& text) {
  Vec out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(Rat::parse(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(Rat::parse(cur));
  return out;
}

ConfigFile config_from_json(const Json& j) {
  ConfigFile c;
  c.u = mat_from_json(j.at("U"));
  if (j.contains("offsets"))
    for (const auto& [name, v] : j.at("offsets").items())
      c.offsets[name] = vec_from_json(v);
  if (j.contains("tetrads"))
    for (const auto& [name, t] : j.at("tetrads").items())
      c.tetrads[name] = tetrad_from_json(t);
  return c;
}

Json config_to_json(const ConfigFile& c) {
  Json j{{"U", mat_to_json(c.u)}};
  if (!c.offsets.empty()) {
    Json offs = Json::object();
    for (const auto& [name, v] : c.offsets) offs[name] = vec_to_json(v);
    j["offsets"] = offs;
  }
  if (!c.tetrads.empty()) {
    Json ts = Json::object();
    for (const auto& [name, t] : c.tetrads) ts[name] = tetrad_to_json(t);
    j["tetrads"] = ts;
  }
  return j;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  Json j;
  in >> j;
  return config_from_json(j);
}

}  // namespace hsl
