#include "oack/json_io.hpp"

namespace oack {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(to_string(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const VRep& v) {
  Json out = Json::array();
  for (const auto& vertex : v.vertices) out.push_back(to_json(vertex));
  return out;
}

Json to_json(const BasicReport& r) {
  Json out;
  out["abs_value"] = to_string(r.abs_value);
  out["local_sup"] = to_string(r.local_bound);
  out["ratio"] = r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr);
  out["parity"] = r.even ? "even" : "odd";
  return out;
}

Json to_json(const IsometryReport& r) {
  Json out;
  out["matrix"] = to_json(r.map);
  out["kind"] = r.kind == IsoKind::canonical ? "canonical" : "noncanonical";
  out["sign"] = r.sign;
  Json phi = Json::array();
  for (int v : r.phi) phi.push_back(v < 0 ? Json(nullptr) : Json(v));
  out["phi"] = std::move(phi);
  if (r.kind == IsoKind::noncanonical) {
    out["p"] = r.p;
    out["t"] = r.t;
  }
  return out;
}

Json to_json(const Smoothness& r) {
  Json out;
  out["smooth"] = r.smooth;
  out["derivative"] = r.derivative ? to_json(*r.derivative) : Json(nullptr);
  return out;
}

Json to_json(const NormingFace& face) {
  Json out;
  out["point"] = to_json(face.x);
  Json extremes = Json::array();
  for (const auto& e : face.extremes) extremes.push_back(to_json(e));
  out["extremes"] = std::move(extremes);
  return out;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["suite"] = r.suite;
  out["cases"] = r.cases;
  out["ok"] = r.ok();
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item;
    item["where"] = f.where;
    item["expected"] = f.expected;
    item["actual"] = f.actual;
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  return out;
}

} // namespace oack
