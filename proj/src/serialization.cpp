#include "hcluster/serialization.hpp"

#include "hcluster/errors.hpp"

namespace hcluster {

using nlohmann::json;

json to_json(const Indec& x) { return json(std::vector<int>(x.vertices().begin(), x.vertices().end())); }

json to_json(const ClusterTilting& t) {
  json out = json::array();
  for (const Indec& x : t.summands()) out.push_back(to_json(x));
  return out;
}

json to_json(const K0Vector& v) {
  json out = json::object();
  for (const auto& [t, c] : v.terms()) out[t.to_string()] = c;
  return out;
}

json to_json(const CVector& cv) {
  json values = json::object();
  for (std::size_t i = 0; i < cv.values.size(); ++i) {
    if (cv.values[i] != 0) values[cv.basis_t.summands()[i].to_string()] = cv.values[i];
  }
  return {{"u", to_json(cv.u)},
          {"values", values},
          {"dense", cv.values},
          {"basis_t", to_json(cv.basis_t)},
          {"sign", std::string(to_string(sign_coherence(cv)))}};
}

json to_json(const StaircaseAngle& a) {
  json terms = json::array();
  // Listed E_d first, in the order the angle is written.
  for (std::size_t j = a.terms.size(); j-- > 0;) {
    terms.push_back(a.terms[j] ? to_json(*a.terms[j]) : json(nullptr));
  }
  return {{"target", to_json(a.target)},
          {"terms", terms},
          {"source_labelling", a.labelling.source},
          {"target_labelling", a.labelling.target}};
}

json to_json(const MixedAngle& a) {
  json middle = json::array();
  for (std::size_t j = a.middle.size(); j-- > 0;) {
    json term = json::array();
    for (const Indec& s : a.middle[j]) term.push_back(to_json(s));
    middle.push_back(term);
  }
  return {{"source", to_json(a.source)},
          {"target", to_json(a.target)},
          {"middle", middle},
          {"source_labelling", a.labelling.source},
          {"target_labelling", a.labelling.target}};
}

json to_json(const ExchangeReport& r) {
  json mutations = json::array();
  for (const Indec& m : r.mutations) mutations.push_back(to_json(m));
  json out = {{"u", to_json(r.u)},
              {"mutations", mutations},
              {"is_mutable", r.is_mutable},
              {"is_exchange_pair", r.is_exchange_pair}};
  if (r.u_star) {
    out["u_star"] = to_json(*r.u_star);
    out["ext_forward_one"] = r.ext_forward_one;
    out["ext_backward_one"] = r.ext_backward_one;
    out["forward_shape_ok"] = r.forward_shape_ok;
    out["backward_shape_ok"] = r.backward_shape_ok;
  }
  if (r.angle_forward) out["angle_forward"] = to_json(*r.angle_forward);
  if (r.angle_backward) out["angle_backward"] = to_json(*r.angle_backward);
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Indec indec_from_json(const json& j, const ModelParams& params) {
  if (!j.is_array()) throw InvalidObject("object must be a JSON array of integers: " + j.dump());
  std::vector<int> vs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidObject("object must be a JSON array of integers: " + j.dump());
    vs.push_back(e.get<int>());
  }
  return Indec::make(std::move(vs), params);
}

ClusterTilting tilting_from_json(const json& j, const ModelParams& params) {
  if (!j.is_array()) throw NotATilting("tilting must be a JSON array of objects");
  std::vector<Indec> members;
  for (const auto& e : j) members.push_back(indec_from_json(e, params));
  return validate_tilting(std::move(members), params);
}

K0Vector k0_from_json(const json& j, const ClusterTilting& basis) {
  if (!j.is_object()) throw InvalidObject("K0 vector must be a JSON object");
  K0Vector v(basis);
  for (const auto& [key, value] : j.items()) {
    v.add(Indec::parse(key, basis.params()), value.get<std::int64_t>());
  }
  return v;
}

}  // namespace hcluster
