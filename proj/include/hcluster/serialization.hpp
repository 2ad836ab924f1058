#pragma once

// JSON forms: an object is an ascending integer array ([3,5,8,10]); a tilting
// is the lexicographically sorted array of its summands; a K0 vector is an
// object mapping the text form of each summand to its nonzero coefficient.

#include <json.hpp>

#include "hcluster/exchange.hpp"
#include "hcluster/k0.hpp"

namespace hcluster {

nlohmann::json to_json(const Indec& x);
nlohmann::json to_json(const ClusterTilting& t);
nlohmann::json to_json(const K0Vector& v);
nlohmann::json to_json(const CVector& cv);
nlohmann::json to_json(const StaircaseAngle& a);
nlohmann::json to_json(const MixedAngle& a);
nlohmann::json to_json(const ExchangeReport& r);
nlohmann::json to_json(const IntMatrix& m);

// Throw InvalidObject / NotATilting on malformed input.
Indec indec_from_json(const nlohmann::json& j, const ModelParams& params);
ClusterTilting tilting_from_json(const nlohmann::json& j, const ModelParams& params);
K0Vector k0_from_json(const nlohmann::json& j, const ClusterTilting& basis);

}  // namespace hcluster
