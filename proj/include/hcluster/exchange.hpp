#pragma once

#include <optional>
#include <vector>

#include "hcluster/angles.hpp"
#include "hcluster/tilting.hpp"

namespace hcluster {

// Mutability and exchange-pair status of one summand u of a tilting U.
//
// u and u* form an exchange pair when Hom(u, Sigma^d u*) and
// Hom(u*, Sigma^d u) are one-dimensional and there are angles
//   u* -> e_d -> ... -> e_1 -> u -> Sigma^d u*   (forward)
//   u  -> f_d -> ... -> f_1 -> u* -> Sigma^d u   (backward)
// whose middle terms are sums of summands of U other than u.
struct ExchangeReport {
  Indec u;
  std::vector<Indec> mutations;
  std::optional<Indec> u_star;
  bool is_mutable = false;
  bool is_exchange_pair = false;
  bool ext_forward_one = false;   // dim Hom(u, Sigma^d u*) == 1
  bool ext_backward_one = false;  // dim Hom(u*, Sigma^d u) == 1
  // The angles with the required shape when found; otherwise the first angle
  // tried, kept for diagnosis (shape flag false).
  std::optional<MixedAngle> angle_forward;
  std::optional<MixedAngle> angle_backward;
  bool forward_shape_ok = false;
  bool backward_shape_ok = false;
};

// Examines every mutation of u and reports the first that forms an exchange
// pair (or the first mutation if none does). Throws NotASummand.
ExchangeReport exchange_report(const ClusterTilting& tilting, const Indec& u);

}  // namespace hcluster
