#include "hcluster/exchange.hpp"

#include <algorithm>

#include "hcluster/errors.hpp"

namespace hcluster {

namespace {

struct AngleSearch {
  std::optional<MixedAngle> angle;
  bool shape_ok = false;
};

// An angle source -> ... -> target whose middle summands all lie in
// `allowed` (a summand list of the tilting without u).
AngleSearch find_angle(const Indec& source, const Indec& target, const std::vector<Indec>& allowed,
                       const ModelParams& params) {
  AngleSearch result;
  if (!intertwines(source, target)) return result;
  for (auto& angle : mixed_angles(source, target, params)) {
    const bool ok = std::all_of(angle.middle.begin(), angle.middle.end(), [&](const auto& term) {
      return std::all_of(term.begin(), term.end(), [&](const Indec& s) {
        return std::binary_search(allowed.begin(), allowed.end(), s);
      });
    });
    if (ok) return {std::move(angle), true};
    if (!result.angle) result.angle = std::move(angle);
  }
  return result;
}

}  // namespace

ExchangeReport exchange_report(const ClusterTilting& tilting, const Indec& u) {
  ExchangeReport report{u, find_mutations(tilting, u), {}, false, false};
  report.is_mutable = !report.mutations.empty();
  if (!report.is_mutable) return report;

  const auto& params = tilting.params();
  std::vector<Indec> rest;
  for (const Indec& t : tilting.summands()) {
    if (t != u) rest.push_back(t);
  }

  for (const Indec& u_star : report.mutations) {
    ExchangeReport candidate = report;
    candidate.u_star = u_star;
    candidate.ext_forward_one = hom_dim(u, shift(u_star, params, 1), params) == HomDim::one;
    candidate.ext_backward_one = hom_dim(u_star, shift(u, params, 1), params) == HomDim::one;
    auto forward = find_angle(u_star, u, rest, params);
    auto backward = find_angle(u, u_star, rest, params);
    candidate.angle_forward = std::move(forward.angle);
    candidate.angle_backward = std::move(backward.angle);
    candidate.forward_shape_ok = forward.shape_ok;
    candidate.backward_shape_ok = backward.shape_ok;
    candidate.is_exchange_pair = candidate.ext_forward_one && candidate.ext_backward_one &&
                                 forward.shape_ok && backward.shape_ok;
    if (candidate.is_exchange_pair) return candidate;
    if (!report.u_star) report = std::move(candidate);
  }
  return report;
}

}  // namespace hcluster
