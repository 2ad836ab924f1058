#include "hcluster/angles.hpp"

#include <algorithm>
#include <bit>

#include "hcluster/errors.hpp"

namespace hcluster {

namespace {

// M(I) for the bitmask I; nullopt when the set is not separated.
std::optional<Indec> mixed_subset(const AngleLabelling& lab, unsigned mask,
                                  const ModelParams& params) {
  std::vector<int> vs;
  vs.reserve(lab.source.size());
  for (std::size_t i = 0; i < lab.source.size(); ++i) {
    vs.push_back((mask >> i) & 1u ? lab.source[i] : lab.target[i]);
  }
  std::sort(vs.begin(), vs.end());
  if (!is_separated(vs, params.m())) return std::nullopt;
  return Indec::make(std::move(vs), params);
}

unsigned prefix_mask(std::size_t j) { return (1u << (j + 1)) - 1u; }

}  // namespace

AngleLabelling angle_labelling(const Indec& source, const Indec& target, std::size_t rotation) {
  if (!intertwines(source, target)) {
    throw PreconditionViolation(source.to_string() + " does not intertwine " + target.to_string());
  }
  const std::size_t k = source.size();
  AngleLabelling lab;
  for (std::size_t i = 0; i < k; ++i) lab.source.push_back(source[(rotation + i) % k]);
  // x_i is the unique target vertex strictly between u_i and u_{i+1}.
  const auto tv = target.vertices();
  for (std::size_t i = 0; i < k; ++i) {
    const int lo = lab.source[i];
    const int hi = lab.source[(i + 1) % k];
    auto it = std::find_if(tv.begin(), tv.end(), [&](int v) {
      return lo < hi ? (lo < v && v < hi) : (v > lo || v < hi);
    });
    lab.target.push_back(*it);
  }
  return lab;
}

bool MixedAngle::has_indecomposable_terms() const {
  return std::all_of(middle.begin(), middle.end(),
                     [](const auto& term) { return term.size() <= 1; });
}

std::vector<MixedAngle> mixed_angles(const Indec& source, const Indec& target,
                                     const ModelParams& params) {
  const std::size_t k = source.size();
  std::vector<MixedAngle> out;
  for (std::size_t r = 0; r < k; ++r) {
    MixedAngle angle{source, target, angle_labelling(source, target, r), {}};
    angle.middle.resize(k - 1);
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      auto s = mixed_subset(angle.labelling, mask, params);
      if (s) angle.middle[std::popcount(mask) - 1].push_back(*s);
    }
    for (auto& term : angle.middle) std::sort(term.begin(), term.end());
    out.push_back(std::move(angle));
  }
  return out;
}

std::vector<StaircaseAngle> staircase_candidates(const Indec& x, const ClusterTilting& tilting) {
  if (tilting.contains(x)) {
    throw PreconditionViolation("staircase: " + x.to_string() + " is already a summand");
  }
  const ModelParams& params = tilting.params();
  const std::size_t k = x.size();
  std::vector<StaircaseAngle> out;
  for (const Indec& t : tilting.summands()) {
    if (!intertwines(t, x)) continue;
    for (std::size_t r = 0; r < k; ++r) {
      StaircaseAngle angle{x, angle_labelling(t, x, r), {}};
      bool ok = true;
      for (unsigned mask = 1; mask < (1u << k) && ok; ++mask) {
        const bool on_staircase = mask == prefix_mask(std::popcount(mask) - 1);
        if (!on_staircase) ok = !mixed_subset(angle.labelling, mask, params).has_value();
      }
      for (std::size_t j = 0; j < k && ok; ++j) {
        auto term = mixed_subset(angle.labelling, prefix_mask(j), params);
        if (term && !tilting.contains(*term)) ok = false;
        angle.terms.push_back(std::move(term));
      }
      if (ok) out.push_back(std::move(angle));
    }
  }
  return out;
}

StaircaseAngle staircase(const Indec& x, const ClusterTilting& tilting) {
  auto all = staircase_candidates(x, tilting);
  if (all.empty()) {
    throw NoResolution("no staircase resolves " + x.to_string() + " by the given tilting");
  }
  return std::move(all.front());
}

}  // namespace hcluster
