#include "hcluster/tilting.hpp"

#include <algorithm>

#include "hcluster/errors.hpp"

namespace hcluster {

ClusterTilting::ClusterTilting(const ModelParams& params, std::vector<Indec> sorted_summands)
    : data_(std::make_shared<const Data>(Data{params, std::move(sorted_summands)})) {}

bool ClusterTilting::contains(const Indec& x) const { return position(x).has_value(); }

std::optional<std::size_t> ClusterTilting::position(const Indec& x) const {
  const auto& s = summands();
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

ClusterTilting validate_tilting(std::vector<Indec> candidate, const ModelParams& params) {
  for (const Indec& x : candidate) {
    // Re-validate: an Indec built for other parameters may be invalid here.
    Indec::make(std::vector<int>(x.vertices().begin(), x.vertices().end()), params);
  }
  std::sort(candidate.begin(), candidate.end());
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      if (intertwines(candidate[i], candidate[j])) {
        throw IntertwiningPair(candidate[i].to_string(), candidate[j].to_string());
      }
    }
  }
  if (candidate.size() != params.tilting_size()) {
    throw WrongCount(params.tilting_size(), candidate.size());
  }
  return ClusterTilting(params, std::move(candidate));
}

std::vector<ClusterTilting> enumerate_tiltings(const ModelParams& params,
                                               std::optional<std::size_t> limit) {
  const auto objects = enumerate_indecs(params);
  const std::size_t n = objects.size();
  const std::size_t k = params.tilting_size();

  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) compatible[i][j] = !intertwines(objects[i], objects[j]);
  }

  std::vector<ClusterTilting> out;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == k) {
      std::vector<Indec> summands;
      for (std::size_t i : chosen) summands.push_back(objects[i]);
      out.push_back(ClusterTilting(params, std::move(summands)));
      return !(limit && out.size() >= *limit);
    }
    for (std::size_t i = start; i + (k - chosen.size()) <= n; ++i) {
      bool ok = true;
      for (std::size_t c : chosen) {
        if (!compatible[c][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      const bool more = self(self, i + 1);
      chosen.pop_back();
      if (!more) return false;
    }
    return true;
  };
  if (!limit || *limit > 0) search(search, 0);
  return out;
}

ClusterTilting star_tilting(int vertex, const ModelParams& params) {
  std::vector<Indec> members;
  for (const Indec& x : enumerate_indecs(params)) {
    if (x.contains(vertex)) members.push_back(x);
  }
  return validate_tilting(std::move(members), params);
}

std::vector<Indec> find_mutations(const ClusterTilting& tilting, const Indec& u) {
  if (!tilting.contains(u)) throw NotASummand(u.to_string() + " is not a summand");
  std::vector<Indec> out;
  for (const Indec& candidate : enumerate_indecs(tilting.params())) {
    if (tilting.contains(candidate)) continue;
    bool ok = true;
    for (const Indec& t : tilting.summands()) {
      if (t != u && intertwines(t, candidate)) {
        ok = false;
        break;
      }
    }
    // The count is unchanged by a one-for-one swap, so compatibility with the
    // remaining summands is the whole cluster tilting condition.
    if (ok) out.push_back(candidate);
  }
  return out;
}

ClusterTilting mutate(const ClusterTilting& tilting, const Indec& u, const Indec& u_star) {
  if (!tilting.contains(u)) throw NotASummand(u.to_string() + " is not a summand");
  std::vector<Indec> summands;
  for (const Indec& t : tilting.summands()) {
    if (t != u) summands.push_back(t);
  }
  summands.push_back(u_star);
  return validate_tilting(std::move(summands), tilting.params());
}

}  // namespace hcluster
