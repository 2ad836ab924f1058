#pragma once

#include <vector>

#include "hcluster/cyclic_model.hpp"
#include "hcluster/tilting.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Set as_set(const hcluster::Indec& x) { return {x.vertices().begin(), x.vertices().end()}; }

inline std::vector<oracle::Set> as_sets(const hcluster::ClusterTilting& t) {
  std::vector<oracle::Set> out;
  for (const auto& x : t.summands()) out.push_back(as_set(x));
  return out;
}

inline hcluster::Indec obj(const char* text, const hcluster::ModelParams& p) {
  return hcluster::Indec::parse(text, p);
}

}  // namespace testing_support
