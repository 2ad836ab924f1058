#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hcluster/cyclic_model.hpp"

namespace hcluster {

// A basic cluster tilting object: C(n+d-1, d) mutually non-intertwining
// indecomposables. Summands are kept in lexicographic order, which is also
// the basis order of the split Grothendieck group. Copies share storage.
class ClusterTilting {
 public:
  const ModelParams& params() const noexcept { return data_->params; }
  const std::vector<Indec>& summands() const noexcept { return data_->summands; }
  std::size_t size() const noexcept { return data_->summands.size(); }
  bool contains(const Indec& x) const;
  // Position of x in the basis order.
  std::optional<std::size_t> position(const Indec& x) const;

  friend bool operator==(const ClusterTilting& a, const ClusterTilting& b) {
    return a.data_ == b.data_ ||
           (a.params() == b.params() && a.summands() == b.summands());
  }

 private:
  struct Data {
    ModelParams params;
    std::vector<Indec> summands;
  };
  ClusterTilting(const ModelParams& params, std::vector<Indec> sorted_summands);

  std::shared_ptr<const Data> data_;

  friend ClusterTilting validate_tilting(std::vector<Indec>, const ModelParams&);
  friend std::vector<ClusterTilting> enumerate_tiltings(const ModelParams&, std::optional<std::size_t>);
};

// Throws InvalidObject (member not valid at these params), WrongCount or
// IntertwiningPair. Duplicates are collapsed before counting.
ClusterTilting validate_tilting(std::vector<Indec> candidate, const ModelParams& params);

// All cluster tilting objects, by backtracking over the lexicographic order of
// indecomposables; with `limit`, only the first `limit` found.
std::vector<ClusterTilting> enumerate_tiltings(const ModelParams& params,
                                               std::optional<std::size_t> limit = std::nullopt);

// The indecomposables containing `vertex`. For d >= 1 these are mutually
// non-intertwining; the result is validated like any other candidate.
ClusterTilting star_tilting(int vertex, const ModelParams& params);

// Every u* != u such that (T \ {u}) + {u*} is cluster tilting. Empty when T is
// not mutable at u. Throws NotASummand.
std::vector<Indec> find_mutations(const ClusterTilting& tilting, const Indec& u);

// (T \ {u}) + {u_star}, validated.
ClusterTilting mutate(const ClusterTilting& tilting, const Indec& u, const Indec& u_star);

}  // namespace hcluster
