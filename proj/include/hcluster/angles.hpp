#pragma once

// Explicit (d+2)-angles built from an intertwining pair.
//
// Let a source object S intertwine a target X, labelled
//   u_0 < x_0 < u_1 < x_1 < ... < u_d < x_d < u_0
// with u the vertices of S. For a subset I of {0..d} write
//   M(I) = {u_i : i in I} + {x_i : i not in I},
// read as the zero object when it contains neighbouring vertices. The angle
//   S = E_d -> E_{d-1} -> ... -> E_0 -> X -> Sigma^d S
// has E_j = sum of M(I) over |I| = j + 1. The staircase is the special case
// where only the initial segments I = {0..j} survive, so every term is
// indecomposable or zero.

#include <optional>
#include <vector>

#include "hcluster/cyclic_model.hpp"
#include "hcluster/tilting.hpp"

namespace hcluster {

struct AngleLabelling {
  std::vector<int> source;  // u_0..u_d
  std::vector<int> target;  // x_0..x_d
};

// Labelling with u_0 = source[rotation]. Throws PreconditionViolation unless
// source and target intertwine.
AngleLabelling angle_labelling(const Indec& source, const Indec& target, std::size_t rotation);

struct StaircaseAngle {
  Indec target;
  AngleLabelling labelling;
  // terms[j] is E_j for j = 0..d; nullopt is the zero object. E_d is the
  // summand the staircase starts from.
  std::vector<std::optional<Indec>> terms;

  const Indec& source() const { return *terms.back(); }
};

struct MixedAngle {
  Indec source;
  Indec target;
  AngleLabelling labelling;
  // middle[j] lists the nonzero summands of E_j, j = 0..d-1.
  std::vector<std::vector<Indec>> middle;

  bool has_indecomposable_terms() const;
};

// The d+1 angles from `source` to `target`, one per rotation of the labelling.
std::vector<MixedAngle> mixed_angles(const Indec& source, const Indec& target,
                                     const ModelParams& params);

// Every staircase resolving x by the tilting: summands intertwining x in
// lexicographic order, then rotations in order. A candidate is kept when all
// non-staircase mixed subsets vanish and every nonzero E_j is a summand.
// Throws PreconditionViolation if x is a summand.
std::vector<StaircaseAngle> staircase_candidates(const Indec& x, const ClusterTilting& tilting);

// First staircase candidate; throws NoResolution when there is none.
StaircaseAngle staircase(const Indec& x, const ClusterTilting& tilting);

}  // namespace hcluster
