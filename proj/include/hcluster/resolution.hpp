#pragma once

// Second route to the index: the minimal projective resolution of the
// End(T)-module Hom(T, x), computed from Hom dimensions and the
// factorization rule alone.

#include <cstddef>
#include <vector>

#include "hcluster/cyclic_model.hpp"
#include "hcluster/tilting.hpp"

namespace hcluster {

// tops[i] lists, with multiplicity and in basis order, the summands t with
// Hom(T, t) a summand of P_i, for i = 0..length. Throws std::logic_error if
// the composition rule fails to define a module (never observed).
std::vector<std::vector<Indec>> projective_resolution(const Indec& x, const ClusterTilting& tilting,
                                                      std::size_t length);

}  // namespace hcluster
