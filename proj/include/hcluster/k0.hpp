#pragma once

// Split Grothendieck groups of cluster tilting objects, the index, g- and
// c-vectors, and the tropical duality maps between two split Grothendieck
// groups.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcluster/angles.hpp"
#include "hcluster/cyclic_model.hpp"
#include "hcluster/integer_matrix.hpp"
#include "hcluster/tilting.hpp"

namespace hcluster {

// Element of K_0^split(add T): integer coefficients over the summands of T.
// Zero coefficients are never stored.
class K0Vector {
 public:
  explicit K0Vector(ClusterTilting basis) : basis_(std::move(basis)) {}
  static K0Vector unit(const ClusterTilting& basis, const Indec& t);

  const ClusterTilting& basis() const noexcept { return basis_; }
  const std::map<Indec, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Throws NotASummand for objects outside the basis.
  std::int64_t coefficient(const Indec& t) const;
  void add(const Indec& t, std::int64_t c);

  // Coefficients in basis order.
  std::vector<std::int64_t> dense() const;

  K0Vector& operator+=(const K0Vector& other);
  K0Vector& operator-=(const K0Vector& other);
  K0Vector& operator*=(std::int64_t c);

  friend K0Vector operator+(K0Vector a, const K0Vector& b) { return a += b; }
  friend K0Vector operator-(K0Vector a, const K0Vector& b) { return a -= b; }
  friend K0Vector operator-(K0Vector a) { return a *= -1; }
  friend K0Vector operator*(std::int64_t c, K0Vector a) { return a *= c; }
  friend bool operator==(const K0Vector& a, const K0Vector& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_basis(const K0Vector& other) const;

  ClusterTilting basis_;
  std::map<Indec, std::int64_t> terms_;
};

// "-[3,5,7,9] + [3,5,7,10]"; "0" for the zero vector.
std::string to_string(const K0Vector& v);

// A formal integer combination of indecomposables, i.e. an element of
// K_0^split of the whole category.
using Combination = std::vector<std::pair<Indec, std::int64_t>>;

enum class IndexRoute {
  summand,          // x is in T
  shifted_summand,  // x = Sigma^d t for a summand t
  staircase,
  resolution,       // projective resolution of Hom(T, x)
};

std::string_view to_string(IndexRoute route);

struct IndexResult {
  K0Vector value;
  IndexRoute route;
  std::optional<StaircaseAngle> angle;  // set for the staircase route
};

// Index via the staircase when one exists, otherwise via the projective
// resolution of Hom(T, x).
IndexResult compute_index(const Indec& x, const ClusterTilting& tilting);

K0Vector index_of(const Indec& x, const ClusterTilting& tilting);

// sum_j (-1)^j [E_j] over the nonzero terms of the angle.
K0Vector index_from_staircase(const StaircaseAngle& angle, const ClusterTilting& tilting);

// Alternating sum of the first d+1 terms of the minimal projective
// resolution; Sigma^d t and t in T are handled directly.
K0Vector index_by_resolution(const Indec& x, const ClusterTilting& tilting);

K0Vector index_linear(const Combination& v, const ClusterTilting& tilting);

inline K0Vector g_vector(const Indec& u, const ClusterTilting& tilting_t) {
  return index_of(u, tilting_t);
}

// The index of every indecomposable with respect to one tilting, computed
// once. Used by the sweeps, where the same indices are needed many times.
class IndexTable {
 public:
  explicit IndexTable(ClusterTilting tilting);

  const ClusterTilting& tilting() const noexcept { return tilting_; }
  const K0Vector& operator()(const Indec& x) const;
  K0Vector linear(const Combination& v) const;

 private:
  ClusterTilting tilting_;
  std::map<Indec, K0Vector> index_;
};

// c_T(u, U) as a functional on K_0^split(add T); values in T's basis order.
struct CVector {
  Indec u;
  ClusterTilting basis_u;
  ClusterTilting basis_t;
  std::vector<std::int64_t> values;

  std::int64_t value(const Indec& t) const;
};

// value(t) = (-1)^d * coefficient of [u] in Ind_U(Sigma^d t).
CVector c_vector(const Indec& u, const ClusterTilting& tilting_u, const ClusterTilting& tilting_t);
CVector c_vector(const Indec& u, const IndexTable& table_u, const ClusterTilting& tilting_t);

// (-1)^d Ind_U(Sigma^d v): K_0^split(T) -> K_0^split(U).
K0Vector duality_forward(const K0Vector& v, const ClusterTilting& tilting_u);
K0Vector duality_forward(const K0Vector& v, const IndexTable& table_u);

// Ind_T restricted to K_0^split(U): K_0^split(U) -> K_0^split(T).
K0Vector duality_backward(const K0Vector& w, const ClusterTilting& tilting_t);
K0Vector duality_backward(const K0Vector& w, const IndexTable& table_t);

enum class SignClass { zero, non_negative, non_positive, mixed };

std::string_view to_string(SignClass s);

SignClass sign_coherence(const CVector& cv);
SignClass sign_coherence(const std::vector<std::int64_t>& values);

// Row i is g_T(u_i) over T's basis, u_i running over U's basis.
IntMatrix g_matrix(const IndexTable& table_t, const ClusterTilting& tilting_u);
// Row i is c_T(u_i, U) over T's basis.
IntMatrix c_matrix(const IndexTable& table_u, const ClusterTilting& tilting_t);

}  // namespace hcluster
