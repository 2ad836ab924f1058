#pragma once

// Combinatorial model of the (d+2)-angulated cluster category of type A_n.
//
// Indecomposable objects are (d+1)-subsets of the cyclically ordered vertex
// set {1, ..., m}, m = n + 2d + 1, containing no two neighbouring vertices.
// Vertices are numbered clockwise; the suspension Sigma^d moves every vertex
// one step anticlockwise. All Hom spaces between indecomposables are zero or
// one-dimensional.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcluster {

class ModelParams {
 public:
  // Throws InvalidParams unless n >= 1 and d >= 1.
  ModelParams(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  // Number of polygon vertices.
  int m() const noexcept { return n_ + 2 * d_ + 1; }
  // Number of summands of every cluster tilting object: C(n+d-1, d).
  std::size_t tilting_size() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
  friend auto operator<=>(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
  int d_;
};

std::string to_string(const ModelParams& params);

// True if `sorted` (strictly increasing, inside [1, m]) has no two cyclically
// adjacent entries. A non-separated set is the zero object of the model.
bool is_separated(std::span<const int> sorted, int m);

// An indecomposable object, stored as its ascending vertex list. The stored
// form is canonical, so equality and ordering are plain lexicographic
// comparisons of vertex sequences.
class Indec {
 public:
  // Sorts `vertices` and validates it against `params`; throws InvalidObject.
  static Indec make(std::vector<int> vertices, const ModelParams& params);
  // Parses the text form "3,5,8,10" (whitespace around entries is ignored).
  static Indec parse(std::string_view text, const ModelParams& params);

  std::span<const int> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int operator[](std::size_t i) const { return vertices_[i]; }
  bool contains(int vertex) const;

  // Text form, e.g. "3,5,8,10".
  std::string to_string() const;

  friend bool operator==(const Indec&, const Indec&) = default;
  friend auto operator<=>(const Indec&, const Indec&) = default;

 private:
  explicit Indec(std::vector<int> sorted) : vertices_(std::move(sorted)) {}
  std::vector<int> vertices_;
};

// Hom spaces of the model are zero or one-dimensional.
enum class HomDim : std::uint8_t { zero = 0, one = 1 };

inline int dim(HomDim h) noexcept { return static_cast<int>(h); }

// Every indecomposable, in lexicographic order of vertex sequences.
std::vector<Indec> enumerate_indecs(const ModelParams& params);

// Moves every vertex k steps anticlockwise. k = 1 is Sigma^d, k = -1 is
// Sigma^{-d}; shift by m is the identity.
Indec shift(const Indec& x, const ModelParams& params, int k);

// b lies on the clockwise walk from a to c (both ends included).
bool in_cyclic_interval(int a, int b, int c, int m);

// Labelling x_0 < y_0 < x_1 < y_1 < ... < x_d < y_d < x_0 in cyclic order,
// with x listed from its smallest vertex.
struct IntertwiningWitness {
  std::vector<int> x;
  std::vector<int> y;
};

std::optional<IntertwiningWitness> intertwining(const Indec& x, const Indec& y);

inline bool intertwines(const Indec& x, const Indec& y) {
  return intertwining(x, y).has_value();
}

// Labelling with x_i <= y_i <= x_{i+1}^{--} for all i (cyclically), x listed
// from its smallest vertex. Exists iff Hom(x, y) is nonzero.
struct HomWitness {
  std::vector<int> source;
  std::vector<int> target;
};

std::optional<HomWitness> hom_witness(const Indec& x, const Indec& y, const ModelParams& params);

// dim Hom(x, y): one iff x and Sigma^{-d} y intertwine.
HomDim hom_dim(const Indec& x, const Indec& y, const ModelParams& params);

// dim Hom(x, y) decided by the inequality chain instead of intertwining.
HomDim hom_dim_by_chain(const Indec& x, const Indec& y, const ModelParams& params);

// Whether the nonzero map x -> y factors through z: z admits a labelling with
// x_i <= z_i <= y_i for the chain labelling of (x, y). Throws
// PreconditionViolation when Hom(x, y) = 0.
bool factors_through(const Indec& x, const Indec& y, const Indec& z, const ModelParams& params);

// Composite of the basis maps x -> z -> y is nonzero.
bool composite_nonzero(const Indec& x, const Indec& z, const Indec& y, const ModelParams& params);

// dim Hom(x, y) in the quotient of the category by the ideal of maps
// factoring through add(denom).
HomDim quotient_hom_dim(const Indec& x, const Indec& y, std::span<const Indec> denom,
                        const ModelParams& params);

}  // namespace hcluster
