#pragma once

// Linear algebra over GF(p), p = 2^31 - 1. Internal to the resolution route.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hcluster::detail {

inline constexpr std::uint64_t kPrime = 2147483647u;

using Vec = std::vector<std::uint64_t>;

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }
std::uint64_t mod_inv(std::uint64_t a);

struct Echelon {
  std::vector<Vec> rows;            // reduced rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form of the given rows (each of length ncols).
Echelon rref(std::vector<Vec> rows, std::size_t ncols);

// Basis of {v : A v = 0} where A is given by its rows.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols);

// Coefficients c with sum_i c_i basis[i] = target, if any.
std::optional<Vec> solve_combination(const std::vector<Vec>& basis, const Vec& target);

}  // namespace hcluster::detail
