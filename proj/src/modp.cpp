#include "modp.hpp"

#include <algorithm>

namespace hcluster::detail {

std::uint64_t mod_inv(std::uint64_t a) {
  std::uint64_t result = 1, base = a % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1u) result = mod_mul(result, base);
    base = mod_mul(base, base);
    e >>= 1u;
  }
  return result;
}

Echelon rref(std::vector<Vec> rows, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const std::uint64_t inv = mod_inv(rows[r][c]);
    for (auto& v : rows[r]) v = mod_mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = mod_sub(rows[i][j], mod_mul(f, rows[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
  const Echelon e = rref(rows, ncols);
  std::vector<Vec> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (std::find(e.pivots.begin(), e.pivots.end(), f) != e.pivots.end()) continue;
    Vec v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = mod_sub(0, e.rows[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve_combination(const std::vector<Vec>& basis, const Vec& target) {
  const std::size_t n = basis.size();
  const std::size_t dim = target.size();
  // Augmented system: columns are the basis vectors, last column the target.
  std::vector<Vec> rows(dim, Vec(n + 1, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = basis[j][i];
    rows[i][n] = target[i];
  }
  const Echelon e = rref(std::move(rows), n + 1);
  Vec coeffs(n, 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    coeffs[e.pivots[i]] = e.rows[i][n];
  }
  return coeffs;
}

}  // namespace hcluster::detail
