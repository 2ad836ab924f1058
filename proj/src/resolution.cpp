#include "hcluster/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "modp.hpp"

namespace hcluster {

namespace {

using detail::Vec;

// The summands of T as a category with one-dimensional Hom spaces.
struct Thin {
  std::size_t size = 0;
  std::vector<std::vector<bool>> hom;                // hom[a][b]: a -> b nonzero
  std::vector<std::vector<std::vector<bool>>> comp;  // a -> b -> c nonzero
};

Thin thin_category(const ClusterTilting& tilting) {
  const auto& obj = tilting.summands();
  const auto& params = tilting.params();
  Thin c;
  c.size = obj.size();
  c.hom.assign(c.size, std::vector<bool>(c.size, false));
  for (std::size_t a = 0; a < c.size; ++a)
    for (std::size_t b = 0; b < c.size; ++b) c.hom[a][b] = hom_dim(obj[a], obj[b], params) == HomDim::one;
  c.comp.assign(c.size, std::vector<std::vector<bool>>(c.size, std::vector<bool>(c.size, false)));
  for (std::size_t a = 0; a < c.size; ++a)
    for (std::size_t b = 0; b < c.size; ++b)
      for (std::size_t e = 0; e < c.size; ++e)
        c.comp[a][b][e] = c.hom[a][b] && c.hom[b][e] && c.hom[a][e] &&
                          factors_through(obj[a], obj[e], obj[b], params);
  return c;
}

// Right End(T)-module: vector spaces at each summand, and for every nonzero
// a -> b (a != b) the induced map M(b) -> M(a) as a dims[a] x dims[b] matrix.
struct Module {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::vector<Vec>>> act;

  bool empty() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }
};

Vec apply(const std::vector<Vec>& matrix, const Vec& v) {
  Vec out(matrix.size(), 0);
  for (std::size_t r = 0; r < matrix.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      out[r] = (out[r] + detail::mod_mul(matrix[r][c], v[c])) % detail::kPrime;
  return out;
}

Module hom_into(const Indec& x, const ClusterTilting& tilting, const Thin& cat) {
  const auto& obj = tilting.summands();
  const auto& params = tilting.params();
  Module m;
  m.dims.resize(cat.size);
  for (std::size_t a = 0; a < cat.size; ++a) m.dims[a] = dim(hom_dim(obj[a], x, params));
  m.act.assign(cat.size, std::vector<std::vector<Vec>>(cat.size));
  for (std::size_t a = 0; a < cat.size; ++a)
    for (std::size_t b = 0; b < cat.size; ++b) {
      if (a == b || !cat.hom[a][b] || !m.dims[a] || !m.dims[b]) continue;
      const bool nonzero = factors_through(obj[a], x, obj[b], params);
      m.act[a][b] = {Vec{nonzero ? 1u : 0u}};
    }
  return m;
}

struct CoverStep {
  std::vector<std::size_t> generators;  // vertex of each generator of the top
  Module kernel;
};

CoverStep cover(const Thin& cat, const Module& m) {
  const std::size_t k = cat.size;
  // Top: a complement of the radical at each vertex.
  std::vector<std::pair<std::size_t, Vec>> gens;
  for (std::size_t a = 0; a < k; ++a) {
    if (!m.dims[a]) continue;
    std::vector<Vec> radical;
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || !cat.hom[a][b] || !m.dims[b]) continue;
      for (std::size_t c = 0; c < m.dims[b]; ++c) {
        Vec col(m.dims[a]);
        for (std::size_t r = 0; r < m.dims[a]; ++r) col[r] = m.act[a][b][r][c];
        radical.push_back(std::move(col));
      }
    }
    const auto e = detail::rref(std::move(radical), m.dims[a]);
    for (std::size_t c = 0; c < m.dims[a]; ++c) {
      if (std::find(e.pivots.begin(), e.pivots.end(), c) != e.pivots.end()) continue;
      Vec v(m.dims[a], 0);
      v[c] = 1;
      gens.emplace_back(a, std::move(v));
    }
  }

  // Projective cover P = sum of Hom(-, a_g); P(c) has one basis vector per
  // generator g with Hom(c, a_g) nonzero.
  std::vector<std::vector<std::size_t>> basis(k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (cat.hom[c][gens[g].first]) basis[c].push_back(g);

  CoverStep step;
  for (const auto& g : gens) step.generators.push_back(g.first);

  std::vector<std::vector<Vec>> kernel(k);
  for (std::size_t c = 0; c < k; ++c) {
    // Rows of the map P(c) -> M(c).
    std::vector<Vec> rows(m.dims[c], Vec(basis[c].size(), 0));
    for (std::size_t p = 0; p < basis[c].size(); ++p) {
      const auto& [a, v] = gens[basis[c][p]];
      const Vec image = a == c ? v : apply(m.act[c][a], v);
      for (std::size_t r = 0; r < m.dims[c]; ++r) rows[r][p] = image[r];
    }
    if (detail::rref(rows, basis[c].size()).pivots.size() != m.dims[c]) {
      throw std::logic_error("projective cover is not surjective");
    }
    kernel[c] = detail::nullspace(rows, basis[c].size());
  }

  Module& ker = step.kernel;
  ker.dims.resize(k);
  for (std::size_t c = 0; c < k; ++c) ker.dims[c] = kernel[c].size();
  ker.act.assign(k, std::vector<std::vector<Vec>>(k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t e = 0; e < k; ++e) {
      if (c == e || !cat.hom[c][e] || !ker.dims[c] || !ker.dims[e]) continue;
      std::vector<Vec> matrix(ker.dims[c], Vec(ker.dims[e], 0));
      for (std::size_t j = 0; j < ker.dims[e]; ++j) {
        // Precompose each basis map e -> a_g with c -> e.
        Vec image(basis[c].size(), 0);
        for (std::size_t p = 0; p < basis[e].size(); ++p) {
          const std::size_t g = basis[e][p];
          if (!kernel[e][j][p] || !cat.comp[c][e][gens[g].first]) continue;
          const auto q = std::find(basis[c].begin(), basis[c].end(), g) - basis[c].begin();
          image[q] = (image[q] + kernel[e][j][p]) % detail::kPrime;
        }
        const auto coeffs = detail::solve_combination(kernel[c], image);
        if (!coeffs) throw std::logic_error("kernel is not a submodule");
        for (std::size_t r = 0; r < ker.dims[c]; ++r) matrix[r][j] = (*coeffs)[r];
      }
      ker.act[c][e] = std::move(matrix);
    }
  return step;
}

}  // namespace

std::vector<std::vector<Indec>> projective_resolution(const Indec& x, const ClusterTilting& tilting,
                                                      std::size_t length) {
  const Thin cat = thin_category(tilting);
  Module current = hom_into(x, tilting, cat);
  std::vector<std::vector<Indec>> tops;
  for (std::size_t i = 0; i <= length; ++i) {
    CoverStep step = cover(cat, current);
    std::vector<Indec> top;
    for (std::size_t a : step.generators) top.push_back(tilting.summands()[a]);
    tops.push_back(std::move(top));
    current = std::move(step.kernel);
  }
  return tops;
}

}  // namespace hcluster
