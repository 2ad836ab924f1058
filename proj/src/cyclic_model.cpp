#include "hcluster/cyclic_model.hpp"

#include <algorithm>
#include <charconv>

#include "hcluster/checked.hpp"
#include "hcluster/errors.hpp"

namespace hcluster {

namespace {

int wrap(int v, int m) {
  int r = (v - 1) % m;
  if (r < 0) r += m;
  return r + 1;
}

std::string join(std::span<const int> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::vector<int> rotated(std::span<const int> vs, std::size_t by) {
  std::vector<int> out(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) out[i] = vs[(i + by) % vs.size()];
  return out;
}

}  // namespace

ModelParams::ModelParams(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) {
    throw InvalidParams("need n >= 1 and d >= 1, got n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
  }
}

std::size_t ModelParams::tilting_size() const {
  // C(n+d-1, d), built incrementally so every partial product is integral.
  std::int64_t c = 1;
  for (int i = 1; i <= d_; ++i) c = checked::mul(c, n_ - 1 + i) / i;
  return static_cast<std::size_t>(c);
}

std::string to_string(const ModelParams& params) {
  return "(n=" + std::to_string(params.n()) + ",d=" + std::to_string(params.d()) + ")";
}

bool is_separated(std::span<const int> sorted, int m) {
  if (sorted.empty()) return true;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i + 1] - sorted[i] < 2) return false;
  }
  if (sorted.size() == 1) return true;
  return sorted.front() + m - sorted.back() >= 2;
}

Indec Indec::make(std::vector<int> vertices, const ModelParams& params) {
  std::sort(vertices.begin(), vertices.end());
  const auto expected = static_cast<std::size_t>(params.d() + 1);
  if (vertices.size() != expected) {
    throw InvalidObject("object " + join(vertices) + " must have " + std::to_string(expected) +
                        " vertices at " + hcluster::to_string(params));
  }
  if (vertices.front() < 1 || vertices.back() > params.m()) {
    throw InvalidObject("object " + join(vertices) + " has a vertex outside 1.." +
                        std::to_string(params.m()));
  }
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InvalidObject("object " + join(vertices) + " repeats a vertex");
  }
  if (!is_separated(vertices, params.m())) {
    throw InvalidObject("object " + join(vertices) + " contains neighbouring vertices (m=" +
                        std::to_string(params.m()) + ")");
  }
  return Indec(std::move(vertices));
}

Indec Indec::parse(std::string_view text, const ModelParams& params) {
  std::vector<int> vs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InvalidObject("cannot parse object \"" + std::string(text) + "\"");
    }
    vs.push_back(value);
    pos = comma + 1;
  }
  return make(std::move(vs), params);
}

bool Indec::contains(int vertex) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

std::string Indec::to_string() const { return join(vertices_); }

std::vector<Indec> enumerate_indecs(const ModelParams& params) {
  const int m = params.m();
  const int k = params.d() + 1;
  std::vector<Indec> out;
  std::vector<int> current;
  // Lexicographic generation of increasing sequences with gaps >= 2; the
  // wrap-around gap is checked once the sequence is complete.
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (current.front() + m - current.back() >= 2) out.push_back(Indec::make(current, params));
      return;
    }
    const int remaining = k - static_cast<int>(current.size());
    for (int v = next; v + 2 * (remaining - 1) <= m; ++v) {
      current.push_back(v);
      self(self, v + 2);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

Indec shift(const Indec& x, const ModelParams& params, int k) {
  const int m = params.m();
  std::vector<int> vs;
  vs.reserve(x.size());
  for (int v : x.vertices()) vs.push_back(wrap(v - (k % m), m));
  return Indec::make(std::move(vs), params);
}

bool in_cyclic_interval(int a, int b, int c, int m) {
  return wrap(b - a + 1, m) <= wrap(c - a + 1, m);
}

std::optional<IntertwiningWitness> intertwining(const Indec& x, const Indec& y) {
  if (x.size() != y.size()) return std::nullopt;
  const auto xs = x.vertices();
  const auto ys = y.vertices();
  // Merge and require strict alternation; equal sizes make linear
  // alternation equivalent to cyclic alternation.
  std::size_t i = 0, j = 0;
  int last = -1;  // 0 = came from x, 1 = from y
  while (i < xs.size() || j < ys.size()) {
    int from;
    if (j == ys.size() || (i < xs.size() && xs[i] < ys[j])) {
      from = 0;
      ++i;
    } else if (i == xs.size() || ys[j] < xs[i]) {
      from = 1;
      ++j;
    } else {
      return std::nullopt;  // shared vertex
    }
    if (from == last) return std::nullopt;
    last = from;
  }
  IntertwiningWitness w{std::vector<int>(xs.begin(), xs.end()), {}};
  // y_i is the y-vertex following x_i; when y starts first, y_0 sits after x_0.
  const bool y_first = ys.front() < xs.front();
  w.y = rotated(ys, y_first ? 1 : 0);
  return w;
}

std::optional<HomWitness> hom_witness(const Indec& x, const Indec& y, const ModelParams& params) {
  if (x.size() != y.size()) return std::nullopt;
  const int m = params.m();
  const auto xs = x.vertices();
  const std::size_t k = xs.size();
  for (std::size_t s = 0; s < k; ++s) {
    auto ys = rotated(y.vertices(), s);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const int upper = wrap(xs[(i + 1) % k] - 2, m);  // x_{i+1}^{--}
      ok = in_cyclic_interval(xs[i], ys[i], upper, m);
    }
    if (ok) return HomWitness{std::vector<int>(xs.begin(), xs.end()), std::move(ys)};
  }
  return std::nullopt;
}

HomDim hom_dim(const Indec& x, const Indec& y, const ModelParams& params) {
  return intertwines(x, shift(y, params, -1)) ? HomDim::one : HomDim::zero;
}

HomDim hom_dim_by_chain(const Indec& x, const Indec& y, const ModelParams& params) {
  return hom_witness(x, y, params) ? HomDim::one : HomDim::zero;
}

bool factors_through(const Indec& x, const Indec& y, const Indec& z, const ModelParams& params) {
  const auto w = hom_witness(x, y, params);
  if (!w) {
    throw PreconditionViolation("factors_through: Hom(" + x.to_string() + ", " + y.to_string() +
                                ") is zero");
  }
  const int m = params.m();
  const std::size_t k = z.size();
  for (std::size_t s = 0; s < k; ++s) {
    const auto zs = rotated(z.vertices(), s);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = in_cyclic_interval(w->source[i], zs[i], w->target[i], m);
    }
    if (ok) return true;
  }
  return false;
}

bool composite_nonzero(const Indec& x, const Indec& z, const Indec& y, const ModelParams& params) {
  return hom_dim(x, z, params) == HomDim::one && hom_dim(z, y, params) == HomDim::one &&
         hom_dim(x, y, params) == HomDim::one && factors_through(x, y, z, params);
}

HomDim quotient_hom_dim(const Indec& x, const Indec& y, std::span<const Indec> denom,
                        const ModelParams& params) {
  if (hom_dim(x, y, params) == HomDim::zero) return HomDim::zero;
  // Hom spaces are at most one-dimensional, so the generator factors through
  // add(denom) iff it factors through a single member.
  for (const Indec& z : denom) {
    if (factors_through(x, y, z, params)) return HomDim::zero;
  }
  return HomDim::one;
}

}  // namespace hcluster
