#include "hcluster/k0.hpp"

#include "hcluster/checked.hpp"
#include "hcluster/errors.hpp"
#include "hcluster/resolution.hpp"

namespace hcluster {

namespace {

std::int64_t sign_of_power(int d) { return d % 2 == 0 ? 1 : -1; }

Combination shifted(const K0Vector& v) {
  Combination out;
  const auto& params = v.basis().params();
  for (const auto& [t, c] : v.terms()) out.emplace_back(shift(t, params, 1), c);
  return out;
}

}  // namespace

K0Vector K0Vector::unit(const ClusterTilting& basis, const Indec& t) {
  K0Vector v(basis);
  v.add(t, 1);
  return v;
}

std::int64_t K0Vector::coefficient(const Indec& t) const {
  if (!basis_.contains(t)) throw NotASummand(t.to_string() + " is not in the basis");
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void K0Vector::add(const Indec& t, std::int64_t c) {
  if (!basis_.contains(t)) throw NotASummand(t.to_string() + " is not in the basis");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, 0);
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::vector<std::int64_t> K0Vector::dense() const {
  std::vector<std::int64_t> out;
  out.reserve(basis_.size());
  for (const Indec& t : basis_.summands()) {
    auto it = terms_.find(t);
    out.push_back(it == terms_.end() ? 0 : it->second);
  }
  return out;
}

void K0Vector::require_same_basis(const K0Vector& other) const {
  if (!(basis_ == other.basis_)) throw PreconditionViolation("K0 vectors over different bases");
}

K0Vector& K0Vector::operator+=(const K0Vector& other) {
  require_same_basis(other);
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

K0Vector& K0Vector::operator-=(const K0Vector& other) {
  require_same_basis(other);
  for (const auto& [t, c] : other.terms_) add(t, checked::neg(c));
  return *this;
}

K0Vector& K0Vector::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v = checked::mul(v, c);
  return *this;
}

std::string to_string(const K0Vector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Indec& t : v.basis().summands()) {
    auto it = v.terms().find(t);
    if (it == v.terms().end()) continue;
    const std::int64_t c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? checked::neg(c) : c;
    if (a != 1) out += std::to_string(a);
    out += "[" + t.to_string() + "]";
    first = false;
  }
  return out;
}

std::string_view to_string(IndexRoute route) {
  switch (route) {
    case IndexRoute::summand: return "summand";
    case IndexRoute::shifted_summand: return "shifted_summand";
    case IndexRoute::staircase: return "staircase";
    case IndexRoute::resolution: return "resolution";
  }
  return "?";
}

K0Vector index_from_staircase(const StaircaseAngle& angle, const ClusterTilting& tilting) {
  K0Vector v(tilting);
  for (std::size_t j = 0; j < angle.terms.size(); ++j) {
    if (angle.terms[j]) v.add(*angle.terms[j], j % 2 == 0 ? 1 : -1);
  }
  return v;
}

K0Vector index_by_resolution(const Indec& x, const ClusterTilting& tilting) {
  const auto& params = tilting.params();
  if (tilting.contains(x)) return K0Vector::unit(tilting, x);
  // Hom(T, Sigma^d T) = 0, so the module is zero here and the resolution
  // says nothing; the angle t -> 0 -> ... -> 0 -> Sigma^d t gives the index.
  const Indec unshifted = shift(x, params, -1);
  if (tilting.contains(unshifted)) return sign_of_power(params.d()) * K0Vector::unit(tilting, unshifted);

  const auto tops = projective_resolution(x, tilting, static_cast<std::size_t>(params.d()));
  K0Vector v(tilting);
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (const Indec& t : tops[i]) v.add(t, i % 2 == 0 ? 1 : -1);
  }
  return v;
}

IndexResult compute_index(const Indec& x, const ClusterTilting& tilting) {
  if (tilting.contains(x)) return {K0Vector::unit(tilting, x), IndexRoute::summand, std::nullopt};
  auto candidates = staircase_candidates(x, tilting);
  if (!candidates.empty()) {
    K0Vector v = index_from_staircase(candidates.front(), tilting);
    return {std::move(v), IndexRoute::staircase, std::move(candidates.front())};
  }
  const bool shifted_summand = tilting.contains(shift(x, tilting.params(), -1));
  return {index_by_resolution(x, tilting),
          shifted_summand ? IndexRoute::shifted_summand : IndexRoute::resolution, std::nullopt};
}

K0Vector index_of(const Indec& x, const ClusterTilting& tilting) {
  return compute_index(x, tilting).value;
}

K0Vector index_linear(const Combination& v, const ClusterTilting& tilting) {
  K0Vector out(tilting);
  for (const auto& [x, c] : v) out += c * index_of(x, tilting);
  return out;
}

IndexTable::IndexTable(ClusterTilting tilting) : tilting_(std::move(tilting)) {
  for (const Indec& x : enumerate_indecs(tilting_.params())) {
    index_.emplace(x, index_of(x, tilting_));
  }
}

const K0Vector& IndexTable::operator()(const Indec& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw InvalidObject(x.to_string() + " is not an object of the model");
  return it->second;
}

K0Vector IndexTable::linear(const Combination& v) const {
  K0Vector out(tilting_);
  for (const auto& [x, c] : v) out += c * (*this)(x);
  return out;
}

std::int64_t CVector::value(const Indec& t) const {
  auto pos = basis_t.position(t);
  if (!pos) throw NotASummand(t.to_string() + " is not a summand of T");
  return values[*pos];
}

CVector c_vector(const Indec& u, const IndexTable& table_u, const ClusterTilting& tilting_t) {
  const ClusterTilting& tilting_u = table_u.tilting();
  if (!tilting_u.contains(u)) throw NotASummand(u.to_string() + " is not a summand of U");
  const auto& params = tilting_t.params();
  CVector cv{u, tilting_u, tilting_t, {}};
  for (const Indec& t : tilting_t.summands()) {
    const std::int64_t coeff = table_u(shift(t, params, 1)).coefficient(u);
    cv.values.push_back(checked::mul(sign_of_power(params.d()), coeff));
  }
  return cv;
}

CVector c_vector(const Indec& u, const ClusterTilting& tilting_u, const ClusterTilting& tilting_t) {
  if (!tilting_u.contains(u)) throw NotASummand(u.to_string() + " is not a summand of U");
  const auto& params = tilting_t.params();
  CVector cv{u, tilting_u, tilting_t, {}};
  for (const Indec& t : tilting_t.summands()) {
    const std::int64_t coeff = index_of(shift(t, params, 1), tilting_u).coefficient(u);
    cv.values.push_back(checked::mul(sign_of_power(params.d()), coeff));
  }
  return cv;
}

K0Vector duality_forward(const K0Vector& v, const ClusterTilting& tilting_u) {
  return sign_of_power(tilting_u.params().d()) * index_linear(shifted(v), tilting_u);
}

K0Vector duality_forward(const K0Vector& v, const IndexTable& table_u) {
  return sign_of_power(table_u.tilting().params().d()) * table_u.linear(shifted(v));
}

K0Vector duality_backward(const K0Vector& w, const ClusterTilting& tilting_t) {
  return index_linear(Combination(w.terms().begin(), w.terms().end()), tilting_t);
}

K0Vector duality_backward(const K0Vector& w, const IndexTable& table_t) {
  return table_t.linear(Combination(w.terms().begin(), w.terms().end()));
}

std::string_view to_string(SignClass s) {
  switch (s) {
    case SignClass::zero: return "Zero";
    case SignClass::non_negative: return "NonNegative";
    case SignClass::non_positive: return "NonPositive";
    case SignClass::mixed: return "Mixed";
  }
  return "?";
}

SignClass sign_coherence(const std::vector<std::int64_t>& values) {
  bool pos = false, neg = false;
  for (std::int64_t v : values) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos && neg) return SignClass::mixed;
  if (pos) return SignClass::non_negative;
  if (neg) return SignClass::non_positive;
  return SignClass::zero;
}

SignClass sign_coherence(const CVector& cv) { return sign_coherence(cv.values); }

IntMatrix g_matrix(const IndexTable& table_t, const ClusterTilting& tilting_u) {
  const ClusterTilting& tilting_t = table_t.tilting();
  IntMatrix g(tilting_u.size(), tilting_t.size());
  for (std::size_t i = 0; i < tilting_u.size(); ++i) {
    const auto row = table_t(tilting_u.summands()[i]).dense();
    for (std::size_t j = 0; j < row.size(); ++j) g(i, j) = row[j];
  }
  return g;
}

IntMatrix c_matrix(const IndexTable& table_u, const ClusterTilting& tilting_t) {
  const ClusterTilting& tilting_u = table_u.tilting();
  IntMatrix c(tilting_u.size(), tilting_t.size());
  for (std::size_t i = 0; i < tilting_u.size(); ++i) {
    const auto cv = c_vector(tilting_u.summands()[i], table_u, tilting_t);
    for (std::size_t j = 0; j < cv.values.size(); ++j) c(i, j) = cv.values[j];
  }
  return c;
}

}  // namespace hcluster
