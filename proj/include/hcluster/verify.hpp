#pragma once

// Executable sweeps over the model that check the structural theorems on
// every (ordered pair of) cluster tilting object(s) at given parameters.

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcluster/exchange.hpp"
#include "hcluster/k0.hpp"

namespace hcluster {

struct CaseFailure {
  nlohmann::json descriptor;  // complete inputs of the failing case
  std::string expected;
  std::string actual;
};

enum class SuiteStatus { passed, failed, skipped_no_exchange_pairs };

std::string_view to_string(SuiteStatus s);

struct SuiteReport {
  std::string suite;
  ModelParams params;
  std::size_t cases_run = 0;
  std::vector<CaseFailure> failures;  // sorted by descriptor
  std::chrono::milliseconds elapsed{0};
  SuiteStatus status = SuiteStatus::passed;
  nlohmann::json notes = nlohmann::json::object();

  bool failed() const noexcept { return status == SuiteStatus::failed; }
};

nlohmann::json to_json(const SuiteReport& r);

// Everything a sweep needs at fixed parameters: the objects, all cluster
// tilting objects, and an index table per tilting.
class Sweep {
 public:
  // Index tables are built on `threads` workers (0 = hardware concurrency).
  explicit Sweep(const ModelParams& params, unsigned threads = 0);

  const ModelParams& params() const noexcept { return params_; }
  const std::vector<Indec>& indecs() const noexcept { return indecs_; }
  const std::vector<ClusterTilting>& tiltings() const noexcept { return tiltings_; }
  const IndexTable& table(std::size_t i) const { return tables_.at(i); }

 private:
  ModelParams params_;
  std::vector<Indec> indecs_;
  std::vector<ClusterTilting> tiltings_;
  std::vector<IndexTable> tables_;
};

enum class PairSelection {
  all,     // every ordered pair
  sample,  // (T, T), (T, next T) and (next T, T) for every T in enumeration order
};

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t count, PairSelection sel);

// Both duality composites are the identity on every basis vector.
SuiteReport suite_duality(const Sweep& sweep, PairSelection pairs = PairSelection::all);
// Every cluster tilting object has C(n+d-1, d) summands.
SuiteReport suite_counts(const Sweep& sweep);
// det of every g-matrix is +-1 and the c-vectors are the rows of its inverse
// transpose.
SuiteReport suite_dual_basis(const Sweep& sweep, PairSelection pairs = PairSelection::all);
// Every staircase for (x, T) gives the same index, equal to the one from the
// projective resolution.
SuiteReport suite_index(const Sweep& sweep);
// No c-vector of a summand in an exchange pair is mixed (d odd); at d = 1 no
// c-vector is mixed at all.
SuiteReport suite_sign_coherence(const Sweep& sweep);
// Formulas for c-vector entries of exchange pairs via quotient Hom spaces and
// images of the exchange maps.
SuiteReport suite_exchange_formulas(const Sweep& sweep);
// The n=3, d=3 counterexample to sign coherence.
SuiteReport reproduce_counterexample();

// Parameter grid swept by default.
std::vector<ModelParams> default_grid();

// Suite names accepted by run_suite: duality, counts, dual_basis, index,
// sign_coherence, exchange_formulas, counterexample.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(std::string_view name, const Sweep& sweep);

}  // namespace hcluster
