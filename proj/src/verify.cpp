#include "hcluster/verify.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "hcluster/errors.hpp"
#include "hcluster/serialization.hpp"

namespace hcluster {

using nlohmann::json;

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const ModelParams& params)
      : report_{std::move(suite), params, 0, {}, std::chrono::milliseconds{0}, SuiteStatus::passed,
                json::object()},
        start_(std::chrono::steady_clock::now()) {}

  // Counts one case; records a failure when ok is false.
  void check(bool ok, json descriptor, std::string expected, std::string actual) {
    ++report_.cases_run;
    if (!ok) report_.failures.push_back({std::move(descriptor), std::move(expected), std::move(actual)});
  }

  json& notes() { return report_.notes; }

  SuiteReport finish(bool skipped = false) {
    auto& f = report_.failures;
    std::sort(f.begin(), f.end(), [](const CaseFailure& a, const CaseFailure& b) {
      return a.descriptor.dump() < b.descriptor.dump();
    });
    if (!f.empty()) {
      report_.status = SuiteStatus::failed;
    } else if (skipped) {
      report_.status = SuiteStatus::skipped_no_exchange_pairs;
    }
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

json params_json(const ModelParams& p) { return {{"n", p.n()}, {"d", p.d()}}; }

json pair_json(const ClusterTilting& t, const ClusterTilting& u) {
  return {{"params", params_json(t.params())}, {"T", to_json(t)}, {"U", to_json(u)}};
}

std::string dense_string(const std::vector<std::int64_t>& v) { return json(v).dump(); }

}  // namespace

std::string_view to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::passed: return "Passed";
    case SuiteStatus::failed: return "Failed";
    case SuiteStatus::skipped_no_exchange_pairs: return "SkippedNoExchangePairs";
  }
  return "?";
}

json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"case", f.descriptor}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", r.suite},
          {"params", params_json(r.params)},
          {"cases_run", r.cases_run},
          {"failures", failures},
          {"elapsed_ms", r.elapsed.count()},
          {"status", std::string(to_string(r.status))},
          {"notes", r.notes}};
}

Sweep::Sweep(const ModelParams& params, unsigned threads)
    : params_(params), indecs_(enumerate_indecs(params)), tiltings_(enumerate_tiltings(params)) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = tiltings_.size();
  std::vector<std::optional<IndexTable>> built(count);
  // Static partition by stride; each slot is written by exactly one worker.
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += threads) built[i].emplace(tiltings_[i]);
    }));
  }
  for (auto& f : workers) f.get();
  tables_.reserve(count);
  for (auto& t : built) tables_.push_back(std::move(*t));
}

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t count, PairSelection sel) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (sel == PairSelection::all) {
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) out.emplace_back(i, j);
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(i, i);
    if (count > 1) {
      const std::size_t next = (i + 1) % count;
      out.emplace_back(i, next);
      out.emplace_back(next, i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SuiteReport suite_duality(const Sweep& sweep, PairSelection pairs) {
  Recorder rec("duality", sweep.params());
  for (auto [i, j] : select_pairs(sweep.tiltings().size(), pairs)) {
    const IndexTable& table_t = sweep.table(i);
    const IndexTable& table_u = sweep.table(j);
    const ClusterTilting& tilting_t = table_t.tilting();
    const ClusterTilting& tilting_u = table_u.tilting();
    for (const Indec& t : tilting_t.summands()) {
      const K0Vector unit = K0Vector::unit(tilting_t, t);
      const K0Vector round = duality_backward(duality_forward(unit, table_u), table_t);
      json desc = pair_json(tilting_t, tilting_u);
      desc["generator"] = to_json(t);
      desc["direction"] = "backward(forward([t]))";
      rec.check(round == unit, std::move(desc), to_string(unit), to_string(round));
    }
    for (const Indec& u : tilting_u.summands()) {
      const K0Vector unit = K0Vector::unit(tilting_u, u);
      const K0Vector round = duality_forward(duality_backward(unit, table_t), table_u);
      json desc = pair_json(tilting_t, tilting_u);
      desc["generator"] = to_json(u);
      desc["direction"] = "forward(backward([u]))";
      rec.check(round == unit, std::move(desc), to_string(unit), to_string(round));
    }
  }
  rec.notes()["tiltings"] = sweep.tiltings().size();
  return rec.finish();
}

SuiteReport suite_counts(const Sweep& sweep) {
  Recorder rec("counts", sweep.params());
  const std::size_t expected = sweep.params().tilting_size();
  for (const ClusterTilting& t : sweep.tiltings()) {
    json desc = {{"params", params_json(sweep.params())}, {"T", to_json(t)}};
    rec.check(t.size() == expected, std::move(desc), std::to_string(expected), std::to_string(t.size()));
  }
  rec.notes()["tiltings"] = sweep.tiltings().size();
  rec.notes()["summands_per_tilting"] = expected;
  return rec.finish();
}

SuiteReport suite_dual_basis(const Sweep& sweep, PairSelection pairs) {
  Recorder rec("dual_basis", sweep.params());
  for (auto [i, j] : select_pairs(sweep.tiltings().size(), pairs)) {
    const IndexTable& table_t = sweep.table(i);
    const IndexTable& table_u = sweep.table(j);
    const IntMatrix g = g_matrix(table_t, table_u.tilting());
    const std::int64_t det = determinant(g);
    json desc = pair_json(table_t.tilting(), table_u.tilting());
    rec.check(det == 1 || det == -1, desc, "+-1", std::to_string(det));
    if (det != 1 && det != -1) continue;
    const IntMatrix expected = unimodular_inverse(g).transposed();
    const IntMatrix c = c_matrix(table_u, table_t.tilting());
    rec.check(c == expected, std::move(desc), json(to_json(expected)).dump(), json(to_json(c)).dump());
  }
  return rec.finish();
}

SuiteReport suite_index(const Sweep& sweep) {
  Recorder rec("index", sweep.params());
  std::size_t by_staircase = 0, by_resolution = 0, candidates = 0;
  for (const ClusterTilting& tilting : sweep.tiltings()) {
    for (const Indec& x : sweep.indecs()) {
      if (tilting.contains(x)) continue;
      const K0Vector reference = index_by_resolution(x, tilting);
      const auto stairs = staircase_candidates(x, tilting);
      (stairs.empty() ? by_resolution : by_staircase) += 1;
      for (const auto& angle : stairs) {
        ++candidates;
        const K0Vector v = index_from_staircase(angle, tilting);
        json desc = {{"params", params_json(sweep.params())},
                     {"T", to_json(tilting)},
                     {"x", to_json(x)},
                     {"staircase", to_json(angle)}};
        rec.check(v == reference, std::move(desc), to_string(reference), to_string(v));
      }
    }
  }
  rec.notes()["objects_with_staircase"] = by_staircase;
  rec.notes()["objects_without_staircase"] = by_resolution;
  rec.notes()["staircase_candidates"] = candidates;
  return rec.finish();
}

namespace {

struct ExchangeCache {
  // reports[i][k]: exchange report of summand k of tiltings[i].
  std::vector<std::vector<ExchangeReport>> reports;
};

ExchangeCache exchange_cache(const Sweep& sweep) {
  ExchangeCache cache;
  for (const ClusterTilting& u_tilting : sweep.tiltings()) {
    std::vector<ExchangeReport> row;
    for (const Indec& u : u_tilting.summands()) row.push_back(exchange_report(u_tilting, u));
    cache.reports.push_back(std::move(row));
  }
  return cache;
}

}  // namespace

SuiteReport suite_sign_coherence(const Sweep& sweep) {
  Recorder rec("sign_coherence", sweep.params());
  const int d = sweep.params().d();
  const ExchangeCache cache = exchange_cache(sweep);
  std::size_t mixed = 0, mixed_mutable = 0, mixed_exchange = 0, exchange_vectors = 0;
  for (std::size_t iu = 0; iu < sweep.tiltings().size(); ++iu) {
    const IndexTable& table_u = sweep.table(iu);
    for (std::size_t k = 0; k < table_u.tilting().size(); ++k) {
      const ExchangeReport& report = cache.reports[iu][k];
      for (const ClusterTilting& tilting_t : sweep.tiltings()) {
        const CVector cv = c_vector(report.u, table_u, tilting_t);
        const SignClass cls = sign_coherence(cv);
        if (report.is_exchange_pair) ++exchange_vectors;
        if (cls == SignClass::mixed) {
          ++mixed;
          if (report.is_mutable) ++mixed_mutable;
          if (report.is_exchange_pair) ++mixed_exchange;
        }
        const bool must_be_coherent = d == 1 || (d % 2 == 1 && report.is_exchange_pair);
        if (!must_be_coherent) continue;
        json desc = pair_json(tilting_t, table_u.tilting());
        desc["u"] = to_json(report.u);
        desc["is_exchange_pair"] = report.is_exchange_pair;
        rec.check(cls != SignClass::mixed, std::move(desc), "sign-coherent",
                  std::string(to_string(cls)) + " " + dense_string(cv.values));
      }
    }
  }
  rec.notes()["mixed_c_vectors"] = mixed;
  rec.notes()["mixed_with_mutable_u"] = mixed_mutable;
  rec.notes()["mixed_with_exchange_pair"] = mixed_exchange;
  rec.notes()["c_vectors_of_exchange_pairs"] = exchange_vectors;
  if (d % 2 == 0) rec.notes()["asserted"] = "d even: nothing asserted, counts only";
  return rec.finish();
}

SuiteReport suite_exchange_formulas(const Sweep& sweep) {
  Recorder rec("exchange_formulas", sweep.params());
  const ModelParams& params = sweep.params();
  const int d = params.d();
  const std::int64_t sign = d % 2 == 0 ? 1 : -1;
  const ExchangeCache cache = exchange_cache(sweep);
  std::size_t pairs = 0;
  for (std::size_t iu = 0; iu < sweep.tiltings().size(); ++iu) {
    const IndexTable& table_u = sweep.table(iu);
    const ClusterTilting& tilting_u = table_u.tilting();
    std::vector<Indec> shifted_u;
    for (const Indec& s : tilting_u.summands()) shifted_u.push_back(shift(s, params, 1));

    for (const ExchangeReport& report : cache.reports[iu]) {
      if (!report.is_exchange_pair) continue;
      ++pairs;
      const Indec& u = report.u;
      const Indec& u_star = *report.u_star;
      const Indec shifted_star = shift(u_star, params, 1);
      const Indec shifted_self = shift(u, params, 1);
      json base = {{"params", params_json(params)},
                   {"U", to_json(tilting_u)},
                   {"u", to_json(u)},
                   {"u_star", to_json(u_star)}};

      // Hom(U, Sigma^d u*) is one-dimensional and concentrated at u.
      std::vector<Indec> supported;
      for (const Indec& s : tilting_u.summands()) {
        if (hom_dim(s, shifted_star, params) == HomDim::one) supported.push_back(s);
      }
      {
        json desc = base;
        desc["check"] = "hom_from_U_to_shifted_u_star";
        json got = json::array();
        for (const Indec& s : supported) got.push_back(to_json(s));
        rec.check(supported.size() == 1 && supported.front() == u, std::move(desc),
                  json::array({to_json(u)}).dump(), got.dump());
      }

      for (const ClusterTilting& tilting_t : sweep.tiltings()) {
        const CVector cv = c_vector(u, table_u, tilting_t);
        const SignClass cls = sign_coherence(cv);
        for (std::size_t k = 0; k < tilting_t.size(); ++k) {
          const Indec& t = tilting_t.summands()[k];
          const Indec st = shift(t, params, 1);
          const Indec s2t = shift(t, params, 2);
          const int q1 = dim(quotient_hom_dim(st, shifted_star, shifted_u, params));
          const int q2 = dim(quotient_hom_dim(shifted_star, s2t, shifted_u, params));
          json desc = base;
          desc["T"] = to_json(tilting_t);
          desc["t"] = to_json(t);

          json d1 = desc;
          d1["check"] = "quotient_homs_not_both_nonzero";
          rec.check(q1 == 0 || q2 == 0, std::move(d1), "at least one zero",
                    std::to_string(q1) + "," + std::to_string(q2));
          if (d % 2 == 0) continue;

          const std::int64_t via_quotients = sign * (q1 + sign * q2);
          json d2 = desc;
          d2["check"] = "c_value_from_quotient_homs";
          rec.check(via_quotients == cv.values[k], std::move(d2), std::to_string(cv.values[k]),
                    std::to_string(via_quotients));

          // Image of Hom(t, u) -> Hom(t, Sigma^d u*) (non-negative case) or
          // of Hom(t, u*) -> Hom(t, Sigma^d u) (non-positive case).
          std::int64_t via_image = 0;
          if (cls == SignClass::non_negative || cls == SignClass::zero) {
            via_image = composite_nonzero(t, u, shifted_star, params) ? 1 : 0;
          } else {
            via_image = composite_nonzero(t, u_star, shifted_self, params) ? -1 : 0;
          }
          json d3 = desc;
          d3["check"] = "c_value_from_image_dimension";
          d3["sign"] = std::string(to_string(cls));
          rec.check(via_image == cv.values[k], std::move(d3), std::to_string(cv.values[k]),
                    std::to_string(via_image));
        }
      }
    }
  }
  rec.notes()["exchange_pairs"] = pairs;
  if (d % 2 == 0) rec.notes()["formulas"] = "d even: only the quotient disjunction and Hom support are checked";
  return rec.finish(pairs == 0);
}

SuiteReport reproduce_counterexample() {
  const ModelParams params(3, 3);
  Recorder rec("counterexample", params);
  const ClusterTilting tilting_t = star_tilting(1, params);
  const ClusterTilting tilting_u = star_tilting(3, params);
  const Indec u = Indec::parse("3,5,8,10", params);
  const Indec t1 = Indec::parse("1,4,6,9", params);
  const Indec t2 = Indec::parse("1,5,7,9", params);
  const Indec shifted_t2 = Indec::parse("4,6,8,10", params);
  const json base = {{"params", params_json(params)}, {"T", "contains:1"}, {"U", "contains:3"}};

  auto desc = [&](std::string check) {
    json j = base;
    j["check"] = std::move(check);
    return j;
  };

  rec.check(shift(t1, params, 1) == u, desc("shift(t1) == u"), u.to_string(),
            shift(t1, params, 1).to_string());
  rec.check(shift(t2, params, 1) == shifted_t2, desc("shift(t2)"), shifted_t2.to_string(),
            shift(t2, params, 1).to_string());

  const CVector cv = c_vector(u, tilting_u, tilting_t);
  rec.check(cv.value(t1) == -1, desc("c(t1)"), "-1", std::to_string(cv.value(t1)));
  rec.check(cv.value(t2) == 1, desc("c(t2)"), "1", std::to_string(cv.value(t2)));
  rec.check(sign_coherence(cv) == SignClass::mixed, desc("sign class"), "Mixed",
            std::string(to_string(sign_coherence(cv))));

  K0Vector golden(tilting_u);
  golden.add(Indec::parse("3,5,7,9", params), -1);
  golden.add(Indec::parse("3,5,7,10", params), 1);
  golden.add(Indec::parse("3,5,8,10", params), -1);
  golden.add(Indec::parse("3,6,8,10", params), 1);
  const IndexResult index = compute_index(shifted_t2, tilting_u);
  rec.check(index.value == golden, desc("index of Sigma^d t2"), to_string(golden), to_string(index.value));

  std::vector<std::optional<Indec>> expected_terms;
  for (const char* s : {"3,6,8,10", "3,5,8,10", "3,5,7,10", "3,5,7,9"}) {
    expected_terms.emplace_back(Indec::parse(s, params));
  }
  const bool angle_ok = index.angle && index.angle->terms == expected_terms;
  rec.check(angle_ok, desc("staircase terms"), "(3,5,7,9) -> (3,5,7,10) -> (3,5,8,10) -> (3,6,8,10)",
            index.angle ? to_json(*index.angle).dump() : std::string(to_string(index.route)));

  const auto mutations = find_mutations(tilting_u, u);
  rec.check(mutations.empty(), desc("u not mutable"), "[]", std::to_string(mutations.size()) + " mutations");
  return rec.finish();
}

std::vector<ModelParams> default_grid() {
  return {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"duality",        "counts",
                                                 "dual_basis",     "index",
                                                 "sign_coherence", "exchange_formulas",
                                                 "counterexample"};
  return names;
}

SuiteReport run_suite(std::string_view name, const Sweep& sweep) {
  if (name == "duality") return suite_duality(sweep);
  if (name == "counts") return suite_counts(sweep);
  if (name == "dual_basis") return suite_dual_basis(sweep);
  if (name == "index") return suite_index(sweep);
  if (name == "sign_coherence") return suite_sign_coherence(sweep);
  if (name == "exchange_formulas") return suite_exchange_formulas(sweep);
  if (name == "counterexample") return reproduce_counterexample();
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace hcluster
