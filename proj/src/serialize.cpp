#include "cdeig/serialize.hpp"

namespace cdeig {

json element_json(const CDElement& x) {
  return json{{"level", x.level}, {"coeffs", x.coeffs}};
}

CDElement element_from_json(const json& j) {
  return CDElement(j.at("level").get<int>(), j.at("coeffs").get<std::vector<double>>());
}

json spectrum_json(const Spectrum& spec, bool with_bases) {
  json clusters = json::array();
  for (const EigenCluster& c : spec.clusters) {
    json entry{{"value", c.value}, {"multiplicity", c.multiplicity}};
    if (with_bases) {
      json basis = json::array();
      for (const CDElement& v : c.basis) basis.push_back(v.coeffs);
      entry["basis"] = std::move(basis);
    }
    clusters.push_back(std::move(entry));
  }
  return json{{"level", spec.level},
              {"clusters", std::move(clusters)},
              {"is_zero_divisor", spec.lambda_min() <= kZeroDivisorTol},
              {"lambda_min", spec.lambda_min()},
              {"lambda_max", spec.lambda_max()}};
}

json prediction_json(const SpectrumPrediction& pred) {
  json entries = json::array();
  for (const PredictedCluster& e : pred.entries)
    entries.push_back(json{{"value", e.value}, {"multiplicity", e.multiplicity}});
  return json{{"method", pred.method}, {"clusters", std::move(entries)}};
}

json subalgebra_json(const Subalgebra& S) {
  json basis = json::array();
  for (const CDElement& b : S.basis) basis.push_back(b.coeffs);
  return json{{"level", S.level}, {"dim", S.dim()}, {"basis", std::move(basis)}};
}

json matrix_json(const OperatorMatrix& A) {
  json rows = json::array();
  for (int i = 0; i < A.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.dim(); ++j) row.push_back(A.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"dim", A.dim()}, {"rows", std::move(rows)}};
}

}  // namespace cdeig
