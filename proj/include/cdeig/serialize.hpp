#pragma once

#include <json.hpp>

#include "cdeig/element.hpp"
#include "cdeig/linops.hpp"
#include "cdeig/spectrum.hpp"
#include "cdeig/subalgebra.hpp"

namespace cdeig {

using json = nlohmann::json;

json element_json(const CDElement& x);
CDElement element_from_json(const json& j);

/// {"level", "clusters": [{"value", "multiplicity" [, "basis"]}],
///  "is_zero_divisor", "lambda_min", "lambda_max"}
json spectrum_json(const Spectrum& spec, bool with_bases = false);

json prediction_json(const SpectrumPrediction& pred);
json subalgebra_json(const Subalgebra& S);
json matrix_json(const OperatorMatrix& A);

}  // namespace cdeig
