#pragma once

#include <string>

#include "vendor_json.hpp"

#include "splitkit/families.hpp"
#include "splitkit/graded_map.hpp"
#include "splitkit/multiform.hpp"
#include "splitkit/param_curve.hpp"
#include "splitkit/rnc.hpp"

namespace splitkit::io {

using json = nlohmann::ordered_json;

// `3*x0^2*x4 - x1*x2`; homogeneous, variables x0..x{nvars-1}
FpMultiForm parse_multiform(const PrimeField& f, const std::string& text, int nvars);

// `q[i,j] * (<multiform>) + 2*q[i,j] + x[j] * (<multiform>)`
HypersurfaceCombo parse_combo(const PrimeField& f, const std::string& text, const RncModel& model);

// {"source":[int], "target":[int], "entries":[[coeff-lists]]}
GradedMap parse_graded_map(const PrimeField& f, const json& j);
json graded_map_json(const GradedMap& m);

// array of n+1 coefficient vectors, each of length e+1
ParamCurve<PrimeField> parse_curve(const PrimeField& f, const json& j);

json splitting_json(const SplittingType& s);
json scan_report_json(const ScanReport& r);

}  // namespace splitkit::io
