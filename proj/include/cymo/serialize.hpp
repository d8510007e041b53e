#pragma once

#include <json.hpp>
#include <string>

#include "cymo/examples.hpp"
#include "cymo/fock.hpp"
#include "cymo/gns.hpp"
#include "cymo/jointeigen.hpp"
#include "cymo/jordan.hpp"
#include "cymo/kernel.hpp"
#include "cymo/models.hpp"
#include "cymo/tuple.hpp"

namespace cymo {

using json = nlohmann::json;

// Parse with the library's exceptions mapped onto ErrorCode::ParseError.
json json_parse(const std::string& text);

// Complex numbers are emitted as [re, im]; accepted as a plain number,
// [re, im], or {"re": x, "im": y}.
json cplx_to_json(cplx v);
cplx cplx_from_json(const json& j);

// {"n", "m", "matrices": n row-major m x m complex arrays, "h", "gram"?}
json tuple_to_json(const CyclicTuple& t);
CyclicTuple tuple_from_json(const json& j);

// {"n", "degree", "entries": [{"alpha", "beta", "value"}]}; omitted entries
// read back as zero.
json moments_to_json(const MomentTable& mt);
MomentTable moments_from_json(const json& j);

// {"n", "terms": [{"alpha", "coeff"}]}
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"type": "ball", "center", "radius"} or {"type": "points", "points"}
json support_to_json(const SupportSet& K);
SupportSet support_from_json(const json& j);

// {"atoms": [[complex...]], "weights": [w...]}
json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const json& j);

// Report serializers (one-way; reports are outputs).
json validation_to_json(const ValidationReport& r);
json growth_to_json(const GrowthCertificate& c);
json decay_to_json(const DecayReport& r);
json decomposition_to_json(const SpectralDecomposition& d);
json distribution_to_json(const DistributionRep& rep);
json model_check_to_json(const ModelCheckReport& r);
json gns_to_json(const GnsResult& g);
json convolve_to_json(const ConvolveResult& c);
json eigen_report_to_json(const JointEigenReport& r);
json example_to_json(const ExampleResult& r);

}  // namespace cymo
