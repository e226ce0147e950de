#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "muntz/c0.hpp"
#include "muntz/exponents.hpp"
#include "muntz/functional.hpp"
#include "muntz/octa.hpp"
#include "muntz/polynomial.hpp"
#include "muntz/spikes.hpp"

namespace muntz {

// ordered_json keeps insertion order, so dumps are stable across runs.
using json = nlohmann::ordered_json;

inline constexpr const char* kC0CertSchema = "c0-cert/1";
inline constexpr const char* kOctaCertSchema = "octa-cert/1";
inline constexpr const char* kC0VerifySchema = "c0-verify/1";

json point_json(const PointT& p);            // {"x": ..., "t": ...}, t canonical
PointT point_from_json(const json& j);

json polynomial_json(const MuntzPolynomial& p);
MuntzPolynomial polynomial_from_json(const json& j);

json sequence_json(const ExponentSequence& seq);
ExponentSequence sequence_from_json(const json& j);

json functional_json(const DiscreteFunctional& f);
DiscreteFunctional functional_from_json(const json& j);

json profile_json(const SpikeProfile& p);

// Certificates carry a "schema" field and, unless canonical, a "generated"
// timestamp. Canonical form is what determinism checks byte-compare.
json certificate_json(const C0Certificate& cert, bool canonical = false);
C0Certificate c0_certificate_from_json(const json& j);

json certificate_json(const OctaCertificate& cert, bool canonical = false);
OctaCertificate octa_certificate_from_json(const json& j);

json report_json(const C0ConditionsReport& conditions,
                 const C0InequalityReport& inequalities);

// slices.json: array of {functional: [{x, weight}...], epsilon,
// witness: [{exponent, coefficient}...]}.
std::vector<SliceSpec> slices_from_json(const json& j);
json slices_json(const std::vector<SliceSpec>& slices);

std::string dump(const json& j);   // 2-space indent, trailing newline

}  // namespace muntz
