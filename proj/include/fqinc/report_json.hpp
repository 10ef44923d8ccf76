#ifndef FQINC_REPORT_JSON_HPP_
#define FQINC_REPORT_JSON_HPP_

#include "json.hpp"

#include "fqinc/sweeps.hpp"
#include "fqinc/theorems.hpp"

namespace fqinc {

// Canonical report objects: fixed key order, verdict quantities as exact
// integers. Values that may exceed 64 bits are decimal strings. theta is a
// fixed-precision string under "theta_display" and takes no part in any
// verdict.
nlohmann::ordered_json to_json(const IncidenceReport& r);
nlohmann::ordered_json to_json(const PinnedReport& r, const PointSet& points);
nlohmann::ordered_json to_json(const BeckReport& r);
nlohmann::ordered_json to_json(const LiftedDiffSweep& s);
nlohmann::ordered_json to_json(const IdentityTrials& t);

std::string format_theta(double theta);

}  // namespace fqinc

#endif  // FQINC_REPORT_JSON_HPP_
