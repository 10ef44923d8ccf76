#include "fqinc/report_json.hpp"

#include <cstdio>

namespace fqinc {

using nlohmann::ordered_json;

namespace {

ordered_json fraction(const std::string& num, const std::string& den) {
  return ordered_json{{"num", num}, {"den", den}};
}

ordered_json fraction(std::uint64_t num, std::uint64_t den) {
  return ordered_json{{"num", num}, {"den", den}};
}

ordered_json coords_json(std::span<const Residue> coords) {
  ordered_json out = ordered_json::array();
  for (Residue c : coords) out.push_back(c);
  return out;
}

}  // namespace

std::string format_theta(double theta) {
  if (theta == 0.0) theta = 0.0;  // no "-0.000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", theta);
  return buf;
}

ordered_json to_json(const IncidenceReport& r) {
  ordered_json j;
  j["points"] = r.point_count;
  j["spheres"] = r.sphere_count;
  j["incidences"] = r.incidences;
  j["main_term"] = fraction(r.main_term_num.str(), std::to_string(r.main_term_den));
  j["deviation_sq"] = r.deviation_sq.str();
  j["error_bound_sq"] = r.error_bound_sq.str();
  j["theta_display"] = format_theta(r.theta);
  j["status"] = to_string(r.status);
  return j;
}

ordered_json to_json(const PinnedReport& r, const PointSet& points) {
  ordered_json j;
  j["kind"] = r.kind == PinnedReport::Kind::average ? "average" : "fraction";
  j[r.kind == PinnedReport::Kind::average ? "epsilon" : "alpha"] =
      fraction(static_cast<std::uint64_t>(r.parameter.num),
               static_cast<std::uint64_t>(r.parameter.den));
  j["points"] = r.point_count;
  j["distance_sum"] = r.distance_sum;
  j["average"] = fraction(r.average_num, r.average_den);
  if (r.kind == PinnedReport::Kind::fraction) j["rich_pins"] = r.rich_pins;
  j["hypothesis_met"] = r.hypothesis_met;
  j["conclusion_holds"] = r.conclusion_holds;
  j["status"] = to_string(r.verdict());
  ordered_json pins = ordered_json::array();
  for (std::size_t i = 0; i < r.pin_sizes.size() && i < points.size(); ++i) {
    pins.push_back(ordered_json{{"pin", coords_json(points[i].coords())}, {"size", r.pin_sizes[i]}});
  }
  j["pins"] = std::move(pins);
  return j;
}

ordered_json to_json(const BeckReport& r) {
  ordered_json j;
  j["points"] = r.point_count;
  j["circle_total"] = r.circle_total;
  j["determined_count"] = r.determined_count;
  j["determined_nonzero_radius"] = r.determined_nonzero_radius;
  j["bound"] = r.bound;
  j["rich_count"] = r.rich_count;
  j["rich_noncollinear_count"] = r.rich_noncollinear_count;
  j["cross_check_agrees"] = r.cross_check_agrees;
  j["poor_circle_count"] = r.poor_circle_count;
  j["poor_bound_holds"] = r.poor_bound_holds;
  j["hypothesis_met"] = r.hypothesis_met;
  j["conclusion_holds"] = r.conclusion_holds;
  j["status"] = to_string(r.verdict());
  return j;
}

ordered_json to_json(const LiftedDiffSweep& s) {
  ordered_json j;
  j["vectors_checked"] = s.vectors_checked;
  j["mismatches"] = s.mismatches;
  j["value_at_zero"] = s.value_at_zero;
  j["expected_at_zero"] = s.expected_at_zero;
  j["max_nonzero"] = s.max_nonzero;
  j["expected_max_nonzero"] = s.expected_max_nonzero;
  j["status"] = to_string(s.verdict());
  return j;
}

ordered_json to_json(const IdentityTrials& t) {
  ordered_json j;
  j["trials"] = t.trials;
  j["max_set_size"] = t.max_set_size;
  j["mass_failures"] = t.mass_failures;
  j["energy_failures"] = t.energy_failures;
  j["energy_total"] = t.energy_total.str();
  j["status"] = to_string(t.verdict());
  return j;
}

}  // namespace fqinc
