#ifndef FQINC_THEOREMS_HPP_
#define FQINC_THEOREMS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqinc/incidence.hpp"

namespace fqinc {

// Outcome of a checker. `vacuous` means nothing was asserted: an empty
// family for the incidence bound, an unmet size hypothesis for the
// corollaries.
enum class Verdict { holds, vacuous, violated };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Engine e) noexcept;

// Exact positive fraction num/den, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // "n/d" or a bare integer.
  static Rational parse(std::string_view text);
  bool in_open_unit_interval() const noexcept { return num > 0 && den > 0 && num < den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct IncidenceReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t point_count = 0;
  std::uint64_t sphere_count = 0;
  std::uint64_t incidences = 0;
  // |P||S| / q
  BigInt main_term_num;
  std::uint64_t main_term_den = 1;
  // (q I - |P||S|)^2 against |P||S| q^(d+2): the bound squared and scaled by q^2.
  BigInt deviation_sq;
  BigInt error_bound_sq;
  // Display only; never used for the verdict.
  double theta = 0.0;
  Verdict status = Verdict::vacuous;
};

// Checks |I - |P||S|/q| < sqrt(|P||S|) q^(d/2) in exact integers.
IncidenceReport check_main(const PointSet& points, const SphereFamily& spheres,
                           Engine engine = Engine::bucketed);

// {||x - y|| : x in P}, ascending.
std::vector<FieldElement> pinned_set(const PointSet& points, const Point& pin);

// One sphere around the pin per realized distance; covers P exactly once.
SphereFamily pinned_cover(const PointSet& points, const Point& pin);

struct PinnedReport {
  enum class Kind { average, fraction };

  Kind kind = Kind::average;
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t point_count = 0;
  Rational parameter;  // epsilon or alpha
  // |Delta_p(P)| for every p in P, in the order of P.
  std::vector<std::uint64_t> pin_sizes;
  std::uint64_t distance_sum = 0;
  // distance_sum / |P|, reduced
  std::uint64_t average_num = 0;
  std::uint64_t average_den = 1;
  // Pins with |Delta_p(P)| > (1 - alpha) q; fraction kind only.
  std::uint64_t rich_pins = 0;
  bool hypothesis_met = false;
  bool conclusion_holds = false;

  Verdict verdict() const noexcept;
};

// Average pinned-distance count: hypothesis |P|^2 eps^2 >= (1 - eps) q^(d+1),
// conclusion sum_p |Delta_p(P)| > (1 - eps) q |P|.
PinnedReport check_pinned_average(const PointSet& points, const Rational& epsilon);

// Fraction of good pins: hypothesis |P|^2 alpha^4 >= (1 - alpha^2) q^(d+1),
// conclusion |{p : |Delta_p(P)| > (1 - alpha) q}| >= (1 - alpha) |P|.
PinnedReport check_pinned_fraction(const PointSet& points, const Rational& alpha);

// Circles through some three distinct non-collinear points of P (d = 2).
// The triple count C(|P|, 3) must not exceed `budget`.
SphereFamily determined_circles(const PointSet& points,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Circles holding at least `min_points` points of P, by a scan over all q^3
// circles with one distance histogram per center.
SphereFamily rich_circles(const PointSet& points, std::uint64_t min_points,
                          std::uint64_t budget = kDefaultEnumerationBudget);

struct BeckReport {
  std::uint64_t q = 0;
  std::uint64_t point_count = 0;
  std::uint64_t circle_total = 0;  // q^3, lambda = 0 included
  std::uint64_t determined_count = 0;
  std::uint64_t determined_nonzero_radius = 0;
  std::uint64_t bound = 0;  // ceil(4 q^3 / 9)
  // Circles with >= 3 points of P, and those among them whose points of P
  // are not all on one line. The latter must equal determined_count.
  std::uint64_t rich_count = 0;
  std::uint64_t rich_noncollinear_count = 0;
  // Circles with <= 2 points of P; the proof bounds this by 5 q^3 / 9.
  std::uint64_t poor_circle_count = 0;
  bool poor_bound_holds = false;
  bool cross_check_agrees = false;
  bool hypothesis_met = false;  // |P| >= 5q
  bool conclusion_holds = false;

  Verdict verdict() const noexcept;
};

BeckReport check_beck(const PointSet& points,
                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fqinc

#endif  // FQINC_THEOREMS_HPP_
