#include "fqinc/theorems.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "fqinc/error.hpp"

namespace fqinc {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::violated:
      return "violated";
  }
  return "unknown";
}

std::string_view to_string(Engine e) noexcept {
  switch (e) {
    case Engine::naive:
      return "naive";
    case Engine::bucketed:
      return "bucketed";
    case Engine::lifted:
      return "lifted";
  }
  return "unknown";
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::parse_error,
                  "expected a rational \"num/den\", got \"" + std::string(text) + "\"");
    }
    return v;
  };
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int(text);
  } else {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  }
  if (r.den <= 0) {
    throw Error(ErrorCode::parse_error, "denominator must be positive in \"" + std::string(text) + "\"");
  }
  return r;
}

namespace {

BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_plane(const Space& space) {
  if (space.dim() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "circle checks need d = 2, got d = " + std::to_string(space.dim()));
  }
}

// |Delta_p(P)| for every p in P.
std::vector<std::uint64_t> pin_sizes(const PointSet& points) {
  const FieldSpec& field = points.space().field();
  std::vector<std::uint64_t> sizes;
  sizes.reserve(points.size());
  std::vector<char> seen(field.order());
  for (const Point& pin : points) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t distinct = 0;
    for (const Point& x : points) {
      char& slot = seen[squared_distance(field, x.coords(), pin.coords())];
      if (!slot) {
        slot = 1;
        ++distinct;
      }
    }
    sizes.push_back(distinct);
  }
  return sizes;
}

PinnedReport pinned_base(const PointSet& points, const Rational& parameter,
                         PinnedReport::Kind kind) {
  if (!parameter.in_open_unit_interval()) {
    throw Error(ErrorCode::invalid_argument,
                "parameter " + parameter.str() + " must lie strictly between 0 and 1");
  }
  PinnedReport r;
  r.kind = kind;
  r.q = points.space().q();
  r.d = points.space().dim();
  r.point_count = points.size();
  r.parameter = parameter;
  r.pin_sizes = pin_sizes(points);
  r.distance_sum = std::accumulate(r.pin_sizes.begin(), r.pin_sizes.end(), std::uint64_t{0});
  if (r.point_count > 0) {
    std::uint64_t g = std::gcd(r.distance_sum, r.point_count);
    r.average_num = r.distance_sum / g;
    r.average_den = r.point_count / g;
  }
  return r;
}

}  // namespace

IncidenceReport check_main(const PointSet& points, const SphereFamily& spheres, Engine engine) {
  require_same_space(points.space(), spheres.space());
  const Space& space = points.space();
  IncidenceReport r;
  r.q = space.q();
  r.d = space.dim();
  r.point_count = points.size();
  r.sphere_count = spheres.size();
  r.incidences = count_incidences(points, spheres, engine);

  const BigInt product = BigInt(r.point_count) * r.sphere_count;
  const std::uint64_t g = static_cast<std::uint64_t>(boost::multiprecision::gcd(product, BigInt(r.q)));
  r.main_term_num = product / g;
  r.main_term_den = r.q / g;

  const BigInt deviation = BigInt(r.q) * r.incidences - product;
  r.deviation_sq = deviation * deviation;
  r.error_bound_sq = product * big_pow(r.q, r.d + 2);

  if (product == 0) {
    r.status = Verdict::vacuous;
    return r;
  }
  r.status = r.deviation_sq < r.error_bound_sq ? Verdict::holds : Verdict::violated;

  // theta = (qI - |P||S|) / (q sqrt(|P||S|) q^(d/2))
  const long double dev = deviation.convert_to<long double>();
  const long double scale = static_cast<long double>(r.q) *
                            std::sqrt(product.convert_to<long double>()) *
                            std::pow(static_cast<long double>(r.q), r.d / 2.0L);
  r.theta = static_cast<double>(dev / scale);
  return r;
}

std::vector<FieldElement> pinned_set(const PointSet& points, const Point& pin) {
  require_same_space(points.space(), pin.space());
  const FieldSpec& field = points.space().field();
  std::vector<char> seen(field.order());
  for (const Point& x : points) seen[squared_distance(field, x.coords(), pin.coords())] = 1;
  std::vector<FieldElement> out;
  for (std::uint64_t v = 0; v < field.order(); ++v) {
    if (seen[v]) out.emplace_back(field, v);
  }
  return out;
}

SphereFamily pinned_cover(const PointSet& points, const Point& pin) {
  SphereFamily cover(points.space());
  for (const FieldElement& lambda : pinned_set(points, pin)) cover.add(Sphere(pin, lambda));
  return cover;
}

Verdict PinnedReport::verdict() const noexcept {
  if (!hypothesis_met) return Verdict::vacuous;
  return conclusion_holds ? Verdict::holds : Verdict::violated;
}

PinnedReport check_pinned_average(const PointSet& points, const Rational& epsilon) {
  PinnedReport r = pinned_base(points, epsilon, PinnedReport::Kind::average);
  const BigInt num = epsilon.num, den = epsilon.den;
  const BigInt size = r.point_count;
  r.hypothesis_met = size * size * num * num >= (den - num) * den * big_pow(r.q, r.d + 1);
  r.conclusion_holds = den * r.distance_sum > (den - num) * r.q * size;
  return r;
}

PinnedReport check_pinned_fraction(const PointSet& points, const Rational& alpha) {
  PinnedReport r = pinned_base(points, alpha, PinnedReport::Kind::fraction);
  const BigInt num = alpha.num, den = alpha.den;
  const BigInt size = r.point_count;
  const BigInt num2 = num * num, den2 = den * den;
  r.hypothesis_met = size * size * num2 * num2 >= (den2 - num2) * den2 * big_pow(r.q, r.d + 1);
  for (std::uint64_t s : r.pin_sizes) {
    if (den * s > (den - num) * r.q) ++r.rich_pins;
  }
  r.conclusion_holds = den * r.rich_pins >= (den - num) * size;
  return r;
}

SphereFamily determined_circles(const PointSet& points, std::uint64_t budget) {
  const Space& space = points.space();
  require_plane(space);
  const std::uint64_t n = points.size();
  const BigInt triples = n < 3 ? BigInt(0) : BigInt(n) * (n - 1) * (n - 2) / 6;
  if (triples > budget || space.sphere_count() > budget) {
    throw Error(ErrorCode::budget_exceeded,
                "determined-circle search over " + triples.str() + " triples exceeds budget " +
                    std::to_string(budget));
  }
  const FieldSpec& field = space.field();
  const std::uint64_t q = space.q();
  std::vector<char> hit(space.sphere_count());
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = i + 1; j < n; ++j) {
      for (std::uint64_t k = j + 1; k < n; ++k) {
        auto c = solve_circle(field, points[i].coords(), points[j].coords(), points[k].coords());
        if (c) hit[((*c)[1] * q + (*c)[0]) * q + (*c)[2]] = 1;
      }
    }
  }
  SphereFamily out(space);
  for (std::uint64_t key = 0; key < hit.size(); ++key) {
    if (!hit[key]) continue;
    Point center = Point::from_residues(space, space.decode(key / q, 2));
    out.add(Sphere(center, FieldElement(field, key % q)));
  }
  return out;
}

namespace {

// Calls fn(center, lambda, indices of P on that circle) for every circle.
template <typename Fn>
void scan_circles(const PointSet& points, std::uint64_t budget, Fn&& fn) {
  const Space& space = points.space();
  require_plane(space);
  if (space.sphere_count() > budget) {
    throw Error(ErrorCode::budget_exceeded, "circle scan over " +
                                                std::to_string(space.sphere_count()) +
                                                " circles exceeds budget " + std::to_string(budget));
  }
  const FieldSpec& field = space.field();
  std::vector<std::vector<std::size_t>> buckets(space.q());
  for (std::uint64_t c = 0; c < space.point_count(); ++c) {
    Point center = Point::from_residues(space, space.decode(c, 2));
    for (auto& b : buckets) b.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
      buckets[squared_distance(field, points[i].coords(), center.coords())].push_back(i);
    }
    for (std::uint64_t lambda = 0; lambda < space.q(); ++lambda) fn(center, lambda, buckets[lambda]);
  }
}

bool all_collinear(const PointSet& points, const std::vector<std::size_t>& idx) {
  if (idx.size() < 3) return true;
  const Point& a = points[idx[0]];
  const Point& b = points[idx[1]];
  for (std::size_t k = 2; k < idx.size(); ++k) {
    if (!collinear(a, b, points[idx[k]])) return false;
  }
  return true;
}

}  // namespace

SphereFamily rich_circles(const PointSet& points, std::uint64_t min_points, std::uint64_t budget) {
  SphereFamily out(points.space());
  const FieldSpec& field = points.space().field();
  scan_circles(points, budget,
               [&](const Point& center, std::uint64_t lambda, const std::vector<std::size_t>& on) {
                 if (on.size() >= min_points) out.add(Sphere(center, FieldElement(field, lambda)));
               });
  return out;
}

Verdict BeckReport::verdict() const noexcept {
  if (!cross_check_agrees) return Verdict::violated;
  if (!hypothesis_met) return Verdict::vacuous;
  return conclusion_holds && poor_bound_holds ? Verdict::holds : Verdict::violated;
}

BeckReport check_beck(const PointSet& points, std::uint64_t budget) {
  const Space& space = points.space();
  require_plane(space);
  BeckReport r;
  r.q = space.q();
  r.point_count = points.size();
  r.circle_total = space.sphere_count();

  SphereFamily determined = determined_circles(points, budget);
  r.determined_count = determined.size();
  for (const Sphere& s : determined) {
    if (!s.lambda().is_zero()) ++r.determined_nonzero_radius;
  }

  r.rich_count = rich_circles(points, 3, budget).size();
  std::uint64_t collinear_rich = 0;
  scan_circles(points, budget,
               [&](const Point&, std::uint64_t, const std::vector<std::size_t>& on) {
                 if (on.size() >= 3 && all_collinear(points, on)) ++collinear_rich;
               });
  r.rich_noncollinear_count = r.rich_count - collinear_rich;
  r.cross_check_agrees = r.rich_noncollinear_count == r.determined_count;

  const BigInt q3 = big_pow(r.q, 3);
  r.bound = static_cast<std::uint64_t>((4 * q3 + 8) / 9);
  r.poor_circle_count = r.circle_total - r.rich_count;
  r.poor_bound_holds = 9 * BigInt(r.poor_circle_count) < 5 * q3;
  r.hypothesis_met = r.point_count >= 5 * r.q;
  r.conclusion_holds = r.determined_count >= r.bound;
  return r;
}

}  // namespace fqinc
