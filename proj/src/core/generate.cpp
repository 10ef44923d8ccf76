#include "fqinc/generate.hpp"

#include <algorithm>
#include <charconv>

#include "fqinc/error.hpp"
#include "fqinc/rng.hpp"

namespace fqinc {

namespace {

std::uint64_t parse_count(std::string_view text, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::parse_error, "bad size in shape \"" + std::string(whole) + "\"");
  }
  return v;
}

void require_plane(const Space& space, std::string_view what) {
  if (space.dim() != 2) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " shape needs d = 2, got d = " + std::to_string(space.dim()));
  }
}

PointSet sorted_set(const Space& space, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  return PointSet(space, points);
}

}  // namespace

GeneratorShape parse_shape(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "full" && arg.empty()) return shape::Full{};
  if (name == "line" && arg.empty()) return shape::Line{};
  if (name == "random") return shape::Random{parse_count(arg, text)};
  if (name == "circle") return shape::CircleSubset{parse_count(arg, text)};
  if (name == "grid") {
    auto x = arg.find('x');
    if (x == std::string_view::npos) {
      throw Error(ErrorCode::parse_error, "grid shape is grid:AxB, got \"" + std::string(text) + "\"");
    }
    return shape::Grid{parse_count(arg.substr(0, x), text), parse_count(arg.substr(x + 1), text)};
  }
  throw Error(ErrorCode::parse_error, "unknown shape \"" + std::string(text) + "\"");
}

std::string to_string(const GeneratorShape& s) {
  struct Visitor {
    std::string operator()(const shape::Random& r) const { return "random:" + std::to_string(r.n); }
    std::string operator()(const shape::Full&) const { return "full"; }
    std::string operator()(const shape::Line&) const { return "line"; }
    std::string operator()(const shape::CircleSubset& c) const {
      return "circle:" + std::to_string(c.n);
    }
    std::string operator()(const shape::Grid& g) const {
      return "grid:" + std::to_string(g.a) + "x" + std::to_string(g.b);
    }
  };
  return std::visit(Visitor{}, s);
}

PointSet generate(const Space& space, std::uint64_t seed, const GeneratorShape& shape) {
  Rng rng(seed);
  const FieldSpec& field = space.field();
  const std::uint64_t q = space.q();

  if (std::holds_alternative<shape::Full>(shape)) return PointSet::full(space);

  if (auto* r = std::get_if<shape::Random>(&shape)) {
    if (r->n > space.point_count()) {
      throw Error(ErrorCode::invalid_argument, "random:" + std::to_string(r->n) + " exceeds q^d = " +
                                                   std::to_string(space.point_count()));
    }
    std::vector<Point> points;
    for (std::uint64_t key : rng.sample(space.point_count(), r->n)) {
      points.push_back(Point::from_residues(space, space.decode(key, space.dim())));
    }
    return sorted_set(space, std::move(points));
  }

  if (std::holds_alternative<shape::Line>(shape)) {
    require_plane(space, "line");
    const std::uint64_t x0 = rng.below(q), y0 = rng.below(q);
    // Direction (1, m) or (0, 1), each of the q + 1 slopes equally likely.
    const std::uint64_t slope = rng.below(q + 1);
    const std::uint64_t dx = slope == q ? 0 : 1;
    const std::uint64_t dy = slope == q ? 1 : slope;
    std::vector<Point> points;
    for (std::uint64_t t = 0; t < q; ++t) {
      points.push_back(Point::from_residues(
          space, {static_cast<Residue>(field.add(x0, field.mul(t, dx))),
                  static_cast<Residue>(field.add(y0, field.mul(t, dy)))}));
    }
    return sorted_set(space, std::move(points));
  }

  if (auto* c = std::get_if<shape::CircleSubset>(&shape)) {
    require_plane(space, "circle");
    Point center = Point::from_residues(
        space, {static_cast<Residue>(rng.below(q)), static_cast<Residue>(rng.below(q))});
    FieldElement lambda(field, 1 + rng.below(q - 1));
    std::vector<Point> on = sphere_points(Sphere(center, lambda));
    if (c->n > on.size()) {
      throw Error(ErrorCode::invalid_argument, "circle:" + std::to_string(c->n) + " exceeds the " +
                                                   std::to_string(on.size()) +
                                                   " points of the chosen circle");
    }
    std::vector<Point> points;
    for (std::uint64_t i : rng.sample(on.size(), c->n)) points.push_back(on[i]);
    return sorted_set(space, std::move(points));
  }

  const auto& g = std::get<shape::Grid>(shape);
  if (space.dim() < 2) {
    throw Error(ErrorCode::invalid_argument, "grid shape needs d >= 2");
  }
  if (g.a > q || g.b > q) {
    throw Error(ErrorCode::invalid_argument, "grid sides must not exceed q = " + std::to_string(q));
  }
  std::vector<Point> points;
  for (std::uint64_t i = 0; i < g.a; ++i) {
    for (std::uint64_t j = 0; j < g.b; ++j) {
      Coords coords(space.dim(), 0);
      coords[0] = static_cast<Residue>(i);
      coords[1] = static_cast<Residue>(j);
      points.push_back(Point::from_residues(space, std::move(coords)));
    }
  }
  return sorted_set(space, std::move(points));
}

SphereFamily random_spheres(const Space& space, std::uint64_t seed, std::uint64_t n) {
  if (n > space.sphere_count()) {
    throw Error(ErrorCode::invalid_argument, "random:" + std::to_string(n) + " exceeds q^(d+1) = " +
                                                 std::to_string(space.sphere_count()));
  }
  Rng rng(seed);
  SphereFamily out(space);
  for (std::uint64_t key : rng.sample(space.sphere_count(), n)) {
    Point center = Point::from_residues(space, space.decode(key / space.q(), space.dim()));
    out.add(Sphere(center, FieldElement(space.field(), key % space.q())));
  }
  return out;
}

}  // namespace fqinc
