#include "fqinc/geometry.hpp"

#include <limits>
#include <string>

#include "fqinc/error.hpp"

namespace fqinc {

Space::Space(const FieldSpec& field, unsigned dim) : field_(field), dim_(dim), point_count_(1) {
  if (dim == 0) {
    throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  }
  constexpr std::uint64_t kLimit = std::numeric_limits<std::uint64_t>::max() >> 1;
  std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= dim; ++i) {
    if (total > kLimit / q) {
      throw Error(ErrorCode::invalid_argument,
                  "q^(d+1) overflows 63 bits for q=" + std::to_string(q) +
                      " d=" + std::to_string(dim));
    }
    total *= q;
    if (i + 1 == dim) point_count_ = total;
  }
}

std::uint64_t Space::encode(std::span<const Residue> coords) const noexcept {
  std::uint64_t key = 0;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) key = key * q() + *it;
  return key;
}

Coords Space::decode(std::uint64_t key, unsigned length) const {
  Coords out(length);
  for (unsigned i = 0; i < length; ++i) {
    out[i] = static_cast<Residue>(key % q());
    key /= q();
  }
  return out;
}

void require_same_space(const Space& a, const Space& b) {
  if (a != b) {
    throw Error(ErrorCode::context_mismatch,
                "context mismatch: (q=" + std::to_string(a.q()) + ", d=" + std::to_string(a.dim()) +
                    ") vs (q=" + std::to_string(b.q()) + ", d=" + std::to_string(b.dim()) + ")");
  }
}

Point::Point(const Space& space, Coords coords, int) : space_(space), coords_(std::move(coords)) {}

Point::Point(const Space& space, std::span<const std::int64_t> coords) : space_(space) {
  if (coords.size() != space.dim()) {
    throw Error(ErrorCode::invalid_argument, "point needs " + std::to_string(space.dim()) +
                                                 " coordinates, got " +
                                                 std::to_string(coords.size()));
  }
  coords_.reserve(coords.size());
  for (std::int64_t c : coords) coords_.push_back(static_cast<Residue>(space.field().reduce(c)));
}

Point::Point(const Space& space, std::initializer_list<std::int64_t> coords)
    : Point(space, std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Point Point::from_residues(const Space& space, Coords coords) {
  if (coords.size() != space.dim()) {
    throw Error(ErrorCode::invalid_argument, "point needs " + std::to_string(space.dim()) +
                                                 " coordinates, got " +
                                                 std::to_string(coords.size()));
  }
  for (Residue c : coords) {
    if (c >= space.q()) {
      throw Error(ErrorCode::invalid_argument,
                  "coordinate " + std::to_string(c) + " out of range for q=" +
                      std::to_string(space.q()));
    }
  }
  return Point(space, std::move(coords), 0);
}

Point Point::origin(const Space& space) { return Point(space, Coords(space.dim(), 0), 0); }

FieldElement Point::coord(unsigned i) const { return FieldElement(space_.field(), coords_.at(i)); }

Sphere::Sphere(const Point& center, const FieldElement& lambda) : center_(center), lambda_(lambda) {
  if (lambda.spec() != center.space().field()) {
    throw Error(ErrorCode::context_mismatch, "sphere radius and center live in different fields");
  }
}

std::uint64_t Sphere::key() const noexcept {
  return center_.key() * center_.space().q() + lambda_.value();
}

FqVector::FqVector(const FieldSpec& field, Coords coords) : field_(field), coords_(std::move(coords)) {
  for (Residue& c : coords_) c = static_cast<Residue>(c % field.order());
}

FqVector::FqVector(const FieldSpec& field, std::initializer_list<std::int64_t> coords)
    : field_(field) {
  for (std::int64_t c : coords) coords_.push_back(static_cast<Residue>(field.reduce(c)));
}

bool FqVector::is_zero() const noexcept {
  for (Residue c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

namespace {

void require_same_shape(const FqVector& a, const FqVector& b) {
  if (a.field() != b.field() || a.size() != b.size()) {
    throw Error(ErrorCode::context_mismatch, "vectors from different ambient groups");
  }
}

void require_plane(const Point& p) {
  if (p.dim() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "circle operations need d = 2, got d = " + std::to_string(p.dim()));
  }
}

}  // namespace

FqVector operator+(const FqVector& a, const FqVector& b) {
  require_same_shape(a, b);
  Coords out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Residue>(a.field().add(a.coords()[i], b.coords()[i]));
  }
  return FqVector(a.field(), std::move(out));
}

FqVector operator-(const FqVector& a, const FqVector& b) {
  require_same_shape(a, b);
  Coords out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Residue>(a.field().sub(a.coords()[i], b.coords()[i]));
  }
  return FqVector(a.field(), std::move(out));
}

std::uint64_t squared_distance(const FieldSpec& field, std::span<const Residue> x,
                               std::span<const Residue> y) noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t diff = field.sub(x[i], y[i]);
    acc = field.add(acc, field.mul(diff, diff));
  }
  return acc;
}

std::uint64_t squared_norm(const FieldSpec& field, std::span<const Residue> x) noexcept {
  std::uint64_t acc = 0;
  for (Residue c : x) acc = field.add(acc, field.mul(c, c));
  return acc;
}

FieldElement distance(const Point& x, const Point& y) {
  require_same_space(x.space(), y.space());
  return FieldElement(x.space().field(),
                      squared_distance(x.space().field(), x.coords(), y.coords()));
}

bool sphere_contains(const Sphere& s, const Point& p) {
  return distance(p, s.center()) == s.lambda();
}

std::vector<Point> sphere_points(const Sphere& s, std::uint64_t budget) {
  const Space& space = s.space();
  if (space.point_count() > budget) {
    throw Error(ErrorCode::budget_exceeded,
                "sphere scan needs " + std::to_string(space.point_count()) +
                    " points, budget is " + std::to_string(budget));
  }
  std::vector<Point> out;
  const FieldSpec& field = space.field();
  for (std::uint64_t key = 0; key < space.point_count(); ++key) {
    Coords c = space.decode(key, space.dim());
    if (squared_distance(field, c, s.center().coords()) == s.lambda().value()) {
      out.push_back(Point::from_residues(space, std::move(c)));
    }
  }
  return out;
}

LiftedVector lift(const Point& p) {
  Coords c(p.coords().begin(), p.coords().end());
  c.push_back(static_cast<Residue>(squared_norm(p.space().field(), p.coords())));
  return LiftedVector(p.space().field(), std::move(c));
}

bool lifted_contains(const LiftedVector& v) {
  if (v.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "lifted vectors have at least 2 coordinates");
  }
  auto c = v.coords();
  return squared_norm(v.field(), c.first(c.size() - 1)) == c.back();
}

bool collinear(const Point& p1, const Point& p2, const Point& p3) {
  require_plane(p1);
  require_same_space(p1.space(), p2.space());
  require_same_space(p1.space(), p3.space());
  const FieldSpec& f = p1.space().field();
  auto a = p1.coords(), b = p2.coords(), c = p3.coords();
  std::uint64_t lhs = f.mul(f.sub(b[0], a[0]), f.sub(c[1], a[1]));
  std::uint64_t rhs = f.mul(f.sub(c[0], a[0]), f.sub(b[1], a[1]));
  return lhs == rhs;
}

std::optional<std::array<std::uint64_t, 3>> solve_circle(const FieldSpec& f,
                                                         std::span<const Residue> p1,
                                                         std::span<const Residue> p2,
                                                         std::span<const Residue> p3) noexcept {
  const std::uint64_t x1 = p1[0], y1 = p1[1];
  const std::uint64_t x2 = p2[0], y2 = p2[1];
  const std::uint64_t x3 = p3[0], y3 = p3[1];

  // 2(x1-x2) a + 2(y1-y2) b = |p1|^2 - |p2|^2
  // 2(x1-x3) a + 2(y1-y3) b = |p1|^2 - |p3|^2
  const std::uint64_t m11 = f.mul(2, f.sub(x1, x2));
  const std::uint64_t m12 = f.mul(2, f.sub(y1, y2));
  const std::uint64_t m21 = f.mul(2, f.sub(x1, x3));
  const std::uint64_t m22 = f.mul(2, f.sub(y1, y3));
  const std::uint64_t n1 = f.add(f.mul(x1, x1), f.mul(y1, y1));
  const std::uint64_t r1 = f.sub(n1, f.add(f.mul(x2, x2), f.mul(y2, y2)));
  const std::uint64_t r2 = f.sub(n1, f.add(f.mul(x3, x3), f.mul(y3, y3)));

  // det = 4[(x1-x2)(y1-y3) - (x1-x3)(y1-y2)]; zero exactly for collinear or
  // repeated points.
  const std::uint64_t det = f.sub(f.mul(m11, m22), f.mul(m12, m21));
  if (det == 0) return std::nullopt;
  const std::uint64_t det_inv = f.inv(det);
  const std::uint64_t a = f.mul(f.sub(f.mul(r1, m22), f.mul(m12, r2)), det_inv);
  const std::uint64_t b = f.mul(f.sub(f.mul(m11, r2), f.mul(r1, m21)), det_inv);
  const std::uint64_t dx = f.sub(x1, a);
  const std::uint64_t dy = f.sub(y1, b);
  return std::array<std::uint64_t, 3>{a, b, f.add(f.mul(dx, dx), f.mul(dy, dy))};
}

std::optional<Sphere> circle_through(const Point& p1, const Point& p2, const Point& p3) {
  require_plane(p1);
  require_same_space(p1.space(), p2.space());
  require_same_space(p1.space(), p3.space());
  const Space& space = p1.space();
  auto solved = solve_circle(space.field(), p1.coords(), p2.coords(), p3.coords());
  if (!solved) return std::nullopt;
  const auto [a, b, lambda] = *solved;
  Point center = Point::from_residues(space, {static_cast<Residue>(a), static_cast<Residue>(b)});
  return Sphere(center, FieldElement(space.field(), lambda));
}

}  // namespace fqinc
